"""starpull: exact ideal arithmetic and star-operation calculus on
pullback rings R = phi^-1(D) inside T = K[X] or K[X]_(X).

The library verifies structural facts about divisorial and t-ideals,
class-group maps, and Prufer multiplication behavior on a small catalog
of computable instances, certifying every closed form against
definitional membership oracles.
"""

from .base_domain import (
    BaseDomain,
    ClassLabel,
    DomainError,
    ExtDModule,
    class_label_D,
    dmod_arith,
    dmod_colon,
    dmod_from_generators,
    dmod_intersect,
    dmod_predicates,
    dmod_scale,
    dmod_v,
)
from .class_groups import (
    ClassGroupError,
    RClassWitness,
    alpha,
    beta,
    class_equivalent_R,
    class_label_R,
    gamma,
    invertibility_R,
    is_principal_R,
)
from .exprlang import (
    ExprError,
    evaluate,
    parse_expression,
    pretty_value,
    value_to_expr,
)
from .harness import (
    Report,
    SampleParams,
    SUITES,
    replay_violation,
    run_suite,
    sample_ideals,
    verify_extension_laws,
    verify_oracle_agreement,
    verify_pic_splitting,
    verify_pvmd,
    verify_quasilocal_iso,
    verify_split_exact,
)
from .kernel import (
    FieldElem,
    KernelError,
    Poly,
    RatFunc,
    eval_at_zero,
    field_arith,
    ord_at_zero,
    poly_gcd,
)
from .pullback import (
    DegreeWindow,
    PullbackError,
    PullbackInstance,
    RawIdeal,
    StructuredIdeal,
    TIdeal,
    colon_R,
    content_T,
    extend_to_T,
    ideal_arith,
    ideal_equal,
    instance_catalog,
    inverse_image_R,
    m_ideal,
    make_instance,
    member_R,
    oracle_colon_member,
    oracle_v_member,
    r_ideal,
    structured_hull,
    t_closure_R,
    t_ideal_of_r,
    unit_group_predicates,
    v_closure_R,
)
from .star_ops import (
    StarEvalError,
    StarOp,
    star_axiom_check,
    star_eval,
    star_leq_check,
    star_meet,
)

__version__ = "0.1.0"
