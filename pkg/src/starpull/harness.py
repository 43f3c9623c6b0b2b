"""Seeded samplers and theorem-conformance suites with JSON reports.

Each suite draws a deterministic sample population from its parameters,
runs exact checks per sample, and assembles a report whose verdict is
"pass" exactly when the violation list is empty.  Violations carry
replayable witnesses: the offending values are serialized in the
expression language and ``replay_violation`` re-runs the failed check
from that data alone.  Identical (instance, suite, params) inputs
produce byte-identical JSON.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from .base_domain import (
    ExtDModule,
    _ideal_of_form,
    class_label_D,
    dmod_from_generators,
    dmod_predicates,
    dmod_v,
)
from .class_groups import (
    alpha,
    beta,
    gamma,
    invertibility_R,
    is_principal_R,
    class_equivalent_R,
)
from .exprlang import evaluate, parse_expression, value_to_expr
from .kernel import FieldElem, Poly, RatFunc, ord_at_zero
from .pullback import (
    DegreeWindow,
    certified_colon_probes,
    PullbackError,
    PullbackInstance,
    RawIdeal,
    as_structured,
    colon_R,
    extend_to_T,
    ideal_arith,
    ideal_equal,
    m_ideal,
    member_R,
    member_structured,
    oracle_colon_member,
    oracle_v_member,
    r_ideal,
    structured_hull,
    t_closure_R,
    v_closure_R,
)
from .star_ops import StarOp, star_eval


class HarnessError(ValueError):
    """Suite precondition failure."""


class SampleParams:
    """Deterministic sampling bounds; equal seeds give equal populations."""

    __slots__ = ("seed", "count", "max_gens", "max_degree", "coeff_height", "degree_window")

    def __init__(self, seed: int = 0, count: int = 100, max_gens: int = 3,
                 max_degree: int = 3, coeff_height: int = 6, degree_window: int = 12):
        for name, v in (("count", count), ("max_gens", max_gens), ("max_degree", max_degree),
                        ("coeff_height", coeff_height), ("degree_window", degree_window)):
            if v <= 0:
                raise HarnessError(f"{name} must be positive")
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "count", count)
        object.__setattr__(self, "max_gens", max_gens)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "coeff_height", coeff_height)
        object.__setattr__(self, "degree_window", degree_window)

    def __setattr__(self, name, value):
        raise AttributeError("SampleParams is immutable")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "max_gens": self.max_gens,
            "max_degree": self.max_degree,
            "coeff_height": self.coeff_height,
            "degree_window": self.degree_window,
        }


class Report:
    """Suite outcome: per-sample records plus a replayable violation list."""

    def __init__(self, suite: str, instance: str, params: SampleParams):
        self.suite = suite
        self.instance = instance
        self.params = params
        self.records: list[dict] = []
        self.violations: list[dict] = []
        self.n_samples = 0

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    def add_violation(self, check: str, expected, got, witness: dict):
        self.violations.append({
            "check": check,
            "expected": str(expected),
            "got": str(got),
            "witness": witness,
        })

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "seed": self.params.seed,
            "params": self.params.to_dict(),
            "n_samples": self.n_samples,
            "n_violations": len(self.violations),
            "violations": self.violations,
            "records": self.records,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

def _sample_fraction(rng: random.Random, height: int, nonzero=False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-height, height), rng.randint(1, 3))
        if q != 0 or not nonzero:
            return q


def _sample_scalar(rng: random.Random, inst: PullbackInstance, height: int,
                   nonzero=False, allow_surd=True) -> FieldElem:
    while True:
        x = _sample_fraction(rng, height)
        y = Fraction(0)
        if allow_surd and inst.k_disc != 1 and rng.random() < 0.5:
            y = _sample_fraction(rng, height)
        if y == 0:
            e = FieldElem(x)
        else:
            e = FieldElem(x, y, inst.k_disc)
        if not e.is_zero() or not nonzero:
            return e


def _sample_poly(rng: random.Random, inst: PullbackInstance, max_degree: int,
                 height: int) -> Poly:
    while True:
        deg = rng.randint(0, max_degree)
        coeffs = [_sample_scalar(rng, inst, height) for _ in range(deg + 1)]
        p = Poly(coeffs)
        if not p.is_zero():
            return p


def _sample_ratfunc(rng: random.Random, inst: PullbackInstance, params: SampleParams) -> RatFunc:
    num = _sample_poly(rng, inst, params.max_degree, params.coeff_height)
    f = RatFunc(num)
    roll = rng.random()
    if roll < 0.2:
        den = Poly([_sample_scalar(rng, inst, params.coeff_height, nonzero=True),
                    FieldElem(1)])
        f = f / RatFunc(den)
    if rng.random() < 0.25:
        f = f * RatFunc.x_power(rng.randint(-2, 2))
    return f


def _corner_ideals(inst: PullbackInstance) -> list[RawIdeal]:
    x = RatFunc.x_power(1)
    two = RatFunc.coerce(2)
    corners = [
        RawIdeal([x]),
        RawIdeal([two, x]),
        RawIdeal([RatFunc.coerce(3)]),
        RawIdeal([x * two, x * x]),
        RawIdeal([x * x, x * RatFunc.coerce(Fraction(1, 2))]),
    ]
    if inst.k_disc != 1:
        surd = RatFunc(Poly([FieldElem(0, 1, inst.k_disc)]))
        corners.append(RawIdeal([RatFunc.one(), surd]))
        corners.append(RawIdeal([two, RatFunc.one() + surd]))
    return corners


def sample_ideals(inst: PullbackInstance, params: SampleParams) -> list[RawIdeal]:
    """Deterministic raw-ideal population with forced corner cases."""
    rng = random.Random(params.seed)
    out = list(_corner_ideals(inst))[: params.count]
    while len(out) < params.count:
        n = rng.randint(1, params.max_gens)
        gens = [_sample_ratfunc(rng, inst, params) for _ in range(n)]
        try:
            out.append(RawIdeal(gens))
        except PullbackError:
            continue
    return out


def sample_dmods(inst: PullbackInstance, params: SampleParams) -> list[ExtDModule]:
    """Deterministic population of nonzero fractional D-ideals.

    Generators are drawn inside the quotient field of D, so the modules
    are honest fractional ideals even when that field is smaller than k.
    """
    rng = random.Random(params.seed + 1)
    allow_surd = inst.base.quotient_field_is_k()
    out = []
    while len(out) < params.count:
        n = rng.randint(1, params.max_gens)
        gens = [_sample_scalar(rng, inst, params.coeff_height, allow_surd=allow_surd)
                for _ in range(n)]
        mod = dmod_from_generators(gens, inst.base)
        if mod.is_zero():
            continue
        out.append(mod)
    return out


def sample_elements_of_M(inst: PullbackInstance, params: SampleParams, count: int) -> list[RatFunc]:
    rng = random.Random(params.seed + 2)
    out = []
    while len(out) < count:
        f = RatFunc(_sample_poly(rng, inst, params.max_degree, params.coeff_height))
        out.append(f * RatFunc.x_power(rng.randint(1, 2)))
    return out


def _class_representatives(inst: PullbackInstance) -> list[ExtDModule]:
    base = inst.base
    if base.kind != "quadratic_order":
        return [base.unit_module()]
    return [_ideal_of_form(f, base) for f in sorted(base._label_of_form)]


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def verify_split_exact(inst: PullbackInstance, op: StarOp, params: SampleParams) -> Report:
    """Injectivity, splitting, and kernel capture of the class sequence."""
    if not (inst.is_square_plus and inst.phi_tilde_surjective):
        raise HarnessError("split-exact needs a square-plus instance with surjective unit map")
    rep = Report("split-exact", inst.name, params)
    rep.records.append({"check": "class-group",
                        "presentation": list(inst.base.class_presentation)})
    reps = _class_representatives(inst)
    # injectivity across class representatives
    for i, j1 in enumerate(reps):
        for j2 in reps[i + 1:]:
            equal = class_equivalent_R(alpha(j1, inst), alpha(j2, inst), op, inst)
            rec = {"check": "alpha-injective", "classes": [str(class_label_D(j1, inst.base)),
                                                           str(class_label_D(j2, inst.base))]}
            rep.records.append(rec)
            if equal:
                rep.add_violation("alpha-injective", "distinct classes", "equivalent",
                                  {"j1": _dmod_witness(j1), "j2": _dmod_witness(j2)})
    # splitting and triviality of beta on representatives and sampled D-ideals
    dmods = reps + sample_dmods(inst, params)[: params.count // 2]
    for j in dmods:
        if not dmod_predicates(j, inst.base).is_v_invertible:
            continue
        image = alpha(j, inst)
        expected = class_label_D(dmod_v(j, inst.base), inst.base)
        got = gamma(image, inst)
        t_gen = beta(image, inst).gen
        rep.records.append({
            "check": "splitting",
            "ideal": _dmod_witness(j),
            "op": str(op),
            "class_label": str(expected),
            "alpha_image": value_to_expr(image, inst),
            "beta_image": value_to_expr(beta(image, inst), inst),
            "gamma_of_alpha": str(got),
        })
        if got != expected:
            rep.add_violation("gamma-alpha-identity", expected, got, {"j": _dmod_witness(j)})
        if not t_gen.is_one():
            rep.add_violation("beta-trivial-on-alpha", "T", str(t_gen), {"j": _dmod_witness(j)})
    # kernel capture on sampled op-invertible ideals
    for raw in sample_ideals(inst, params):
        rep.n_samples += 1
        closed = t_closure_R(raw, inst)
        witness = invertibility_R(closed, op, inst)
        record = {
            "check": "kernel-capture",
            "ideal": value_to_expr(raw, inst),
            "op": str(op),
            "certificates": witness.certificate,
        }
        if witness.is_star_invertible:
            j = closed.dpart
            if not dmod_predicates(j, inst.base).is_v_invertible:
                rep.add_violation("kernel-capture", "invertible dpart", "not invertible",
                                  {"ideal": value_to_expr(raw, inst)})
            else:
                preimage = alpha(j, inst)
                captured = class_equivalent_R(closed, preimage, op, inst)
                record["class_label"] = str(gamma(closed, inst))
                record["alpha_preimage"] = value_to_expr(preimage, inst)
                record["beta_image"] = value_to_expr(beta(closed, inst), inst)
                if not captured:
                    rep.add_violation("kernel-capture", "class equivalent to alpha preimage",
                                      "not equivalent", {"ideal": value_to_expr(raw, inst)})
        rep.records.append(record)
    return rep


def _dmod_witness(j: ExtDModule) -> str:
    # serialized as an ideal of constant generators, so replay can parse it
    from .exprlang import elem_to_expr
    if j.is_zero():
        return "ideal(0)"
    if j.is_full():
        return "full"
    return "ideal(" + ", ".join(elem_to_expr(b) for b in j.basis_elements()) + ")"


def verify_quasilocal_iso(inst: PullbackInstance, op: StarOp, params: SampleParams) -> Report:
    """Every invertible ideal reduces to an alpha preimage when T is local."""
    if not inst.t_quasilocal:
        raise HarnessError("quasilocal-iso needs a quasilocal T (instances B, E)")
    rep = Report("quasilocal-iso", inst.name, params)
    for raw in sample_ideals(inst, params):
        rep.n_samples += 1
        closed = t_closure_R(raw, inst)
        witness = invertibility_R(closed, op, inst)
        record = {"ideal": value_to_expr(raw, inst), "certificates": witness.certificate}
        rep.records.append(record)
        if not witness.is_star_invertible:
            record["skipped"] = "not invertible"
            continue
        # T-generator drawn from the generators themselves
        e = min(ord_at_zero(g) for g in raw.gens)
        i_gen = next(g for g in raw.gens if ord_at_zero(g) == e)
        shifted = RawIdeal([g / i_gen for g in raw.gens])
        s1 = t_closure_R(shifted, inst)
        record["i_generator"] = value_to_expr(i_gen, inst)
        record["normalized"] = value_to_expr(s1, inst)
        if not s1.unit.is_one() or s1.dpart.is_full():
            rep.add_violation("normalized-window", "M < I1 <= I1^v < T", repr(s1),
                              {"ideal": value_to_expr(raw, inst)})
            continue
        preimage = alpha(s1.dpart, inst)
        if not class_equivalent_R(closed, preimage, op, inst):
            rep.add_violation("alpha-preimage", "class equivalent", "not equivalent",
                              {"ideal": value_to_expr(raw, inst)})
        gen = is_principal_R(closed, inst)
        record["principal"] = gen is not None and value_to_expr(gen, inst)
        if gen is None:
            rep.add_violation("trivial-class", "principal", "not principal",
                              {"ideal": value_to_expr(raw, inst)})
    return rep


# structural flags for the named non-computable examples: both have a
# two-generated maximal-ideal obstruction, so T_M is not a valuation domain
STRUCTURAL_PVMD_FLAGS = (
    {"T": "k[X^2,X^3]_Q", "t_m_valuation": False, "pvmd": False},
    {"T": "Q[X^2,XY,Y^2]_(X^2,XY,Y^2)", "t_m_valuation": False, "pvmd": False},
)


def pvmd_structural_verdict(inst: PullbackInstance) -> bool:
    # catalogued T is a PID or a DVR, and T at M is the DVR K[X]_(X)
    return inst.is_square_plus and inst.base.is_pvmd


def _witness_search_family(inst: PullbackInstance) -> list[RawIdeal]:
    one = RatFunc.one()
    x = RatFunc.x_power(1)
    consts = [one, RatFunc.coerce(2)]
    if inst.k_disc != 1:
        consts.insert(1, RatFunc(Poly([FieldElem(0, 1, inst.k_disc)])))
    family = []
    atoms = consts + [x, x * RatFunc.coerce(2)]
    for i, g1 in enumerate(atoms):
        for g2 in atoms[i + 1:]:
            family.append(RawIdeal([g1, g2]))
    return family


def verify_pvmd(inst: PullbackInstance, op: StarOp, params: SampleParams) -> Report:
    """Finite-type invertibility of every sampled ideal, or a witness against it."""
    rep = Report("pvmd", inst.name, params)
    structural = pvmd_structural_verdict(inst)
    rep.records.append({
        "check": "structural-flags",
        "pvmd": structural,
        "qf_D_is_k": inst.is_square_plus,
        "D_pvmd": inst.base.is_pvmd,
        "T_M_valuation": True,
    })
    for entry in STRUCTURAL_PVMD_FLAGS:
        rep.records.append({"check": "structural-only", **entry})
    witness_found = None
    if not structural:
        for cand in _witness_search_family(inst):
            product = ideal_arith(cand, colon_R(cand, inst), "mul", inst)
            closed = star_eval(op, product, inst)
            if not ideal_equal(closed, r_ideal(inst), inst):
                confirmed = _confirm_noninvertibility(cand, inst)
                witness_found = {
                    "ideal": value_to_expr(cand, inst),
                    "closure": value_to_expr(as_structured(closed, inst), inst),
                    "oracle_confirmed": confirmed,
                }
                rep.records.append({"check": "witness", **witness_found})
                if not confirmed:
                    rep.add_violation("witness-oracle", "oracle confirmation", "unconfirmed",
                                      {"ideal": value_to_expr(cand, inst)})
                break
    for raw in sample_ideals(inst, params):
        rep.n_samples += 1
        product = ideal_arith(raw, colon_R(raw, inst), "mul", inst)
        closed = star_eval(op, product, inst)
        invertible = ideal_equal(closed, r_ideal(inst), inst)
        rep.records.append({"ideal": value_to_expr(raw, inst), "t_invertible": invertible})
        if structural and not invertible:
            rep.add_violation("pvmd-sample", "t-invertible", "not invertible",
                              {"ideal": value_to_expr(raw, inst)})
        if not structural and not invertible and witness_found is None:
            witness_found = {"ideal": value_to_expr(raw, inst)}
    if not structural and witness_found is None:
        rep.add_violation("pvmd-witness", "a non-invertible witness", "none found",
                          {"family": "generator degree <= 1 search plus samples"})
    return rep


def _confirm_noninvertibility(raw: RawIdeal, inst: PullbackInstance) -> bool:
    """Definitional confirmation that (I * I^-1)^v omits 1.

    Every product of a generator with a certified inverse probe must lie
    in M (value zero), and some certified colon probe of the product
    must push 1 outside R.
    """
    inv = colon_R(raw, inst)
    window = DegreeWindow(degree=4)
    inv_probes = [p for p in _structured_probes(inv, inst, window)
                  if oracle_colon_member(p, raw, inst)]
    if not inv_probes:
        return False
    products = [g * p for g in raw.gens for p in inv_probes]
    if not all(inst.member_M(q) for q in products):
        return False
    # 1 * y escapes R for some y multiplying the whole product into R
    for y in _ring_probe_family(inst, window):
        if all(member_R(y * q, inst) for q in products) and not member_R(y, inst):
            return True
    return False


def _structured_probes(s, inst, window: DegreeWindow) -> list[RatFunc]:
    s = as_structured(s, inst)
    out = []
    if s.dpart.is_full():
        base = [s.unit]
    else:
        base = [s.unit * RatFunc.coerce(Poly.const(c)) for c in s.dpart.basis_elements()]
    for b in base:
        for j in range(0, window.degree + 1):
            out.append(b * RatFunc.x_power(j))
    return out


def _ring_probe_family(inst: PullbackInstance, window: DegreeWindow) -> list[RatFunc]:
    out = [RatFunc.coerce(Fraction(1, 2)), RatFunc.x_power(-1)]
    if inst.k_disc != 1:
        out.append(RatFunc(Poly([FieldElem(0, 1, inst.k_disc)])))
        out.append(RatFunc(Poly([FieldElem(Fraction(1, 2), Fraction(1, 2), inst.k_disc)])))
    return out


def _implemented_ops(inst: PullbackInstance) -> list[StarOp]:
    from .star_ops import star_meet
    d_d = StarOp.identity("D")
    v_d = StarOp.divisorial("D")
    ops = [
        StarOp.identity("R"),
        StarOp.divisorial("R"),
        StarOp.t_op("R"),
        StarOp.lifted(d_d),
        StarOp.lifted(v_d),
        star_meet(StarOp.lifted(v_d), StarOp.overring_induced(StarOp.identity("T"))),
    ]
    return ops


def verify_extension_laws(inst: PullbackInstance, params: SampleParams) -> Report:
    """Conductor fixing and the extension/restriction agreements on T."""
    rep = Report("extension-laws", inst.name, params)
    m = m_ideal(inst)
    for op in _implemented_ops(inst):
        fixed = ideal_equal(star_eval(op, m, inst), m, inst)
        rep.records.append({"check": "M-fixed", "op": str(op), "fixed": fixed})
        if not fixed:
            rep.add_violation("M-fixed", "M", "moved", {"op": str(op)})
    rng_count = 20
    v_r = StarOp.divisorial("R")
    t_r = StarOp.t_op("R")
    for r in sample_elements_of_M(inst, params, rng_count):
        rep.n_samples += 1
        rt = as_structured(extend_to_T(RawIdeal([r]), inst), inst)
        closed = star_eval(v_r, rt, inst)
        ok = ideal_equal(closed, rt, inst)
        rep.records.append({"check": "rT-divisorial", "r": value_to_expr(r, inst), "holds": ok})
        if not ok:
            rep.add_violation("rT-divisorial", "rT", value_to_expr(closed, inst),
                              {"r": value_to_expr(r, inst)})
    ext_t = StarOp.extended_T(t_r)
    rest_t = StarOp.restricted_T(t_r)
    ext_v = StarOp.extended_T(v_r)
    rng = random.Random(params.seed + 3)
    for _ in range(rng_count):
        c = _sample_ratfunc(rng, inst, params)
        while c.is_zero():
            c = _sample_ratfunc(rng, inst, params)
        ct = extend_to_T(RawIdeal([c]), inst)
        rep.n_samples += 1
        a = star_eval(ext_t, ct, inst)
        b = star_eval(rest_t, ct, inst)
        cc = star_eval(ext_v, ct, inst)
        rec = {"check": "extension-agreement", "c": value_to_expr(c, inst),
               "ext_eq_rest": a == b, "t_eq_v_extension": a == cc}
        rep.records.append(rec)
        if a != b:
            rep.add_violation("ext-vs-rest", str(a), str(b), {"c": value_to_expr(c, inst)})
        if a != cc:
            rep.add_violation("t-vs-v-extension", str(a), str(cc), {"c": value_to_expr(c, inst)})
    return rep


def verify_pic_splitting(inst: PullbackInstance, params: SampleParams) -> Report:
    """Invertible ideals decompose through the gamma label and the T part."""
    if not (inst.is_square_plus and inst.phi_tilde_surjective):
        raise HarnessError("pic-splitting needs a square-plus instance with surjective unit map")
    rep = Report("pic-splitting", inst.name, params)
    rep.records.append({"check": "class-group",
                        "presentation": list(inst.base.class_presentation)})
    d_op = StarOp.identity("R")
    for j in _class_representatives(inst):
        image = alpha(j, inst)
        witness = invertibility_R(image, d_op, inst)
        expected = class_label_D(j, inst.base)
        rec = {
            "check": "alpha-invertible",
            "ideal": _dmod_witness(j),
            "invertible": witness.is_invertible,
            "class_label": str(expected),
            "principal": witness.principal_gen is not None,
        }
        rep.records.append(rec)
        if not witness.is_invertible:
            rep.add_violation("alpha-invertible", "invertible", "not invertible",
                              {"j": _dmod_witness(j)})
        if (witness.principal_gen is not None) != expected.is_identity():
            rep.add_violation("label-vs-principal", str(expected.is_identity()),
                              str(witness.principal_gen is not None), {"j": _dmod_witness(j)})
    for raw in sample_ideals(inst, params):
        rep.n_samples += 1
        closed = structured_hull(raw, inst)
        witness = invertibility_R(closed, d_op, inst)
        if not witness.is_invertible:
            rep.records.append({"ideal": value_to_expr(raw, inst), "skipped": "not invertible"})
            continue
        label = gamma(closed, inst)
        t_part = beta(closed, inst)
        principal = is_principal_R(closed, inst) is not None
        rep.records.append({
            "ideal": value_to_expr(raw, inst),
            "class_label": str(label),
            "beta_image": value_to_expr(t_part, inst),
            "principal": principal,
        })
        if principal != label.is_identity():
            rep.add_violation("pic-decomposition", f"principal iff trivial label",
                              f"principal={principal}, label={label}",
                              {"ideal": value_to_expr(raw, inst)})
    return rep


def verify_oracle_agreement(inst: PullbackInstance, params: SampleParams) -> Report:
    """Closed-form colon and divisorial closure never contradict the oracles."""
    rep = Report("oracle-agreement", inst.name, params)
    window = DegreeWindow(degree=params.degree_window)
    for raw in sample_ideals(inst, params):
        rep.n_samples += 1
        closed_colon = colon_R(raw, inst)
        closed_v = v_closure_R(raw, inst)
        colon_grid = _agreement_grid(raw, closed_colon, inst, window)
        contradictions = 0
        for g in colon_grid:
            oracle = oracle_colon_member(g, raw, inst)
            closed = member_structured(g, closed_colon, inst)
            if oracle != closed:
                contradictions += 1
                rep.add_violation("colon-agreement", f"oracle={oracle}", f"closed={closed}",
                                  {"ideal": value_to_expr(raw, inst),
                                   "element": value_to_expr(g, inst)})
        v_grid = _v_grid(raw, closed_v, inst)
        probes = certified_colon_probes(raw, inst, window)
        for h in v_grid:
            verdict = oracle_v_member(h, raw, inst, window, probes=probes)
            inside = member_structured(h, closed_v, inst)
            if inside and verdict.status == "out-with-witness":
                contradictions += 1
                rep.add_violation("v-agreement", "member", "excluded by witness",
                                  {"ideal": value_to_expr(raw, inst),
                                   "element": value_to_expr(h, inst),
                                   "witness": value_to_expr(verdict.witness, inst)})
            if not inside and verdict.status == "in":
                contradictions += 1
                rep.add_violation("v-agreement", "non-member", "certified in",
                                  {"ideal": value_to_expr(raw, inst),
                                   "element": value_to_expr(h, inst)})
        rep.records.append({"ideal": value_to_expr(raw, inst),
                            "grid": len(colon_grid) + len(v_grid),
                            "contradictions": contradictions})
    return rep


def _agreement_grid(raw: RawIdeal, closed_colon, inst, window: DegreeWindow) -> list[RatFunc]:
    out = list(raw.gens)
    hull = structured_hull(raw, inst)
    inv_u = hull.unit.inv()
    if closed_colon.dpart.is_lattice():
        lifts = [inv_u * RatFunc.coerce(Poly.const(c))
                 for c in closed_colon.dpart.basis_elements()]
    else:
        lifts = [closed_colon.unit]
    out.extend(lifts)
    for b in list(raw.gens[:1]) + lifts[:1]:
        for j in range(1, window.degree + 1):
            out.append(b * RatFunc.x_power(j))
        out.append(b * RatFunc.x_power(-1))
    return out


def _v_grid(raw: RawIdeal, closed_v, inst) -> list[RatFunc]:
    hull = structured_hull(raw, inst)
    out = list(raw.gens)
    if closed_v.dpart.is_lattice():
        out.extend(hull.unit * RatFunc.coerce(Poly.const(c))
                   for c in closed_v.dpart.basis_elements())
    out.append(hull.unit * RatFunc.x_power(-1))
    out.append(hull.unit * RatFunc.coerce(Fraction(1, 3)))
    out.append(raw.gens[0] * RatFunc.x_power(1))
    return out


# ---------------------------------------------------------------------------
# registry, runner, replay
# ---------------------------------------------------------------------------

SUITES = {
    "split-exact": lambda inst, op, params: verify_split_exact(inst, op, params),
    "quasilocal-iso": lambda inst, op, params: verify_quasilocal_iso(inst, op, params),
    "pvmd": lambda inst, op, params: verify_pvmd(inst, op, params),
    "extension-laws": lambda inst, op, params: verify_extension_laws(inst, params),
    "pic-splitting": lambda inst, op, params: verify_pic_splitting(inst, params),
    "oracle-agreement": lambda inst, op, params: verify_oracle_agreement(inst, params),
}


def run_suite(suite: str, inst: PullbackInstance, params: SampleParams,
              op: StarOp | None = None) -> Report:
    if suite not in SUITES:
        raise HarnessError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return SUITES[suite](inst, op or StarOp.t_op("R"), params)


def replay_violation(violation: dict, inst: PullbackInstance) -> bool:
    """Re-run the failed check from its serialized witness.

    Returns True when the violation reproduces (the check still fails).
    Every check name a suite can emit has a rule here.
    """
    check = violation["check"]
    data = violation["witness"]
    t_op = StarOp.t_op("R")

    def _ideal(expr: str):
        return evaluate(parse_expression(expr), inst)

    def _dmod(expr: str) -> ExtDModule:
        raw = _ideal(expr)
        return dmod_from_generators([g.const_value() for g in raw.gens], inst.base)

    if check in ("pvmd-sample", "witness-oracle"):
        raw = _ideal(data["ideal"])
        product = ideal_arith(raw, colon_R(raw, inst), "mul", inst)
        closed = star_eval(t_op, product, inst)
        return not ideal_equal(closed, r_ideal(inst), inst)
    if check == "pvmd-witness":
        # the deterministic search family must still contain no witness
        for cand in _witness_search_family(inst):
            product = ideal_arith(cand, colon_R(cand, inst), "mul", inst)
            if not ideal_equal(star_eval(t_op, product, inst), r_ideal(inst), inst):
                return False
        return True
    if check == "kernel-capture":
        raw = _ideal(data["ideal"])
        closed = t_closure_R(raw, inst)
        if not dmod_predicates(closed.dpart, inst.base).is_v_invertible:
            return True
        preimage = alpha(closed.dpart, inst)
        return not class_equivalent_R(closed, preimage, t_op, inst)
    if check in ("colon-agreement", "v-agreement"):
        raw = _ideal(data["ideal"])
        element = _ideal(data["element"])
        if check == "colon-agreement":
            return oracle_colon_member(element, raw, inst) != member_structured(
                element, colon_R(raw, inst), inst)
        verdict = oracle_v_member(element, raw, inst)
        inside = member_structured(element, v_closure_R(raw, inst), inst)
        return (inside and verdict.status == "out-with-witness") or \
               (not inside and verdict.status == "in")
    if check == "trivial-class":
        raw = _ideal(data["ideal"])
        return is_principal_R(t_closure_R(raw, inst), inst) is None
    if check == "M-fixed":
        m = m_ideal(inst)
        for op in _implemented_ops(inst):
            if str(op) == data["op"]:
                return not ideal_equal(star_eval(op, m, inst), m, inst)
        raise HarnessError(f"unknown op {data['op']!r}")
    if check == "rT-divisorial":
        r = _ideal(data["r"])
        rt = as_structured(extend_to_T(RawIdeal([r]), inst), inst)
        return not ideal_equal(star_eval(StarOp.divisorial("R"), rt, inst), rt, inst)
    if check in ("ext-vs-rest", "t-vs-v-extension"):
        c = _ideal(data["c"])
        ct = extend_to_T(RawIdeal([c]), inst)
        lhs = star_eval(StarOp.extended_T(t_op), ct, inst)
        if check == "ext-vs-rest":
            return lhs != star_eval(StarOp.restricted_T(t_op), ct, inst)
        return lhs != star_eval(StarOp.extended_T(StarOp.divisorial("R")), ct, inst)
    if check == "alpha-injective":
        j1, j2 = _dmod(data["j1"]), _dmod(data["j2"])
        return class_equivalent_R(alpha(j1, inst), alpha(j2, inst), t_op, inst)
    if check == "gamma-alpha-identity":
        j = _dmod(data["j"])
        expected = class_label_D(dmod_v(j, inst.base), inst.base)
        return gamma(alpha(j, inst), inst) != expected
    if check == "beta-trivial-on-alpha":
        j = _dmod(data["j"])
        return not beta(alpha(j, inst), inst).gen.is_one()
    if check in ("alpha-invertible", "label-vs-principal"):
        j = _dmod(data["j"])
        witness = invertibility_R(alpha(j, inst), StarOp.identity("R"), inst)
        if check == "alpha-invertible":
            return not witness.is_invertible
        expected = class_label_D(j, inst.base)
        return (witness.principal_gen is not None) != expected.is_identity()
    if check in ("normalized-window", "alpha-preimage"):
        raw = _ideal(data["ideal"])
        e = min(ord_at_zero(g) for g in raw.gens)
        i_gen = next(g for g in raw.gens if ord_at_zero(g) == e)
        s1 = t_closure_R(RawIdeal([g / i_gen for g in raw.gens]), inst)
        if check == "normalized-window":
            return not s1.unit.is_one() or s1.dpart.is_full()
        return not class_equivalent_R(t_closure_R(raw, inst),
                                      alpha(s1.dpart, inst), t_op, inst)
    if check == "pic-decomposition":
        raw = _ideal(data["ideal"])
        closed = structured_hull(raw, inst)
        principal = is_principal_R(closed, inst) is not None
        return principal != gamma(closed, inst).is_identity()
    raise HarnessError(f"no replay rule for check {check!r}")
