"""Star operations as evaluable values and their combinator algebra.

The lift of the D-side divisorial operation coincides with the R-side
one; projection undoes lifting; extension to T and restriction to T
agree for finite-type operations; and the meet of a lifted operation
with an overring-induced one reproduces the divisorial closure.
"""

from starpull import (
    RatFunc,
    RawIdeal,
    StarOp,
    ideal_equal,
    make_instance,
    m_ideal,
    pretty_value,
    star_axiom_check,
    star_eval,
    star_leq_check,
    star_meet,
    structured_hull,
    v_closure_R,
)
from starpull.kernel import FieldElem, Poly
from starpull.base_domain import dmod_from_generators

A = make_instance("A")
C = make_instance("C")
D = make_instance("D")
X = RatFunc.x_power(1)

d_r, v_r, t_r = StarOp.identity("R"), StarOp.divisorial("R"), StarOp.t_op("R")
d_d, v_d = StarOp.identity("D"), StarOp.divisorial("D")

I = RawIdeal([RatFunc.coerce(2), X])
hull = structured_hull(I, A)

print("lift(v_D) evaluates like v_R:")
print("  lift(v_D)(hull) =", pretty_value(star_eval(StarOp.lifted(v_d), hull, A), A))
print("  v_R(I)          =", pretty_value(v_closure_R(I, A), A))
print()

P = dmod_from_generators([FieldElem(2), FieldElem(1, 1, -5)], C.base)
print("projection fixes the Dedekind prime:  proj(t_R)(P) == P :",
      star_eval(StarOp.projected(t_r), P, C) == P)
print("projection undoes lifting:            proj(lift(v_D))(P) == v_D(P) :",
      star_eval(StarOp.projected(StarOp.lifted(v_d)), P, C) == star_eval(v_d, P, C))
print()

mix = star_meet(StarOp.lifted(v_d), StarOp.overring_induced(StarOp.identity("T")))
print("meet(lift(v_D), ovr(d_T)) acts like v_R:",
      ideal_equal(star_eval(mix, hull, A), v_closure_R(I, A), A))
print()

print("order checks on samples:")
samples = [I, RawIdeal([X]), RawIdeal([RatFunc.coerce(3), X * X])]
print("  d <= t :", star_leq_check(d_r, t_r, samples, A).passed)
print("  t <= v :", star_leq_check(t_r, v_r, samples, A).passed)
gaussian = RawIdeal([RatFunc.one(), RatFunc(Poly([FieldElem(0, 1, -1)]))])
print("  v <= d fails on (1, i) in D:", not star_leq_check(v_r, d_r, [gaussian], D).passed)
print()

print("closure axioms for t on instance A:",
      star_axiom_check(t_r, samples, [RatFunc.coerce(3), X], A).passed)
print("every implemented operation fixes the conductor M:",
      all(ideal_equal(star_eval(op, m_ideal(A), A), m_ideal(A), A)
          for op in (d_r, v_r, t_r, StarOp.lifted(d_d), StarOp.lifted(v_d), mix)))
