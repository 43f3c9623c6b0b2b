"""Exact scalars, polynomials, and rational functions.

Everything downstream depends on arithmetic being exact and canonical:
two rational functions are mathematically equal exactly when their
normalized representations coincide.
"""

from starpull import FieldElem, Poly, RatFunc, eval_at_zero, ord_at_zero, poly_gcd

# quadratic field elements x + y*sqrt(-5)
a = FieldElem(1, 1, -5)
print("a          =", a)
print("a.conj()   =", a.conj())
print("a.norm()   =", a.norm())
print("a * a^-1   =", a * a.inv())
print()

# polynomial gcds realize ideal arithmetic in the PID K[X]
f = Poly([0, 2])        # 2X
g = Poly([0, 0, 1])     # X^2
print("gcd(2X, X^2) =", poly_gcd(f, g))
print()

# rational functions carry an X-adic valuation and a value at zero
h = RatFunc(Poly([0, 0, 1]), Poly([1, 1]))   # X^2/(1+X)
print("h =", h)
print("ord_at_zero(h)  =", ord_at_zero(h))
print("eval_at_zero((3+X)/(1+X)) =", eval_at_zero(RatFunc(Poly([3, 1]), Poly([1, 1]))))

# canonical forms: denominators are monic and coprime to numerators
k = RatFunc(Poly([0, 2]), Poly([0, 0, 4]))
print("2X/(4X^2) normalizes to", k, "with monic denominator", k.den)

# the valuation is additive and evaluation is a ring map where defined
x = RatFunc.x_power(1)
w = x / RatFunc(Poly([2, 1]))
print("ord(x * w) =", ord_at_zero(x * w), "= ord(x) + ord(w) =",
      ord_at_zero(x) + ord_at_zero(w))
lhs = eval_at_zero(RatFunc(Poly([2, 1])) * RatFunc.coerce(5))
rhs = eval_at_zero(RatFunc(Poly([2, 1]))) * FieldElem(5)
print("eval((2+X)*5) =", lhs, "= eval(2+X)*5 =", rhs)
