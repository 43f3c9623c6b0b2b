"""Exact scalar, polynomial, and rational-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starpull.kernel import (
    FieldElem,
    KernelError,
    Poly,
    RatFunc,
    eval_at_zero,
    field_arith,
    ord_at_zero,
    poly_gcd,
    poly_lcm,
    poly_xgcd,
)


def fe(x, y=0, d=1):
    return FieldElem(Fraction(x), Fraction(y), d)


class TestFieldElem:
    def test_inverse_of_quadratic_element(self):
        # independent check: multiply by the conjugate and divide by the norm
        a = fe(1, 1, -5)
        conj = a.conj()
        norm = a.x * a.x - (-5) * a.y * a.y
        expected = FieldElem(conj.x / norm, conj.y / norm, -5)
        assert field_arith(a, None, "inv") == expected
        assert a * a.inv() == fe(1)

    def test_norm_expands_as_x2_minus_d_y2(self):
        assert field_arith(fe(1, 1, -5), None, "norm") == fe(6)
        assert fe(3, 2, -5).norm() == Fraction(9 + 20)

    def test_rational_inverse(self):
        a = fe(Fraction(7, 3))
        assert field_arith(a, a.inv(), "mul") == fe(1)

    def test_zero_inverse_rejected(self):
        with pytest.raises(KernelError):
            fe(0).inv()

    def test_mismatched_tags_rejected(self):
        with pytest.raises(KernelError):
            fe(1, 1, -5) + fe(0, 1, -1)

    def test_rationals_embed_across_tags(self):
        assert fe(2) + fe(1, 1, -5) == fe(3, 1, -5)
        assert fe(2) == FieldElem(2, 0, 1)

    def test_squarefree_tag_enforced(self):
        with pytest.raises(KernelError):
            FieldElem(1, 1, -4)

    @given(
        x=st.fractions(min_value=-20, max_value=20, max_denominator=6),
        y=st.fractions(min_value=-20, max_value=20, max_denominator=6),
    )
    @settings(max_examples=60, deadline=None)
    def test_inverse_round_trip(self, x, y):
        a = FieldElem(x, y, -5 if y != 0 else 1)
        if a.is_zero():
            return
        assert a * a.inv() == fe(1)
        assert (a + a.conj()).y == 0


def poly(*coeffs):
    return Poly(coeffs)


def naive_gcd(f, g):
    # plain remainder loop, kept independent of the library path
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


class TestPoly:
    def test_gcd_euclidean_example(self):
        f, g = poly(0, 2), poly(0, 0, 1)
        expected = naive_gcd(f, g)
        assert poly_gcd(f, g) == expected == poly(0, 1)

    def test_gcd_with_zero_is_monic(self):
        f = poly(0, 3)
        assert poly_gcd(f, Poly.zero()) == poly(0, 1)

    def test_gcd_idempotent(self):
        f = poly(1, 0, 1)
        assert poly_gcd(f, f) == f

    def test_gcd_of_two_zeros_rejected(self):
        with pytest.raises(KernelError):
            poly_gcd(Poly.zero(), Poly.zero())

    def test_divmod(self):
        f = poly(1, 2, 1)
        q, r = divmod(f, poly(1, 1))
        assert q == poly(1, 1) and r.is_zero()

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
           st.lists(st.integers(-5, 5), min_size=1, max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_gcd_divides_and_bezout(self, cs1, cs2):
        f, g = Poly(cs1), Poly(cs2)
        if f.is_zero() and g.is_zero():
            return
        h = poly_gcd(f, g)
        if not f.is_zero():
            assert (f % h).is_zero()
        if not g.is_zero():
            assert (g % h).is_zero()
        d, s, t = poly_xgcd(f, g)
        assert d == h
        assert s * f + t * g == d

    def test_lcm(self):
        assert poly_lcm(poly(0, 2), poly(0, 0, 3)) == poly(0, 0, 1)


class TestRatFunc:
    def test_ord_examples(self):
        assert ord_at_zero(RatFunc(poly(0, 0, 1), poly(1, 1))) == 2
        assert ord_at_zero(RatFunc.x_power(-1)) == -1

    def test_ord_additive(self):
        f = RatFunc.x_power(1)
        g = RatFunc(poly(0, 1), poly(2, 1))
        assert ord_at_zero(f * g) == ord_at_zero(f) + ord_at_zero(g)

    def test_ord_of_zero_rejected(self):
        with pytest.raises(KernelError):
            ord_at_zero(RatFunc.zero())

    def test_eval_examples(self):
        assert eval_at_zero(RatFunc(poly(3, 1), poly(1, 1))) == fe(3)
        assert eval_at_zero(RatFunc(poly(0, Fraction(1, 2)))) == fe(0)

    def test_eval_pole_rejected(self):
        with pytest.raises(KernelError):
            eval_at_zero(RatFunc.x_power(-1))

    def test_eval_is_multiplicative(self):
        f = RatFunc(poly(2, 1))
        g = RatFunc(poly(5))
        assert eval_at_zero(f * g) == eval_at_zero(f) * eval_at_zero(g)
        assert eval_at_zero(f + g) == eval_at_zero(f) + eval_at_zero(g)

    def test_canonical_form_monic_denominator(self):
        f = RatFunc(poly(0, 2), poly(0, 0, 4))
        assert f.den.is_monic()
        assert f == RatFunc(poly(2), poly(0, 4))

    def test_normalization_idempotent(self):
        f = RatFunc(poly(1, 1), poly(2, 3, 1))
        again = RatFunc(f.num, f.den)
        assert f == again

    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=4),
           st.lists(st.integers(-6, 6), min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_field_axioms(self, cs1, cs2):
        f, g = RatFunc(Poly(cs1)), RatFunc(Poly(cs2))
        if f.is_zero() or g.is_zero():
            return
        assert (f / g) * g == f
        assert f * f.inv() == RatFunc.one()
        assert f + g - g == f

    def test_eval_kernel_is_positive_ord(self):
        # ring map on {ord >= 0}: value zero exactly when ord >= 1
        for f in (RatFunc.x_power(1), RatFunc(poly(0, 1), poly(2, 1)),
                  RatFunc(poly(0, 0, 3))):
            assert ord_at_zero(f) >= 1
            assert eval_at_zero(f).is_zero()
        g = RatFunc(poly(5, 1))
        assert not eval_at_zero(g).is_zero()
