"""D-side module calculus: lattices, colon, closure, class labels."""

import random
from fractions import Fraction

import pytest

from starpull.base_domain import (
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
    identity_label,
)
from starpull.kernel import FieldElem


Z = BaseDomain.integers()
OK5 = BaseDomain.quadratic_order(-5)
ZI = BaseDomain.integers(-1)
QF = BaseDomain.rational_field(-1)


def fe(x, y=0, d=1):
    return FieldElem(Fraction(x), Fraction(y), d)


W = fe(0, 1, -5)   # sqrt(-5)
I = fe(0, 1, -1)   # i

P = dmod_from_generators([fe(2), fe(1) + W], OK5)
PBAR = dmod_from_generators([fe(2), fe(1) - W], OK5)


class TestFromGenerators:
    def test_rank_one_over_z(self):
        m = dmod_from_generators([fe(2), fe(0)], Z)
        assert m.den == 1 and m.rows == ((2,),)

    def test_rank_two_over_z_in_gaussian(self):
        m = dmod_from_generators([fe(1), I], ZI)
        assert m.rows == ((1, 0), (0, 1))

    def test_prime_above_two_normal_form(self):
        # independent reduction: P = 2Z + (1+w)Z = {a + bw : a == b mod 2}
        for a in range(-4, 5):
            for b in range(-4, 5):
                inside = (a - b) % 2 == 0
                assert P.contains(fe(a, b, -5)) == inside
        assert P.den == 1 and P.rows == ((1, 1), (0, 2))

    def test_canonical_across_generating_sets(self):
        m1 = dmod_from_generators([fe(2), fe(1) + W], OK5)
        m2 = dmod_from_generators([fe(1) + W, fe(2), fe(3) + W, fe(2) * W], OK5)
        assert m1 == m2

    def test_zero_generators_give_zero(self):
        assert dmod_from_generators([fe(0)], Z).is_zero()
        assert dmod_from_generators([], Z).is_zero()

    def test_field_spans(self):
        assert dmod_from_generators([fe(1), I], QF).is_full()
        line = dmod_from_generators([fe(2, 2, -1)], QF)
        assert line.rows == ((1, 1),)


class TestArith:
    def test_p_times_conjugate_is_two(self):
        two_ok = dmod_from_generators([fe(2), fe(2) * OK5.omega()], OK5)
        assert dmod_arith(P, PBAR, "mul") == two_ok

    def test_add_zero_identity(self):
        assert dmod_arith(P, ExtDModule.zero(OK5), "add") == P

    def test_principal_product_over_z(self):
        two, three = dmod_from_generators([fe(2)], Z), dmod_from_generators([fe(3)], Z)
        assert dmod_arith(two, three, "mul") == dmod_from_generators([fe(6)], Z)

    def test_mul_sentinels(self):
        assert dmod_arith(P, ExtDModule.zero(OK5), "mul").is_zero()
        assert dmod_arith(P, ExtDModule.full(OK5), "mul").is_full()

    def test_mixed_domains_rejected(self):
        with pytest.raises(DomainError):
            dmod_arith(P, dmod_from_generators([fe(1)], Z), "add")


class TestColon:
    def test_colon_of_two_z(self):
        m = dmod_from_generators([fe(2)], Z)
        assert dmod_colon(m) == dmod_from_generators([fe(Fraction(1, 2))], Z)

    def test_colon_of_gaussian_lattice_is_zero(self):
        # y*1 in Z and y*i in Z force y = 0
        m = dmod_from_generators([fe(1), I], ZI)
        assert dmod_colon(m).is_zero()

    def test_colon_of_p(self):
        pinv = dmod_colon(P)
        # (2, 1-w)/2: contains 1 and (1-w)/2, and P * P^-1 = O_K
        assert pinv.contains(fe(1))
        assert pinv.contains(FieldElem(Fraction(1, 2), Fraction(-1, 2), -5))
        assert dmod_arith(P, pinv, "mul") == OK5.unit_module()

    def test_colon_sentinels(self):
        assert dmod_colon(ExtDModule.zero(Z)).is_full()
        assert dmod_colon(ExtDModule.full(Z)).is_zero()

    def test_field_line_colon(self):
        line = dmod_from_generators([fe(1, 1, -1)], QF)
        inv = dmod_colon(line)
        prod = dmod_arith(line, inv, "mul")
        assert prod == QF.unit_module()


class TestClosure:
    def test_principal_is_divisorial(self):
        m = dmod_from_generators([fe(2)], Z)
        assert dmod_v(m) == m

    def test_dedekind_ideals_divisorial(self):
        assert dmod_v(P) == P

    def test_v_of_zero(self):
        assert dmod_v(ExtDModule.zero(OK5)).is_zero()

    def test_v_closure_properties_on_samples(self):
        rng = random.Random(5)
        mods = []
        for _ in range(25):
            gens = [fe(rng.randint(-4, 4), rng.randint(-2, 2) if rng.random() < 0.5 else 0, -5)
                    for _ in range(rng.randint(1, 3))]
            m = dmod_from_generators(gens, OK5)
            if not m.is_zero():
                mods.append(m)
        for m in mods:
            closed = dmod_v(m)
            assert all(closed.contains(b) for b in m.basis_elements())
            assert dmod_v(closed) == closed
        for m, n in zip(mods, mods[1:]):
            big = dmod_arith(m, n, "add")
            assert all(dmod_v(big).contains(b) for b in dmod_v(m).basis_elements())

    def test_nondivisorial_module_over_z(self):
        m = dmod_from_generators([fe(1), I], ZI)
        assert dmod_v(m).is_full()


class TestPredicates:
    def test_p_invertible_not_cyclic(self):
        preds = dmod_predicates(P)
        assert preds.is_invertible and preds.is_v_invertible
        assert preds.is_cyclic is None
        # independent short-vector check: no element of norm 2 in Z[sqrt(-5)]
        assert all(a * a + 5 * b * b != 2 for a in range(-2, 3) for b in range(-1, 2))

    def test_cyclic_module(self):
        m = dmod_from_generators([fe(2)], Z)
        assert dmod_predicates(m).is_cyclic == fe(2)

    def test_p_squared_cyclic(self):
        p2 = dmod_arith(P, P, "mul")
        gen = dmod_predicates(p2).is_cyclic
        assert gen is not None
        assert dmod_from_generators([gen, gen * OK5.omega()], OK5) == p2

    def test_gaussian_lattice_not_invertible(self):
        preds = dmod_predicates(dmod_from_generators([fe(1), I], ZI))
        assert not preds.is_invertible and not preds.is_v_invertible
        assert preds.is_cyclic is None

    def test_membership_and_equal(self):
        preds = dmod_predicates(P)
        assert preds.membership(fe(2))
        assert not preds.membership(fe(1))
        assert preds.equal(dmod_from_generators([fe(2), fe(1) + W], OK5))

    def test_invertibility_group_laws(self):
        rng = random.Random(11)
        invertibles = [P, PBAR, dmod_arith(P, P, "mul"),
                       dmod_from_generators([fe(3), fe(1) + W], OK5)]
        for m in invertibles:
            preds = dmod_predicates(m)
            assert preds.is_invertible
            inv = dmod_colon(m)
            assert dmod_predicates(inv).is_invertible
            assert dmod_predicates(dmod_v(m)).is_invertible
        for _ in range(6):
            m1, m2 = rng.choice(invertibles), rng.choice(invertibles)
            assert dmod_predicates(dmod_arith(m1, m2, "mul")).is_invertible


class TestClassLabels:
    def test_presentation_of_disc_minus_twenty(self):
        assert OK5.class_presentation == (2,)

    def test_p_generates_the_class_group(self):
        label = class_label_D(P)
        assert label == ClassLabel((1,), (2,))
        assert not label.is_identity()

    def test_principal_is_identity(self):
        two_ok = dmod_from_generators([fe(2), fe(2) * OK5.omega()], OK5)
        assert class_label_D(two_ok).is_identity()

    def test_p_squared_identity(self):
        assert class_label_D(dmod_arith(P, P, "mul")).is_identity()

    def test_label_is_homomorphism(self):
        mods = [P, PBAR, dmod_arith(P, P, "mul"),
                dmod_from_generators([fe(3), fe(1) + W], OK5),
                dmod_from_generators([fe(3), fe(1) - W], OK5)]
        for m1 in mods:
            for m2 in mods:
                lhs = class_label_D(dmod_arith(m1, m2, "mul"))
                assert lhs == class_label_D(m1) + class_label_D(m2)

    def test_scaling_preserves_class(self):
        scaled = dmod_scale(fe(3, 1, -5), P)
        assert class_label_D(scaled) == class_label_D(P)

    def test_non_invertible_rejected(self):
        with pytest.raises(DomainError):
            class_label_D(dmod_from_generators([fe(1), I], ZI), ZI)

    def test_integers_trivial(self):
        assert class_label_D(dmod_from_generators([fe(5)], Z), Z).is_identity()
        assert identity_label(Z) == ClassLabel((), ())


class TestIntersect:
    def test_lattice_intersection(self):
        a = dmod_from_generators([fe(2)], Z)
        b = dmod_from_generators([fe(3)], Z)
        assert dmod_intersect(a, b) == dmod_from_generators([fe(6)], Z)

    def test_sentinels(self):
        assert dmod_intersect(P, ExtDModule.full(OK5)) == P
        assert dmod_intersect(P, ExtDModule.zero(OK5)).is_zero()

    def test_self_intersection(self):
        assert dmod_intersect(P, P) == P


class TestClassGroupTables:
    # classical class-group structures of imaginary quadratic fields
    KNOWN = {
        -1: [], -2: [], -3: [], -7: [], -11: [], -19: [], -43: [], -67: [],
        -5: [2], -6: [2], -10: [2], -13: [2], -15: [2], -22: [2], -35: [2],
        -37: [2], -51: [2], -58: [2], -91: [2],
        -23: [3], -31: [3], -59: [3], -83: [3],
        -14: [4], -17: [4],
        -21: [2, 2], -30: [2, 2],
        -47: [5], -79: [5],
        -26: [6], -29: [6], -38: [6], -53: [6], -61: [6],
        -71: [7],
        -65: [2, 4],
    }

    @pytest.mark.parametrize("d", sorted(KNOWN, reverse=True))
    def test_structure_matches_table(self, d):
        dom = BaseDomain.quadratic_order(d)
        assert sorted(dom.class_presentation) == sorted(self.KNOWN[d])

    def test_label_homomorphism_at_class_number_eight(self):
        from starpull.base_domain import _ideal_of_form
        dom = BaseDomain.quadratic_order(-65)
        ideals = [_ideal_of_form(f, dom) for f in sorted(dom._label_of_form)]
        for m1 in ideals:
            for m2 in ideals[:4]:
                lhs = class_label_D(dmod_arith(m1, m2, "mul"), dom)
                assert lhs == class_label_D(m1, dom) + class_label_D(m2, dom)


def test_desk_scale_bound_enforced():
    with pytest.raises(DomainError):
        BaseDomain.quadratic_order(-101)


def test_real_quadratic_rejected():
    with pytest.raises(DomainError):
        BaseDomain.quadratic_order(5)
