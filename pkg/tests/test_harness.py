"""Samplers, suites, reports: determinism, replay, schema."""

import json

import pytest

from starpull.harness import (
    HarnessError,
    SampleParams,
    STRUCTURAL_PVMD_FLAGS,
    SUITES,
    pvmd_structural_verdict,
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
from starpull.kernel import RatFunc
from starpull.pullback import RawIdeal
from starpull.star_ops import StarOp

T_OP = StarOp.t_op("R")
PARAMS = SampleParams(seed=11, count=20)


class TestSampling:
    def test_determinism(self, inst_a):
        first = sample_ideals(inst_a, PARAMS)
        second = sample_ideals(inst_a, PARAMS)
        assert first == second

    def test_corner_injection(self, inst_a):
        pop = sample_ideals(inst_a, PARAMS)
        x = RatFunc.x_power(1)
        assert RawIdeal([x]) in pop
        assert RawIdeal([RatFunc.coerce(2), x]) in pop

    def test_gaussian_corner(self, inst_d):
        pop = sample_ideals(inst_d, PARAMS)
        gens_sets = [i.gens for i in pop]
        assert any(len(g) == 2 and g[0].is_one() for g in gens_sets)

    def test_count_respected(self, inst_a):
        assert len(sample_ideals(inst_a, PARAMS)) == PARAMS.count

    def test_bad_params_rejected(self):
        with pytest.raises(HarnessError):
            SampleParams(count=0)


class TestSuiteVerdicts:
    def test_split_exact_passes_on_c(self, inst_c):
        rep = verify_split_exact(inst_c, T_OP, PARAMS)
        assert rep.verdict == "pass"
        assert rep.n_samples == PARAMS.count

    def test_split_exact_trivial_classes_on_a(self, inst_a):
        rep = verify_split_exact(inst_a, T_OP, PARAMS)
        assert rep.verdict == "pass"

    def test_split_exact_identity_op_on_b(self, inst_b):
        # degenerate Picard-style run of the same sequence
        rep = verify_split_exact(inst_b, StarOp.identity("R"), PARAMS)
        assert rep.verdict == "pass"
        header = rep.records[0]
        assert header["check"] == "class-group" and header["presentation"] == []

    def test_split_exact_rejects_non_square_plus(self, inst_d):
        with pytest.raises(HarnessError):
            verify_split_exact(inst_d, T_OP, PARAMS)

    def test_quasilocal_on_b(self, inst_b):
        rep = verify_quasilocal_iso(inst_b, T_OP, PARAMS)
        assert rep.verdict == "pass"

    def test_quasilocal_rejects_global_t(self, inst_a):
        with pytest.raises(HarnessError):
            verify_quasilocal_iso(inst_a, T_OP, PARAMS)

    def test_quasilocal_construction_on_two_x(self, inst_b):
        # the reduction I -> i^-1 I on I = (2, X): the T-generator is the
        # unit 2 of T, the normalized ideal has trivial unit part, and the
        # preimage class matches the original
        from starpull.class_groups import alpha, class_equivalent_R
        from starpull.pullback import RawIdeal as RI, t_closure_R as tcl
        raw = RI([RatFunc.coerce(2), RatFunc.x_power(1)])
        closed = tcl(raw, inst_b)
        i_gen = RatFunc.coerce(2)
        shifted = RI([g / i_gen for g in raw.gens])
        normalized = tcl(shifted, inst_b)
        assert normalized.unit.is_one()
        assert not normalized.dpart.is_full()
        assert class_equivalent_R(closed, alpha(normalized.dpart, inst_b),
                                  T_OP, inst_b)

    def test_pvmd_structural_verdicts(self, inst_a, inst_b, inst_c, inst_d, inst_e):
        assert pvmd_structural_verdict(inst_a)
        assert pvmd_structural_verdict(inst_b)
        assert pvmd_structural_verdict(inst_c)
        assert not pvmd_structural_verdict(inst_d)
        assert not pvmd_structural_verdict(inst_e)

    def test_pvmd_witness_on_d(self, inst_d):
        rep = verify_pvmd(inst_d, T_OP, PARAMS)
        assert rep.verdict == "pass"
        witnesses = [r for r in rep.records if r.get("check") == "witness"]
        assert witnesses and witnesses[0]["oracle_confirmed"]
        assert "sqrt(-1)" in witnesses[0]["ideal"]

    def test_pvmd_structural_records(self, inst_a):
        rep = verify_pvmd(inst_a, T_OP, PARAMS)
        structural = [r for r in rep.records if r.get("check") == "structural-only"]
        assert len(structural) == len(STRUCTURAL_PVMD_FLAGS)
        assert all(not r["pvmd"] for r in structural)

    def test_extension_laws(self, inst_b):
        rep = verify_extension_laws(inst_b, PARAMS)
        assert rep.verdict == "pass"

    def test_pic_splitting(self, inst_c):
        rep = verify_pic_splitting(inst_c, PARAMS)
        assert rep.verdict == "pass"

    def test_oracle_agreement_small(self, inst_d):
        rep = verify_oracle_agreement(inst_d, SampleParams(seed=11, count=10,
                                                           degree_window=6))
        assert rep.verdict == "pass"

    def test_unknown_suite(self, inst_a):
        with pytest.raises(HarnessError):
            run_suite("nope", inst_a, PARAMS)


class TestReports:
    def test_json_schema(self, inst_b):
        rep = verify_extension_laws(inst_b, PARAMS)
        data = rep.to_json_dict()
        for key in ("suite", "instance", "seed", "params", "n_samples",
                    "n_violations", "violations", "verdict"):
            assert key in data
        assert data["verdict"] == "pass"
        assert data["n_violations"] == len(data["violations"])
        # round-trips through json
        assert json.loads(rep.to_json()) == data

    def test_byte_identical_reports(self, inst_c):
        p = SampleParams(seed=4, count=12)
        a = run_suite("split-exact", inst_c, p).to_json()
        b = run_suite("split-exact", inst_c, p).to_json()
        assert a.encode() == b.encode()

    def test_suite_registry_complete(self):
        assert set(SUITES) == {"split-exact", "quasilocal-iso", "pvmd",
                               "extension-laws", "pic-splitting", "oracle-agreement"}


class TestReplay:
    def test_pvmd_violation_replays(self, inst_d):
        # a synthetic violation built from a genuinely non-invertible ideal
        violation = {
            "check": "pvmd-sample",
            "expected": "t-invertible",
            "got": "not invertible",
            "witness": {"ideal": "ideal(1, sqrt(-1))"},
        }
        assert replay_violation(violation, inst_d)

    def test_non_violation_does_not_replay(self, inst_a):
        violation = {
            "check": "pvmd-sample",
            "expected": "t-invertible",
            "got": "not invertible",
            "witness": {"ideal": "ideal(2, X)"},
        }
        assert not replay_violation(violation, inst_a)

    def test_trivial_class_replay(self, inst_d):
        violation = {
            "check": "trivial-class",
            "expected": "principal",
            "got": "not principal",
            "witness": {"ideal": "ideal(1, sqrt(-1))"},
        }
        assert replay_violation(violation, inst_d)

    def test_rt_divisorial_replay_negative(self, inst_a):
        violation = {
            "check": "rT-divisorial",
            "expected": "rT",
            "got": "anything",
            "witness": {"r": "(2*X)"},
        }
        assert not replay_violation(violation, inst_a)

    def test_unknown_check_rejected(self, inst_a):
        with pytest.raises(HarnessError):
            replay_violation({"check": "mystery", "witness": {}}, inst_a)

    def test_every_emittable_check_has_a_rule(self, inst_a, inst_b, inst_c, inst_d):
        # negatives on healthy data for each violation kind a suite can emit,
        # plus constructible positives
        cases = [
            ("pvmd-sample", {"ideal": "ideal(1, sqrt(-1))"}, inst_d, True),
            ("pvmd-witness", {"family": "search"}, inst_a, True),
            ("pvmd-witness", {"family": "search"}, inst_d, False),
            ("kernel-capture", {"ideal": "ideal(2, X)"}, inst_a, False),
            ("colon-agreement", {"ideal": "ideal(2, X)", "element": "(1/2)"},
             inst_a, False),
            ("v-agreement", {"ideal": "ideal(2, X)", "element": "(2)"}, inst_a, False),
            ("trivial-class", {"ideal": "ideal(2, 1+sqrt(-5))"}, inst_c, True),
            ("M-fixed", {"op": "t"}, inst_a, False),
            ("rT-divisorial", {"r": "(2*X)"}, inst_a, False),
            ("ext-vs-rest", {"c": "(2 + X)"}, inst_a, False),
            ("t-vs-v-extension", {"c": "(2 + X)"}, inst_a, False),
            ("alpha-injective", {"j1": "ideal(1)", "j2": "ideal(2, 1+sqrt(-5))"},
             inst_c, False),
            ("gamma-alpha-identity", {"j": "ideal(2, 1+sqrt(-5))"}, inst_c, False),
            ("beta-trivial-on-alpha", {"j": "ideal(2, 1+sqrt(-5))"}, inst_c, False),
            ("alpha-invertible", {"j": "ideal(2, 1+sqrt(-5))"}, inst_c, False),
            ("label-vs-principal", {"j": "ideal(2, 1+sqrt(-5))"}, inst_c, False),
            ("normalized-window", {"ideal": "ideal(2, X)"}, inst_b, False),
            ("alpha-preimage", {"ideal": "ideal(2, X)"}, inst_b, False),
            ("pic-decomposition", {"ideal": "ideal(2, 1+sqrt(-5))"}, inst_c, False),
        ]
        for check, data, inst, expected in cases:
            record = {"check": check, "expected": "", "got": "", "witness": data}
            assert replay_violation(record, inst) == expected, check


class TestSuiteComposition:
    def test_split_exact_pass_implies_pic_pass(self, inst_c):
        p = SampleParams(seed=6, count=15)
        split = run_suite("split-exact", inst_c, p)
        pic = run_suite("pic-splitting", inst_c, p)
        assert split.verdict == "pass"
        assert pic.verdict == "pass"
