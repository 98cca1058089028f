#!/usr/bin/env python3
"""
Tests for bounded membership, closure checks and the consistency report
"""
import pytest

from src.errors import HereditasError, SearchError
from src.linalg import FinDimAlgebra, Integers, IntegersMod, Mat, PrimeField
from src.modules import FgAbGroup, FpModule, module_key, underlying_group
from src.search import SearchBound, module_candidates, run_ordered
from src.torsionlab import (
    FLAT,
    IN,
    IN_UP_TO_BOUND,
    INJECTIVE,
    OUT,
    build_trial,
    class_value,
    closure_check,
    hereditary_consistency_report,
    is_semisimple,
    membership,
    pd_fpn_search,
    verify_closure,
    verify_verdict,
)

Z4 = IntegersMod(4)
Z6 = IntegersMod(6)
TINY = SearchBound(1, 1)


def cyclic(ring, *annihilators):
    return FpModule.cyclic(ring, annihilators)


# ============================================================================
# Search helpers
# ============================================================================


class TestSearch:
    def test_module_candidates_are_distinct(self):
        mode, modules = module_candidates(Z4, TINY)
        assert mode == "exhaustive"
        keys = [module_key(m) for m in modules]
        assert len(keys) == len(set(keys))
        groups = sorted(underlying_group(m).order for m in modules)
        assert groups == [1, 2, 4]

    def test_sampled_candidates_reproducible(self):
        bound = SearchBound(2, 2, samples=15)
        first = module_candidates(Integers(), bound, seed=9)
        second = module_candidates(Integers(), bound, seed=9)
        assert first == second
        assert first[0] == "sampled"

    def test_exhaustive_over_integers_rejected(self):
        with pytest.raises(SearchError):
            module_candidates(Integers(), SearchBound(1, 1, mode="exhaustive"))

    def test_bad_bound(self):
        with pytest.raises(SearchError):
            SearchBound(0, 2)

    def test_run_ordered_stops_at_first_hit(self):
        results = run_ordered(lambda x: x * x, [1, 2, 3, 4, 5], stop=lambda r: r > 5)
        assert results == [1, 4, 9]


# ============================================================================
# Membership
# ============================================================================


class TestMembership:
    def test_semisimple_rings(self):
        assert is_semisimple(Z6)
        assert is_semisimple(PrimeField(5))
        assert not is_semisimple(Z4)
        assert not is_semisimple(Integers())
        assert not is_semisimple(FinDimAlgebra.path_a2())

    def test_free_module_over_z4(self):
        verdict = membership(FpModule.free(Z4, 1), INJECTIVE, bound=SearchBound(1, 2))
        assert verdict.verdict == IN_UP_TO_BOUND
        assert verdict.member
        assert verdict.tested > 0

    def test_two_mod_four_not_injective(self):
        verdict = membership(cyclic(Z4, 2), INJECTIVE, bound=TINY)
        assert verdict.verdict == OUT
        assert verdict.witness.value == FgAbGroup(0, (2,))
        assert underlying_group(verdict.witness.test).order == 2
        assert verify_verdict(verdict)

    def test_two_mod_four_not_flat(self):
        verdict = membership(cyclic(Z4, 2), FLAT, bound=TINY)
        assert verdict.verdict == OUT
        assert verify_verdict(verdict)

    def test_projective_is_flat(self):
        verdict = membership(FpModule.free(Z4, 2), FLAT, bound=TINY)
        assert verdict.verdict == IN
        assert verdict.reason == "projective module"

    def test_semisimple_answers_in(self):
        verdict = membership(cyclic(Z6, 2), INJECTIVE)
        assert verdict.verdict == IN
        assert verdict.reason == "semisimple ring"

    def test_infinite_ring_needs_test_set(self):
        with pytest.raises(SearchError):
            membership(cyclic(Integers(), 2), INJECTIVE)

    def test_explicit_test_set(self):
        tests = [cyclic(Integers(), 2), cyclic(Integers(), 3)]
        verdict = membership(cyclic(Integers(), 2), INJECTIVE, testset=tests)
        assert verdict.verdict == OUT
        assert verdict.witness.test == tests[0]
        assert "explicit" in verdict.bound

    @pytest.mark.parametrize("cls", [INJECTIVE, FLAT])
    def test_verdicts_monotone_in_the_bound(self, cls):
        bounds = [SearchBound(1, 1), SearchBound(1, 2), SearchBound(2, 2)]
        _, modules = module_candidates(Z4, SearchBound(1, 2))
        for module in modules:
            verdicts = [membership(module, cls, bound=b) for b in bounds]
            for smaller, larger in zip(verdicts, verdicts[1:]):
                if smaller.verdict == OUT:
                    assert larger.verdict == OUT
                if smaller.verdict == IN:
                    assert larger.verdict == IN
                if larger.verdict == IN_UP_TO_BOUND:
                    assert smaller.verdict == IN_UP_TO_BOUND
                    assert larger.tested >= smaller.tested

    def test_unknown_class(self):
        with pytest.raises(HereditasError):
            membership(cyclic(Z4, 2), "P_n")

    def test_class_value(self):
        assert class_value(INJECTIVE, cyclic(Z4, 2), cyclic(Z4, 2)) == FgAbGroup(0, (2,))
        assert class_value(FLAT, FpModule.free(Z4, 1), cyclic(Z4, 2)).is_trivial


# ============================================================================
# Closure checks
# ============================================================================


class TestClosure:
    def test_injective_quotients_over_z4(self):
        report = closure_check(INJECTIVE, 1, Z4, "quotients", trials=100, bound=TINY)
        assert not report.passed
        assert report.members == 2
        counterexample = report.counterexample
        assert counterexample.verdict.verdict == OUT
        assert underlying_group(counterexample.trial.derived).order == 2
        assert verify_closure(report)

    def test_flat_subobjects_over_z4(self):
        report = closure_check(FLAT, 1, Z4, "subobjects", trials=100, bound=TINY)
        assert not report.passed
        assert verify_closure(report)

    @pytest.mark.parametrize("prop", ["quotients", "extensions", "finite-coproducts"])
    def test_semisimple_rings_pass(self, prop):
        for ring in (PrimeField(2), Z6):
            report = closure_check(INJECTIVE, 1, ring, prop, trials=20, bound=SearchBound(1, 2))
            assert report.passed
            assert verify_closure(report)

    def test_injective_extensions_over_z4(self):
        report = closure_check(INJECTIVE, 1, Z4, "extensions", trials=30, bound=TINY)
        assert report.passed

    def test_unknown_property(self):
        with pytest.raises(HereditasError):
            closure_check(INJECTIVE, 1, Z4, "limits", bound=TINY)

    def test_build_trial(self):
        free = FpModule.free(Z4, 1)
        quotient = build_trial("quotients", [free], Mat.from_rows(Z4, [[2]]))
        assert underlying_group(quotient).order == 2
        total = build_trial("finite-coproducts", [free, free], None)
        assert underlying_group(total).order == 16

    def test_tampered_counterexample_fails_verification(self):
        report = closure_check(INJECTIVE, 1, Z4, "quotients", trials=100, bound=TINY)
        trial = report.counterexample.trial
        tampered = type(trial)(trial.operation, trial.sources, Mat.from_rows(Z4, [[1]]), trial.derived)
        report.counterexample = type(report.counterexample)(tampered, report.counterexample.verdict)
        assert not verify_closure(report)


# ============================================================================
# Projective dimension search and consistency
# ============================================================================


class TestReports:
    def test_pd_search_over_z4(self):
        report = pd_fpn_search(Z4, 1, TINY)
        assert not report.verified
        assert underlying_group(report.counterexample).order == 2
        assert not report.certificate.verdict

    def test_pd_search_over_integers(self):
        report = pd_fpn_search(Integers(), 1, SearchBound(2, 2, samples=15), seed=1)
        assert report.verified
        assert report.mode == "sampled"

    def test_pd_search_over_path_algebra(self):
        report = pd_fpn_search(FinDimAlgebra.path_a2(), 1, TINY)
        assert report.verified

    def test_consistency_over_z4(self):
        report = hereditary_consistency_report(Z4, 1, TINY, trials=100)
        assert report.consistent
        assert not report.all_pass
        assert set(report.verdicts.values()) == {False}
        assert report.cross_checks
        assert all(report.cross_checks.values())
        assert report.disagreements() == []

    @pytest.mark.parametrize("ring", [PrimeField(2), Z6])
    def test_consistency_over_semisimple_rings(self, ring):
        report = hereditary_consistency_report(ring, 1, SearchBound(1, 2), trials=20)
        assert report.consistent
        assert report.all_pass

    def test_consistency_over_integers(self):
        bound = SearchBound(2, 2, entry_bound=6, samples=10)
        report = hereditary_consistency_report(Integers(), 1, bound, seed=2, trials=10)
        assert report.all_pass
        assert report.consistent

    def test_consistency_over_f2_exhaustive(self):
        report = hereditary_consistency_report(PrimeField(2), 1, SearchBound(3, 3), trials=20)
        assert report.matrices.mode == "exhaustive"
        assert report.matrices.tested == (2 + 4 + 8) ** 2
        assert report.consistent
        assert report.all_pass

    def test_consistency_over_integers_four_by_four(self):
        bound = SearchBound(4, 4, samples=200)
        report = hereditary_consistency_report(Integers(), 1, bound, seed=4, trials=50)
        assert report.matrices.tested == 200
        assert report.consistent
        assert report.all_pass


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
