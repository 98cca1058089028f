#!/usr/bin/env python3
"""
Tests for Ext, Tor, character modules, the dualities and the idempotent checks
"""
import random
from fractions import Fraction
from math import gcd

import pytest
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_form as sympy_smith

from src.errors import HereditasError, InfiniteModuleError
from src.homdual import (
    FgAbGroup,
    character,
    ext1,
    ext1_cocycles,
    long_exact_orders,
    pontryagin_dual,
    tensor_product,
    tor1,
    unital_decomposition,
    verify_dual_exactness,
    verify_ext_tor_duality,
    verify_flat_injective_duality,
    verify_injective_flat_duality,
    yoneda_check,
)
from src.linalg import FinDimAlgebra, Integers, IntegersMod, Mat
from src.modules import FpModule, module_key, underlying_group
from src.search import SearchBound, module_candidates

Z = Integers()
Z4 = IntegersMod(4)
Z6 = IntegersMod(6)
C2 = FgAbGroup(0, (2,))


def cyclic(ring, *annihilators, side="left"):
    return FpModule.cyclic(ring, annihilators, side)


def corpus(ring, orders):
    """Free module, zero module and cyclic quotients"""
    return [FpModule.free(ring, 1), cyclic(ring, 1)] + [cyclic(ring, d) for d in orders]


# ============================================================================
# Ext, Tor and tensor products
# ============================================================================


class TestDerivedFunctors:
    def test_ext_over_integers(self):
        assert ext1(cyclic(Z, 2), cyclic(Z, 2)) == C2
        assert ext1(cyclic(Z, 2), cyclic(Z, 3)).is_trivial
        assert ext1(cyclic(Z, 4), FpModule.free(Z, 1)) == FgAbGroup(0, (4,))
        assert ext1(FpModule.free(Z, 1), cyclic(Z, 2)).is_trivial

    def test_ext_over_z4(self):
        assert ext1(cyclic(Z4, 2), cyclic(Z4, 2)) == C2
        assert ext1(cyclic(Z4, 2), FpModule.free(Z4, 1)).is_trivial

    def test_tor(self):
        assert tor1(cyclic(Z4, 2), cyclic(Z4, 2)) == C2
        assert tor1(cyclic(Z, 4), cyclic(Z, 6)) == C2
        assert tor1(cyclic(Z6, 2), cyclic(Z6, 3)).is_trivial

    def test_tensor(self):
        assert tensor_product(cyclic(Z, 2), cyclic(Z, 3)).is_trivial
        assert tensor_product(cyclic(Z, 4), cyclic(Z, 6)) == C2
        assert tensor_product(FpModule.free(Z, 1), cyclic(Z, 5)) == FgAbGroup(0, (5,))

    def test_tensor_needs_right_factor_over_noncommutative_ring(self):
        ring = FinDimAlgebra.path_a2()
        with pytest.raises(HereditasError):
            tensor_product(FpModule.free(ring, 1), FpModule.free(ring, 1, side="right"))

    def test_cocycles_are_cocycles(self):
        first, second = cyclic(Z, 2), cyclic(Z, 2)
        cocycles = ext1_cocycles(first, second)
        assert cocycles
        for psi in cocycles:
            extension = second.extension(first, psi)
            assert underlying_group(extension).order == 4

    def test_long_exact_sequence_orders(self):
        sub, mid, quot = cyclic(Z, 2), cyclic(Z, 4), cyclic(Z, 2)
        for test in (cyclic(Z, 2), cyclic(Z, 3), cyclic(Z, 4)):
            orders = long_exact_orders(sub, mid, quot, test)
            alternating = Fraction(1)
            for i, order in enumerate(orders):
                alternating = alternating * order if i % 2 == 0 else alternating / Fraction(order)
            assert alternating == 1

    def test_long_exact_sequence_over_z4(self):
        # 0 -> Z/2 -> Z/4 -> Z/2 -> 0; free test modules are injective over Z/4
        sub, mid, quot = cyclic(Z4, 2), FpModule.free(Z4, 1), cyclic(Z4, 2)
        for test in (FpModule.free(Z4, 1), FpModule.free(Z4, 2)):
            orders = long_exact_orders(sub, mid, quot, test)
            assert orders[3:] == [1, 1, 1]
            alternating = Fraction(1)
            for i, order in enumerate(orders):
                alternating = alternating * order if i % 2 == 0 else alternating / Fraction(order)
            assert alternating == 1


# ============================================================================
# Integer presentations
# ============================================================================

N4 = [[2, 3, -9, -2], [6, 5, 2, -1], [5, 1, 8, -4], [6, -6, -1, -6]]
F4 = [[-7, 9, -2, 7], [9, -6, -1, -7], [-8, 0, 5, 7], [-7, 1, 3, 0]]


def smith_diagonal(rows):
    d = sympy_smith(DM(rows, ZZ)).to_Matrix()
    return [int(d[i, i]) for i in range(min(d.rows, d.cols))] + [0] * (len(rows[0]) - min(d.rows, d.cols))


def expected_tor(n_rows, f_rows):
    """Tor_1 over Z of two cokernels: Z/gcd(a, b) over pairs of torsion factors"""
    return FgAbGroup.from_cyclic_orders(
        [gcd(a, b) for a in smith_diagonal(n_rows) if a for b in smith_diagonal(f_rows) if b]
    )


def expected_ext(f_rows, n_rows):
    """Ext^1 over Z: Ext(Z/a, Z/b) = Z/gcd(a, b), Ext(Z/a, Z) = Z/a, Ext(Z, -) = 0"""
    return FgAbGroup.from_cyclic_orders(
        [gcd(a, b) for a in smith_diagonal(f_rows) if a for b in smith_diagonal(n_rows)]
    )


class TestIntegerPresentations:
    def test_four_by_four_pair(self):
        n, f = FpModule.from_rows(Z, N4, 4), FpModule.from_rows(Z, F4, 4)
        assert tor1(n, f) == expected_tor(N4, F4)
        assert ext1(f, n) == expected_ext(F4, N4)
        assert ext1(n, f) == expected_ext(N4, F4)

    def test_seeded_four_by_four_pairs(self):
        rng = random.Random(41)
        for _ in range(8):
            rows = [[[rng.randint(-10, 10) for _ in range(4)] for _ in range(4)] for _ in range(2)]
            n, f = (FpModule.from_rows(Z, r, 4) for r in rows)
            assert tor1(n, f) == expected_tor(rows[0], rows[1])
            assert ext1(f, n) == expected_ext(rows[1], rows[0])

    def test_rank_deficient_pair(self):
        n_rows = [[2, 4, 6], [1, 3, 5]]
        f_rows = [[6, 0, 9], [0, 4, 0]]
        n, f = FpModule.from_rows(Z, n_rows, 3), FpModule.from_rows(Z, f_rows, 3)
        assert tor1(n, f) == expected_tor(n_rows, f_rows)
        assert ext1(f, n) == expected_ext(f_rows, n_rows)
        assert ext1(n, f) == expected_ext(n_rows, f_rows)

    def test_cocycles_of_four_by_four_pair(self):
        n, f = FpModule.from_rows(Z, N4, 4), FpModule.from_rows(Z, F4, 4)
        gn, gf = underlying_group(n), underlying_group(f)
        cocycles = ext1_cocycles(f, n)
        assert cocycles
        for psi in cocycles:
            ge = underlying_group(n.extension(f, psi))
            assert ge.free_rank == gn.free_rank + gf.free_rank
            if ge.free_rank == 0:
                assert ge.order == gn.order * gf.order


# ============================================================================
# Character modules
# ============================================================================


class TestCharacter:
    @pytest.mark.parametrize(
        "module",
        [
            cyclic(Z, 6),
            cyclic(Z, 2).direct_sum(cyclic(Z, 4)),
            cyclic(Z4, 2),
            FpModule.free(Z6, 1),
            FpModule.free(FinDimAlgebra.path_a2(), 1),
        ],
    )
    def test_involution(self, module):
        dual = character(module)
        assert dual.dual.side == module.opposite_side
        double = character(dual.dual)
        assert double.dual.side == module.side
        group = underlying_group(module)
        assert underlying_group(dual.dual) == group
        assert underlying_group(double.dual) == group

    @pytest.mark.parametrize("ring", [Z4, Z6])
    def test_involution_on_seeded_modules(self, ring):
        rng = random.Random(ring.n)
        for _ in range(100):
            generators = rng.randint(1, 3)
            rows = [
                [rng.randrange(ring.n) for _ in range(generators)] for _ in range(rng.randint(0, 3))
            ]
            module = FpModule.from_rows(ring, rows, generators)
            group = underlying_group(module)
            dual = character(module).dual
            double = character(dual).dual
            assert underlying_group(dual).order == group.order
            assert underlying_group(double) == group
            assert double.side == module.side

    def test_pontryagin_dual(self):
        assert pontryagin_dual(FgAbGroup(0, (2, 4))) == FgAbGroup(0, (2, 4))
        with pytest.raises(InfiniteModuleError):
            pontryagin_dual(FgAbGroup(1))

    def test_infinite_module_rejected(self):
        with pytest.raises(InfiniteModuleError):
            character(FpModule.free(Z, 1))

    def test_evaluate_dual_basis(self):
        char = character(cyclic(Z, 4))
        assert char.exponent == 4
        assert char.evaluate([1], char.source_basis[0]) % 4 != 0

    @pytest.mark.parametrize(
        "module,elements",
        [
            (FpModule.free(Z4, 1), [[2]]),
            (cyclic(Z, 12), [[3]]),
            (FpModule.free(Z6, 2), [[1, 2]]),
        ],
    )
    def test_dual_exactness(self, module, elements):
        counts = verify_dual_exactness(module, Mat.from_rows(module.ring, elements))
        assert counts.exact
        assert counts.sub_order * counts.quotient_order == counts.module_order


# ============================================================================
# Dualities
# ============================================================================


class TestDualities:
    @pytest.mark.parametrize("which", ["i", "ii", "iii"])
    @pytest.mark.parametrize("ring,orders", [(Z4, (2,)), (Z6, (2, 3))])
    def test_ext_tor_duality(self, which, ring, orders):
        modules = corpus(ring, orders)
        for first in modules:
            for second in modules:
                record = verify_ext_tor_duality(first, second, which)
                assert record.holds, (first, second, record.lhs, record.rhs)

    @pytest.mark.parametrize("which", ["i", "ii", "iii"])
    @pytest.mark.parametrize("ring", [Z4, Z6])
    def test_ext_tor_duality_on_small_presentations(self, which, ring):
        # every module with at most two generators and two relations, up to equal relations
        _, modules = module_candidates(ring, SearchBound(2, 2, mode="exhaustive"))
        assert len({module_key(m) for m in modules}) == len(modules)
        for first in modules:
            for second in modules:
                record = verify_ext_tor_duality(first, second, which)
                assert record.holds, (str(first), str(second), record.lhs, record.rhs)

    def test_duality_over_integers(self):
        for first in (FpModule.free(Z, 1), cyclic(Z, 2), cyclic(Z, 4)):
            for second in (cyclic(Z, 2), cyclic(Z, 6)):
                for which in ("i", "ii", "iii"):
                    assert verify_ext_tor_duality(first, second, which).holds

    def test_first_duality_value(self):
        record = verify_ext_tor_duality(cyclic(Z4, 2), cyclic(Z4, 2), "i")
        assert record.lhs == record.rhs == C2

    def test_unknown_duality(self):
        with pytest.raises(HereditasError):
            verify_ext_tor_duality(cyclic(Z4, 2), cyclic(Z4, 2), "iv")

    def test_flat_duality_projective_module(self):
        record = verify_flat_injective_duality(cyclic(Z6, 3), [cyclic(Z6, 2), cyclic(Z6, 3)])
        assert record.holds
        assert all(row.first_vanishes for row in record.rows)

    def test_flat_duality_non_flat_module(self):
        record = verify_flat_injective_duality(cyclic(Z4, 2), [cyclic(Z4, 2)])
        assert record.holds
        assert not record.rows[0].first_vanishes

    def test_injective_duality(self):
        record = verify_injective_flat_duality(cyclic(Z4, 2), corpus(Z4, (2,)), n=2)
        assert record.holds
        assert record.violations == []

    def test_injective_duality_needs_two(self):
        with pytest.raises(HereditasError):
            verify_injective_flat_duality(cyclic(Z4, 2), [cyclic(Z4, 2)], n=1)


# ============================================================================
# Idempotents
# ============================================================================


def a2_modules():
    ring = FinDimAlgebra.path_a2()
    e1, e2, _ = ring.basis()
    return {
        "A": FpModule.free(ring, 1),
        "Ae1": FpModule.from_rows(ring, [[e2]], 1),
        "Ae2": FpModule.from_rows(ring, [[e1]], 1),
        "zero": FpModule.from_rows(ring, [[1]], 1),
    }


class TestIdempotents:
    def test_decomposition_of_the_algebra(self):
        decomposition = unital_decomposition(a2_modules()["A"])
        assert decomposition.reconstructs
        assert decomposition.total == FgAbGroup(0, (2, 2, 2))
        assert [c.group for c in decomposition.components] == [C2, FgAbGroup(0, (2, 2))]
        assert [c.idempotent for c in decomposition.components] == ["e1", "e2"]

    @pytest.mark.parametrize("name", ["A", "Ae1", "Ae2", "zero"])
    def test_decomposition_reconstructs(self, name):
        assert unital_decomposition(a2_modules()[name]).reconstructs

    def test_commutative_ring_has_one_component(self):
        decomposition = unital_decomposition(cyclic(Z6, 3))
        assert len(decomposition.components) == 1
        assert decomposition.components[0].group == FgAbGroup(0, (3,))

    @pytest.mark.parametrize("index", [0, 1])
    @pytest.mark.parametrize("name", ["A", "Ae1", "Ae2", "zero"])
    def test_yoneda(self, index, name):
        record = yoneda_check(index, a2_modules()[name])
        assert record.surjective
        assert record.holds

    def test_yoneda_values(self):
        record = yoneda_check(0, a2_modules()["A"])
        assert record.hom_group == record.component_group == C2
        record = yoneda_check(1, a2_modules()["Ae2"])
        assert record.component_group == C2

    def test_yoneda_index_out_of_range(self):
        with pytest.raises(HereditasError):
            yoneda_check(2, a2_modules()["A"])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
