#!/usr/bin/env python3
"""
Tests for the exact linear algebra layer: rings, kernels, solving, normal forms
"""
import itertools
import random

import pytest
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import hermite_normal_form as sympy_hermite
from sympy.polys.matrices.normalforms import smith_normal_form as sympy_smith

from src.config import config
from src.errors import CoefficientBlowupError, DimensionMismatchError, RingSpecError, UnsupportedRingError
from src.linalg import (
    FinDimAlgebra,
    Integers,
    IntegersMod,
    Mat,
    PrimeField,
    hermite_normal_form,
    left_kernel,
    smith_normal_form,
    solve_left,
    solve_middle_linear,
    xgcd,
)
from src.linalg.echelon import echelon_form, hermite_modulo, lattice_contains

SMALL_MODULI = (2, 3, 4, 5, 6, 8)


def all_matrices(ring, rows, cols):
    elements = list(ring.elements())
    for entries in itertools.product(elements, repeat=rows * cols):
        yield Mat(ring, rows, cols, tuple(entries))


def all_vectors(ring, length):
    return [list(v) for v in itertools.product(list(ring.elements()), repeat=length)]


def span(ring, generators, length):
    """Additive span of row vectors over Z/n by closure"""
    zero = tuple([0] * length)
    seen = {zero}
    frontier = [zero]
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = tuple(ring.add(a, b) for a, b in zip(current, g))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


# ============================================================================
# Rings
# ============================================================================


class TestRings:
    def test_prime_field_rejects_composite(self):
        with pytest.raises(RingSpecError):
            PrimeField(4)

    def test_integers_mod_needs_two(self):
        with pytest.raises(RingSpecError):
            IntegersMod(1)

    def test_path_algebra_products(self):
        ring = FinDimAlgebra.path_a2()
        e1, e2, a = ring.basis()
        assert ring.mul(a, e1) == a
        assert ring.mul(e2, a) == a
        assert ring.is_zero(ring.mul(e1, a))
        assert ring.is_zero(ring.mul(a, a))
        assert ring.one() == ring.add(e1, e2)
        assert not ring.is_commutative

    def test_opposite_algebra(self):
        ring = FinDimAlgebra.path_a2()
        op = ring.opposite()
        e1, _, a = op.basis()
        assert op.mul(e1, a) == a
        assert op.opposite() == ring

    def test_non_associative_table_rejected(self):
        products = {
            ("e", "e"): {"e": 1},
            ("e", "x"): {"x": 1},
            ("x", "e"): {"x": 1},
            ("e", "y"): {"y": 1},
            ("y", "e"): {"y": 1},
            ("x", "x"): {"y": 1},
            ("y", "x"): {"x": 1},
        }
        with pytest.raises(RingSpecError):
            FinDimAlgebra.from_table(2, ["e", "x", "y"], products, ["e"])

    def test_ring_sizes(self):
        assert IntegersMod(6).size() == 6
        assert FinDimAlgebra.path_a2().size() == 8
        assert Integers().size() is None


# ============================================================================
# Matrices
# ============================================================================


class TestMat:
    def test_entries_are_canonicalized(self):
        ring = IntegersMod(4)
        raw = Mat(ring, 1, 3, (5, -1, 8))
        canonical = Mat.from_rows(ring, [[1, 3, 0]])
        assert raw.entries == (1, 3, 0)
        assert raw == canonical
        assert hash(raw) == hash(canonical)
        assert len({raw, canonical}) == 1

    def test_algebra_scalars_are_canonicalized(self):
        ring = FinDimAlgebra.path_a2()
        assert Mat(ring, 1, 1, (1,)) == Mat.identity(ring, 1)
        assert Mat(ring, 1, 1, ((3, 2, 5),)) == Mat(ring, 1, 1, ((1, 0, 1),))

    def test_shape_must_match_entries(self):
        with pytest.raises(DimensionMismatchError):
            Mat(Integers(), 2, 2, (1, 2, 3))


# ============================================================================
# Kernels
# ============================================================================


class TestLeftKernel:
    def test_two_mod_four(self):
        ring = IntegersMod(4)
        assert left_kernel(Mat.from_rows(ring, [[2]])) == Mat.from_rows(ring, [[2]])

    def test_two_mod_six(self):
        ring = IntegersMod(6)
        assert left_kernel(Mat.from_rows(ring, [[2]])) == Mat.from_rows(ring, [[3]])

    def test_integers_column(self):
        ring = Integers()
        assert left_kernel(Mat.from_rows(ring, [[2], [3]])) == Mat.from_rows(ring, [[3, -2]])

    def test_injective_over_integers(self):
        assert left_kernel(Mat.from_rows(Integers(), [[2]])).rows == 0

    @pytest.mark.parametrize("n", SMALL_MODULI)
    @pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_matches_brute_force(self, n, shape):
        ring = IntegersMod(n)
        rows, cols = shape
        vectors = all_vectors(ring, rows)
        for a in all_matrices(ring, rows, cols):
            kernel = left_kernel(a)
            for i in range(kernel.rows):
                assert (kernel.row_mat(i) @ a).is_zero()
            expected = {
                tuple(v) for v in vectors if (Mat.from_rows(ring, [v], rows) @ a).is_zero()
            }
            assert span(ring, kernel.rows_list(), rows) == expected

    def test_algebra_kernel(self):
        ring = FinDimAlgebra.path_a2()
        e1, e2, a = ring.basis()
        m = Mat.from_rows(ring, [[a]])
        kernel = left_kernel(m)
        assert kernel.rows > 0
        for i in range(kernel.rows):
            assert (kernel.row_mat(i) @ m).is_zero()
        assert (Mat.from_rows(ring, [[e1]]) @ m).is_zero()
        assert not (Mat.from_rows(ring, [[e2]]) @ m).is_zero()


# ============================================================================
# Solving
# ============================================================================


class TestSolve:
    @pytest.mark.parametrize("n", SMALL_MODULI)
    def test_solve_left_matches_image(self, n):
        ring = IntegersMod(n)
        rng = random.Random(n)
        for _ in range(25):
            rows, cols = rng.randint(1, 2), rng.randint(1, 2)
            a = Mat.from_rows(ring, [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)])
            image = {
                (Mat.from_rows(ring, [x], rows) @ a).entries for x in all_vectors(ring, rows)
            }
            for target in all_vectors(ring, cols):
                b = Mat.from_rows(ring, [target], cols)
                x = solve_left(a, b)
                if b.entries in image:
                    assert x is not None and x @ a == b
                else:
                    assert x is None

    def test_solve_over_integers(self):
        ring = Integers()
        a = Mat.from_rows(ring, [[4], [6]])
        assert solve_left(a, Mat.from_rows(ring, [[2]])) is not None
        assert solve_left(a, Mat.from_rows(ring, [[3]])) is None

    def test_middle_linear_regular(self):
        ring = IntegersMod(6)
        a = Mat.from_rows(ring, [[2]])
        u = solve_middle_linear(a, a, a)
        assert u is not None and a @ u @ a == a

    def test_middle_linear_not_regular(self):
        ring = IntegersMod(4)
        a = Mat.from_rows(ring, [[2]])
        assert solve_middle_linear(a, a, a) is None


# ============================================================================
# Normal forms
# ============================================================================


class TestNormalForms:
    def test_xgcd(self):
        for a, b in [(2, 3), (12, 18), (-4, 6), (0, 5), (7, 0)]:
            x, y, g = xgcd(a, b)
            assert x * a + y * b == g >= 0

    @pytest.mark.parametrize(
        "rows,diagonal",
        [
            ([[2, 4], [6, 3]], [1, 18]),
            ([[2, 0], [0, 3]], [1, 6]),
            ([[4, 6], [6, 9]], [1, 0]),
            ([[0, 0], [0, 0]], [0, 0]),
            ([[6, 4, 2], [2, 2, 2]], [2, 2]),
        ],
    )
    def test_smith_identities(self, rows, diagonal):
        ring = Integers()
        a = Mat.from_rows(ring, rows)
        u, d, v = smith_normal_form(a)
        assert u @ a @ v == d
        assert [d[i, i] for i in range(min(d.rows, d.cols))] == diagonal
        assert abs(Matrix(u.rows_list()).det()) == 1
        assert abs(Matrix(v.rows_list()).det()) == 1

    def test_smith_random_against_determinant(self):
        rng = random.Random(7)
        ring = Integers()
        for _ in range(20):
            rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            _, d, _ = smith_normal_form(Mat.from_rows(ring, rows))
            diagonal = [d[i, i] for i in range(3)]
            assert all(x >= 0 for x in diagonal)
            for x, y in zip(diagonal, diagonal[1:]):
                assert (x == 0 and y == 0) or (x != 0 and y % x == 0)
            det = 1
            for x in diagonal:
                det *= x
            assert det == abs(Matrix(rows).det())

    def test_smith_diagonal_matches_sympy(self):
        rng = random.Random(19)
        ring = Integers()
        for _ in range(40):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            entries = [[rng.randint(-12, 12) for _ in range(cols)] for _ in range(rows)]
            _, d, _ = smith_normal_form(Mat.from_rows(ring, entries))
            expected = sympy_smith(DM(entries, ZZ)).to_Matrix()
            k = min(rows, cols)
            assert [d[i, i] for i in range(k)] == [int(expected[i, i]) for i in range(k)], entries

    def test_hermite_lattice_matches_sympy(self):
        rng = random.Random(23)
        for _ in range(40):
            rows, cols = rng.randint(1, 5), rng.randint(1, 4)
            entries = [[rng.randint(-12, 12) for _ in range(cols)] for _ in range(rows)]
            if not any(any(r) for r in entries):
                continue
            # sympy works on columns: the columns of its form span the lattice of our rows
            h = sympy_hermite(DM(entries, ZZ).transpose()).to_Matrix()
            columns = [[int(h[i, j]) for i in range(h.rows)] for j in range(h.cols)]
            ours = echelon_form(entries, cols)
            assert echelon_form(columns, cols) == ours, entries
            assert all(lattice_contains(ours, c) for c in columns)

    @pytest.mark.parametrize("modulus", [2, 4, 6, 12, 30, 97])
    def test_hermite_modulo_matches_integer_form(self, modulus):
        rng = random.Random(modulus)
        for _ in range(25):
            ncols = rng.randint(1, 4)
            rows = [[rng.randint(-40, 40) for _ in range(ncols)] for _ in range(rng.randint(0, 4))]
            multiples = [[modulus if j == i else 0 for j in range(ncols)] for i in range(ncols)]
            reduced = hermite_modulo(rows, ncols, modulus)
            assert reduced == echelon_form(rows + multiples, ncols)
            assert all(0 <= v <= modulus for _, p in reduced for v in p)

    def test_hermite_entries_reduced_above_pivots(self):
        rng = random.Random(29)
        for _ in range(30):
            ncols = rng.randint(2, 5)
            rows = [[rng.randint(-30, 30) for _ in range(ncols)] for _ in range(rng.randint(1, 6))]
            pivots = echelon_form(rows, ncols)
            for i, (col, p) in enumerate(pivots):
                assert p[col] > 0
                for _, q in pivots[:i]:
                    assert 0 <= q[col] < p[col]

    def test_smith_needs_integers(self):
        with pytest.raises(UnsupportedRingError):
            smith_normal_form(Mat.from_rows(IntegersMod(4), [[2]]))

    def test_hermite_form(self):
        ring = Integers()
        h = hermite_normal_form(Mat.from_rows(ring, [[2, 4], [3, 5]]))
        assert h == Mat.from_rows(ring, [[1, 1], [0, 2]])

    def test_howell_form_adds_annihilated_rows(self):
        ring = IntegersMod(4)
        h = hermite_normal_form(Mat.from_rows(ring, [[2, 1]]))
        assert h == Mat.from_rows(ring, [[2, 1], [0, 2]])


# ============================================================================
# Coefficient growth cap
# ============================================================================


def test_coefficient_blowup(monkeypatch):
    monkeypatch.setattr(config.arithmetic, "max_entry_bits", 16)
    with pytest.raises(CoefficientBlowupError):
        left_kernel(Mat.from_rows(Integers(), [[2**20]]))


def test_integer_kernels_stay_small(monkeypatch):
    monkeypatch.setattr(config.arithmetic, "max_entry_bits", 512)
    rng = random.Random(31)
    ring = Integers()
    for _ in range(10):
        a = Mat.from_rows(ring, [[rng.randint(-10, 10) for _ in range(4)] for _ in range(8)])
        kernel = left_kernel(a)
        assert kernel.rows >= 4
        for i in range(kernel.rows):
            assert (kernel.row_mat(i) @ a).is_zero()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
