"""
Ring-level linear solving

Every ring is flattened to its base (Z or Z/n) through coordinates, so one
lattice engine serves all of them. A linear map between matrix spaces is
turned into an integer matrix by evaluating it on basis matrices.
"""
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import DimensionMismatchError, RingMismatchError, UnsupportedRingError
from .echelon import base_left_kernel, base_solve_left, hermite_rows
from .matrix import Mat
from .rings import RingSpec

LinearMap = Callable[[Mat], Mat]


def flatten(m: Mat) -> List[int]:
    to_coords = m.ring.to_coords
    return [c for x in m.entries for c in to_coords(x)]


def unflatten(ring: RingSpec, coords: Sequence[int], rows: int, cols: int) -> Mat:
    d = ring.degree
    entries = tuple(ring.from_coords(coords[k * d:(k + 1) * d]) for k in range(rows * cols))
    return Mat(ring, rows, cols, entries)


def linear_map_matrix(
    ring: RingSpec, func: LinearMap, in_shape: Tuple[int, int]
) -> Tuple[List[List[int]], int]:
    """
    Integer matrix of a base-linear map on in_shape matrices

    Row k is the flattened image of the k-th basis matrix, so x * matrix is
    the flattened image of the flattened input x. Also returns the output width.
    """
    rows, cols = in_shape
    width = len(flatten(func(Mat.zeros(ring, rows, cols))))
    basis = ring.basis()
    matrix = []
    for i in range(rows):
        for j in range(cols):
            for b in basis:
                matrix.append(flatten(func(Mat.unit(ring, rows, cols, i, j, b))))
    return matrix, width


def row_map_matrix(a: Mat) -> List[List[int]]:
    """Integer matrix of x -> x * a for row vectors x"""
    ring = a.ring
    if ring.degree == 1:
        return [[ring.to_coords(v)[0] for v in r] for r in a.rows_list()]
    matrix, _ = linear_map_matrix(ring, lambda x: x @ a, (1, a.rows))
    return matrix


def left_kernel(a: Mat) -> Mat:
    """Rows generate {x : x * a = 0}, in the canonical echelon form of the base"""
    ring = a.ring
    if a.rows == 0:
        return Mat.zeros(ring, 0, 0)
    matrix = row_map_matrix(a)
    kernel = base_left_kernel(matrix, a.cols * ring.degree, ring.modulus)
    rows = [unflatten(ring, k, 1, a.rows).row(0) for k in kernel]
    return Mat.from_rows(ring, rows, a.rows)


def solve_left(a: Mat, b: Mat) -> Optional[Mat]:
    """Some x with x * a = b (deterministic), or None"""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    if b.rows != 1 or b.cols != a.cols:
        raise DimensionMismatchError(f"Target must be 1x{a.cols}, got {b.rows}x{b.cols}")
    ring = a.ring
    matrix = row_map_matrix(a)
    x = base_solve_left(matrix, a.cols * ring.degree, flatten(b), ring.modulus)
    if x is None:
        return None
    return unflatten(ring, x, 1, a.rows)


def solve_rows(a: Mat, b: Mat) -> Optional[Mat]:
    """X with X * a = b, solved row by row"""
    rows = []
    for i in range(b.rows):
        x = solve_left(a, b.row_mat(i))
        if x is None:
            return None
        rows.append(x.row(0))
    return Mat.from_rows(a.ring, rows, a.rows)


def solve_linear(
    ring: RingSpec,
    shape: Tuple[int, int],
    equations: Sequence[Tuple[LinearMap, Mat]],
) -> Optional[Mat]:
    """
    Solve a system of base-linear matrix equations func_k(U) = target_k

    ``shape`` is the shape of the unknown U.
    """
    blocks = []
    target: List[int] = []
    widths = []
    for func, rhs in equations:
        if rhs.ring != ring:
            raise RingMismatchError(f"{rhs.ring} vs {ring}")
        matrix, width = linear_map_matrix(ring, func, shape)
        if width != len(flatten(rhs)):
            raise DimensionMismatchError(f"Equation target has the wrong shape {rhs.shape}")
        blocks.append(matrix)
        widths.append(width)
        target += flatten(rhs)
    nvars = shape[0] * shape[1] * ring.degree
    combined = [sum((block[k] for block in blocks), []) for k in range(nvars)]
    logger.debug(f"linear system over {ring}: {nvars} unknowns, {len(target)} equations")
    x = base_solve_left(combined, sum(widths), target, ring.modulus)
    if x is None:
        return None
    return unflatten(ring, x, *shape)


def solve_middle_linear(a: Mat, c: Mat, target: Mat) -> Optional[Mat]:
    """Some U with a * U * c = target, or None"""
    if not (a.ring == c.ring == target.ring):
        raise RingMismatchError(f"{a.ring}, {c.ring}, {target.ring}")
    if target.shape != (a.rows, c.cols):
        raise DimensionMismatchError(
            f"Target {target.shape} does not match {a.rows}x{c.cols}"
        )
    return solve_linear(a.ring, (a.cols, c.rows), [(lambda u: a @ u @ c, target)])


def hermite_normal_form(a: Mat) -> Mat:
    """Row Hermite normal form over Z (Howell form over Z/n, reduced echelon over F_p)"""
    ring = a.ring
    if ring.degree != 1:
        raise UnsupportedRingError(f"Row normal forms need a rank-one ring, got {ring}")
    rows = hermite_rows(row_map_matrix(a), a.cols, ring.modulus)
    return Mat.from_rows(ring, rows, a.cols)
