"""
Integer lattice engine

Rows are lists of Python ints. With ``modulus=None`` the routines work in
Z^m (Hermite normal form); with a modulus n they work with the lattice
spanned by the rows together with n*Z^m, which is the same as working in
(Z/n)^m (Howell form: pivots divide n and every row killing its own pivot
is adjoined back).
"""
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import config
from ..errors import CoefficientBlowupError, DimensionMismatchError

Row = List[int]
Pivot = Tuple[int, Row]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b = g = gcd(a, b) >= 0"""
    prevx, x = 1, 0
    prevy, y = 0, 1
    while b:
        q = a // b
        x, prevx = prevx - q * x, x
        y, prevy = prevy - q * y, y
        a, b = b, a % b
    if a < 0:
        return -prevx, -prevy, -a
    return prevx, prevy, a


def check_growth(rows: Sequence[Sequence[int]]) -> None:
    cap = config.arithmetic.max_entry_bits
    for row in rows:
        for v in row:
            if v.bit_length() > cap:
                raise CoefficientBlowupError(
                    f"Intermediate entry with {v.bit_length()} bits exceeds the cap of {cap} "
                    "(HEREDITAS_MAX_ENTRY_BITS)"
                )


def _reduce(row: Row, modulus: Optional[int]) -> Row:
    if modulus is None:
        return row
    return [v % modulus for v in row]


def _combine(p: Row, r: Row, col: int) -> Tuple[Row, Row]:
    """Unimodular combination of two rows: new pivot gets gcd, other gets 0 at col"""
    a, b = p[col], r[col]
    if a != 0 and b % a == 0:
        q = b // a
        return p, [rv - q * pv for pv, rv in zip(p, r)]
    x, y, g = xgcd(a, b)
    ag, bg = a // g, b // g
    new_p = [x * pv + y * rv for pv, rv in zip(p, r)]
    new_r = [ag * rv - bg * pv for pv, rv in zip(p, r)]
    return new_p, new_r


def _leading(row: Row) -> Optional[int]:
    return next((j for j, v in enumerate(row) if v), None)


def _size_reduce(pivots: List[Pivot], modulus: Optional[int]) -> None:
    """Bring every entry above a pivot g into [0, g)"""
    for i, (col, p) in enumerate(pivots):
        g = p[col]
        for j in range(i):
            cj, q_row = pivots[j]
            q = q_row[col] // g
            if q:
                q_row = _reduce([a - q * b for a, b in zip(q_row, p)], modulus)
                pivots[j] = (cj, q_row)


def _insert(pivots: Dict[int, Row], row: Row) -> bool:
    """Fold one row into a Hermite basis; True if the basis changed"""
    col = _leading(row)
    changed = False
    while col is not None:
        p = pivots.get(col)
        if p is None:
            pivots[col] = [-v for v in row] if row[col] < 0 else row
            return True
        new_p, row = _combine(p, row, col)
        if new_p is not p:
            pivots[col] = new_p
            changed = True
        col = _leading(row)
    return changed


def _integer_echelon(rows: List[Row]) -> List[Pivot]:
    """
    Hermite form over Z by row insertion

    The basis is size-reduced after every insertion, so entries stay bounded
    by the pivots instead of compounding across eliminations.
    """
    basis: Dict[int, Row] = {}
    for r in rows:
        if not _insert(basis, r):
            continue
        pivots = sorted(basis.items())
        _size_reduce(pivots, None)
        check_growth([p for _, p in pivots])
        basis = dict(pivots)
    return sorted(basis.items())


def _modular_echelon(work: List[Row], ncols: int, modulus: int) -> List[Pivot]:
    pivots: List[Pivot] = []
    for col in range(ncols):
        if not work:
            break
        candidates = [r for r in work if r[col] != 0]
        if not candidates:
            continue
        rest = [r for r in work if r[col] == 0]

        p = candidates[0]
        for r in candidates[1:]:
            p, r = _combine(p, r, col)
            r = _reduce(r, modulus)
            if any(r):
                rest.append(r)
            p = _reduce(p, modulus)

        # fold in modulus * e_col; the second output is (modulus/g) * p
        x, _, g = xgcd(p[col], modulus)
        howell = [(modulus // g) * v % modulus for v in p]
        p = [(x * v) % modulus for v in p]
        p[col] = g
        if any(howell):
            rest.append(howell)

        pivots.append((col, p))
        work = rest

    _size_reduce(pivots, modulus)
    return pivots


def echelon_form(
    rows: Sequence[Sequence[int]], ncols: int, modulus: Optional[int] = None
) -> List[Pivot]:
    """
    Canonical echelon form of the lattice spanned by ``rows``

    Returns ``(pivot_column, row)`` pairs in increasing pivot order. Pivots are
    positive (and divide the modulus when there is one); entries above a pivot
    g lie in [0, g).
    """
    work = []
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatchError(f"Row of length {len(r)} in a {ncols}-column lattice")
        r = _reduce([int(v) for v in r], modulus)
        if any(r):
            work.append(r)
    if modulus is None:
        return _integer_echelon(work)
    return _modular_echelon(work, ncols, modulus)


def hermite_modulo(rows: Sequence[Sequence[int]], ncols: int, modulus: int) -> List[Pivot]:
    """
    Hermite form over Z of span(rows) + modulus * Z^ncols

    Built from the Howell form modulo ``modulus``, with modulus * e_col standing
    in for every column without a Howell pivot, so no entry ever exceeds the
    modulus.
    """
    howell = dict(echelon_form(rows, ncols, modulus))
    pivots = [
        (col, list(howell[col]) if col in howell else [modulus if j == col else 0 for j in range(ncols)])
        for col in range(ncols)
    ]
    _size_reduce(pivots, None)
    return pivots


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int, modulus: Optional[int] = None) -> List[Row]:
    return [p for _, p in echelon_form(rows, ncols, modulus)]


def reduce_against(
    pivots: Sequence[Pivot], target: Sequence[int], modulus: Optional[int] = None
) -> Tuple[Row, List[int]]:
    """
    Greedy reduction of ``target`` by an echelon basis

    Returns (residual, coefficients); the residual is zero exactly when the
    target lies in the lattice.
    """
    residual = _reduce([int(v) for v in target], modulus)
    coeffs = []
    for col, p in pivots:
        v = residual[col]
        g = p[col]
        if v % g:
            coeffs.append(0)
            continue
        q = v // g
        coeffs.append(q)
        if q:
            residual = _reduce([a - q * b for a, b in zip(residual, p)], modulus)
    return residual, coeffs


def lattice_contains(pivots: Sequence[Pivot], target: Sequence[int], modulus: Optional[int] = None) -> bool:
    residual, _ = reduce_against(pivots, target, modulus)
    return not any(residual)


def _augment(matrix: Sequence[Sequence[int]]) -> List[Row]:
    n = len(matrix)
    return [list(matrix[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]


def base_left_kernel(
    matrix: Sequence[Sequence[int]], width: int, modulus: Optional[int] = None
) -> List[Row]:
    """Canonical generators of {x : x * matrix = 0} over Z or Z/modulus"""
    n = len(matrix)
    if n == 0:
        return []
    pivots = echelon_form(_augment(matrix), width + n, modulus)
    kernel = [p[width:] for col, p in pivots if col >= width]
    logger.debug(f"left kernel of {n}x{width} system: {len(kernel)} generators")
    return kernel


def base_solve_left(
    matrix: Sequence[Sequence[int]], width: int, target: Sequence[int], modulus: Optional[int] = None
) -> Optional[Row]:
    """Deterministic x with x * matrix = target, or None"""
    if len(target) != width:
        raise DimensionMismatchError(f"Target of length {len(target)} for {width} columns")
    n = len(matrix)
    if n == 0:
        return [] if not any(_reduce(list(target), modulus)) else None
    pivots = echelon_form(_augment(matrix), width + n, modulus)
    head = [(col, p) for col, p in pivots if col < width]
    residual, _ = reduce_against(head, list(target) + [0] * n, modulus)
    if any(residual[:width]):
        return None
    return _reduce([-v for v in residual[width:]], modulus)


def base_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], bcols: int) -> List[Row]:
    return [[sum(r[k] * b[k][j] for k in range(len(r))) for j in range(bcols)] for r in a]
