"""
Smith normal form over Z
"""
from dataclasses import dataclass
from typing import List, Sequence

from ..errors import UnsupportedRingError
from .echelon import check_growth, xgcd
from .matrix import Mat
from .rings import Integers


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@dataclass
class SmithForm:
    """U * A * V = D with U, V unimodular; ``v_inv`` is the inverse of V"""

    u: List[List[int]]
    d: List[List[int]]
    v: List[List[int]]
    v_inv: List[List[int]]

    @property
    def diagonal(self) -> List[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.v)))]


class _Smith:
    """Row/column reduction keeping the transforms in step"""

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int):
        self.m = len(rows)
        self.n = ncols
        self.d = [list(map(int, r)) for r in rows]
        self.u = _identity(self.m)
        self.v = _identity(self.n)
        self.v_inv = _identity(self.n)

    # row operations act on D and U
    def swap_rows(self, i: int, j: int) -> None:
        self.d[i], self.d[j] = self.d[j], self.d[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]

    def combine_rows(self, i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        """row_i, row_j <- x*row_i + y*row_j, z*row_i + w*row_j (determinant 1)"""
        for mat in (self.d, self.u):
            ri, rj = mat[i], mat[j]
            mat[i] = [x * a + y * b for a, b in zip(ri, rj)]
            mat[j] = [z * a + w * b for a, b in zip(ri, rj)]

    def negate_row(self, i: int) -> None:
        self.d[i] = [-a for a in self.d[i]]
        self.u[i] = [-a for a in self.u[i]]

    # column operations act on D and V, inversely on the rows of V^-1
    def swap_cols(self, i: int, j: int) -> None:
        for mat in (self.d, self.v):
            for r in mat:
                r[i], r[j] = r[j], r[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def combine_cols(self, i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        """col_i, col_j <- x*col_i + y*col_j, z*col_i + w*col_j (determinant 1)"""
        for mat in (self.d, self.v):
            for r in mat:
                a, b = r[i], r[j]
                r[i], r[j] = x * a + y * b, z * a + w * b
        # inverse transform on the rows of V^-1
        ri, rj = self.v_inv[i], self.v_inv[j]
        self.v_inv[i] = [w * a - z * b for a, b in zip(ri, rj)]
        self.v_inv[j] = [-y * a + x * b for a, b in zip(ri, rj)]

    def _smallest(self, t: int):
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                v = self.d[i][j]
                if v and (best is None or abs(v) < abs(self.d[best[0]][best[1]])):
                    best = (i, j)
        return best

    def _clear(self, t: int) -> bool:
        """Zero out row t and column t beyond the pivot; True if nothing changed"""
        clean = True
        for i in range(t + 1, self.m):
            b = self.d[i][t]
            if b == 0:
                continue
            clean = False
            a = self.d[t][t]
            if b % a == 0:
                self.combine_rows(t, i, 1, 0, -(b // a), 1)
            else:
                x, y, g = xgcd(a, b)
                self.combine_rows(t, i, x, y, -(b // g), a // g)
        for j in range(t + 1, self.n):
            b = self.d[t][j]
            if b == 0:
                continue
            clean = False
            a = self.d[t][t]
            if b % a == 0:
                self.combine_cols(t, j, 1, 0, -(b // a), 1)
            else:
                x, y, g = xgcd(a, b)
                self.combine_cols(t, j, x, y, -(b // g), a // g)
        return clean

    def run(self) -> SmithForm:
        for t in range(min(self.m, self.n)):
            best = self._smallest(t)
            if best is None:
                break
            i, j = best
            if i != t:
                self.swap_rows(t, i)
            if j != t:
                self.swap_cols(t, j)
            while True:
                while not self._clear(t):
                    pass
                a = self.d[t][t]
                bad = next(
                    (
                        i
                        for i in range(t + 1, self.m)
                        for j in range(t + 1, self.n)
                        if self.d[i][j] % a
                    ),
                    None,
                )
                if bad is None:
                    break
                # pull the offending row into the pivot row and clear again
                self.combine_rows(t, bad, 1, 1, 0, 1)
            if self.d[t][t] < 0:
                self.negate_row(t)
            check_growth(self.u)
            check_growth(self.v)
        return SmithForm(self.u, self.d, self.v, self.v_inv)


def smith_form(rows: Sequence[Sequence[int]], ncols: int) -> SmithForm:
    """Smith normal form of an integer matrix given as rows"""
    return _Smith(rows, ncols).run()


def smith_normal_form(a: Mat):
    """Return (U, D, V) with U*A*V = D, U and V unimodular, d_1 | d_2 | ..., d_i >= 0"""
    if not isinstance(a.ring, Integers):
        raise UnsupportedRingError(f"Smith normal form needs Z, got {a.ring}")
    form = smith_form(a.rows_list(), a.cols)
    ring = a.ring
    return (
        Mat.from_rows(ring, form.u, a.rows),
        Mat.from_rows(ring, form.d, a.cols),
        Mat.from_rows(ring, form.v, a.cols),
    )
