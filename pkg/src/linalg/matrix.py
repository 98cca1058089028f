"""
Dense matrices over a RingSpec
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import DimensionMismatchError, RingMismatchError
from .rings import Element, RingSpec


@dataclass(frozen=True)
class Mat:
    """Row-major matrix with canonical entries; 0 x k and k x 0 are legal"""

    ring: RingSpec
    rows: int
    cols: int
    entries: Tuple[Element, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"Negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(self.ring.canonical(x) for x in self.entries))

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence], cols: int = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError("Column count of an empty matrix is ambiguous")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError(f"Ragged row of length {len(r)}, expected {cols}")
        entries = tuple(ring.canonical(x) for r in rows for x in r)
        return cls(ring, len(rows), cols, entries)

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "Mat":
        return cls(ring, rows, cols, (ring.zero(),) * (rows * cols))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Mat":
        zero, one = ring.zero(), ring.one()
        return cls(ring, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, ring: RingSpec, rows: int, cols: int, i: int, j: int, value: Element) -> "Mat":
        entries = [ring.zero()] * (rows * cols)
        entries[i * cols + j] = ring.canonical(value)
        return cls(ring, rows, cols, tuple(entries))

    @classmethod
    def diagonal(cls, ring: RingSpec, values: Sequence[Element], cols: int = None) -> "Mat":
        n = len(values)
        cols = n if cols is None else cols
        m = [[ring.zero()] * cols for _ in range(n)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls.from_rows(ring, m, cols)

    @classmethod
    def row_vector(cls, ring: RingSpec, values: Sequence[Element]) -> "Mat":
        return cls.from_rows(ring, [list(values)], len(values))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Element:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Element]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def row_mat(self, i: int) -> "Mat":
        return Mat(self.ring, 1, self.cols, tuple(self.row(i)))

    def rows_list(self) -> List[List[Element]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> List[Element]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def select_rows(self, indices: Iterable[int]) -> "Mat":
        return Mat.from_rows(self.ring, [self.row(i) for i in indices], self.cols)

    def _check_same(self, other: "Mat") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        add = self.ring.add
        return Mat(self.ring, self.rows, self.cols, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        neg = self.ring.neg
        return Mat(self.ring, self.rows, self.cols, tuple(neg(a) for a in self.entries))

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ring = self.ring
        zero = ring.zero()
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if a == zero:
                        continue
                    b = other.entries[k * other.cols + j]
                    if b == zero:
                        continue
                    acc = ring.add(acc, ring.mul(a, b))
                out.append(acc)
        return Mat(ring, self.rows, other.cols, tuple(out))

    def left_scale(self, a: Element) -> "Mat":
        """Entrywise a*x"""
        mul = self.ring.mul
        return Mat(self.ring, self.rows, self.cols, tuple(mul(a, x) for x in self.entries))

    def right_scale(self, a: Element) -> "Mat":
        """Entrywise x*a"""
        mul = self.ring.mul
        return Mat(self.ring, self.rows, self.cols, tuple(mul(x, a) for x in self.entries))

    def transpose(self) -> "Mat":
        return Mat(
            self.ring,
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def stack(self, other: "Mat") -> "Mat":
        """Rows of self followed by rows of other"""
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.cols != other.cols:
            raise DimensionMismatchError(f"Cannot stack {self.cols} and {other.cols} columns")
        return Mat(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    def hstack(self, other: "Mat") -> "Mat":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.rows != other.rows:
            raise DimensionMismatchError(f"Cannot join {self.rows} and {other.rows} rows")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Mat.from_rows(self.ring, rows, self.cols + other.cols)

    def block_diag(self, other: "Mat") -> "Mat":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        zero = self.ring.zero()
        rows = [r + [zero] * other.cols for r in self.rows_list()]
        rows += [[zero] * self.cols + r for r in other.rows_list()]
        return Mat.from_rows(self.ring, rows, self.cols + other.cols)

    def with_ring(self, ring: RingSpec) -> "Mat":
        """Same entries read over another ring with the same elements (e.g. the opposite)"""
        return Mat(ring, self.rows, self.cols, self.entries)

    def is_zero(self) -> bool:
        zero = self.ring.zero()
        return all(x == zero for x in self.entries)

    def drop_zero_rows(self) -> "Mat":
        zero = self.ring.zero()
        return Mat.from_rows(
            self.ring, [r for r in self.rows_list() if any(x != zero for x in r)], self.cols
        )

    def __str__(self) -> str:
        fmt = self.ring.format_element
        body = "; ".join(", ".join(fmt(x) for x in r) for r in self.rows_list())
        return f"[{body}] ({self.rows}x{self.cols} over {self.ring})"
