"""
Concrete computable rings

Every ring is a free module of finite rank ``degree`` over a base that is
either Z (``modulus is None``) or Z/modulus. Elements are Python ints for the
rank-one rings and coordinate tuples for finite-dimensional algebras.
"""
import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import isprime

from ..errors import RingSpecError, SearchError

Element = Union[int, Tuple[int, ...]]


class RingSpec(ABC):
    """Base class for all rings"""

    modulus: Optional[int]

    @property
    @abstractmethod
    def degree(self) -> int:
        """Rank over the base (Z or Z/modulus)"""

    @property
    @abstractmethod
    def is_commutative(self) -> bool:
        pass

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def is_field(self) -> bool:
        return False

    @abstractmethod
    def canonical(self, x) -> Element:
        """Canonical representative of x"""

    @abstractmethod
    def add(self, x: Element, y: Element) -> Element:
        pass

    @abstractmethod
    def mul(self, x: Element, y: Element) -> Element:
        pass

    @abstractmethod
    def neg(self, x: Element) -> Element:
        pass

    @abstractmethod
    def scalar(self, c: int) -> Element:
        """The element c·1"""

    @abstractmethod
    def to_coords(self, x: Element) -> Tuple[int, ...]:
        pass

    @abstractmethod
    def from_coords(self, coords: Sequence[int]) -> Element:
        pass

    @abstractmethod
    def describe(self) -> str:
        pass

    def zero(self) -> Element:
        return self.scalar(0)

    def one(self) -> Element:
        return self.scalar(1)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def is_zero(self, x: Element) -> bool:
        return self.canonical(x) == self.zero()

    def basis(self) -> List[Element]:
        """Basis over the base ring"""
        basis = []
        for i in range(self.degree):
            coords = [0] * self.degree
            coords[i] = 1
            basis.append(self.from_coords(coords))
        return basis

    def idempotents(self) -> List[Element]:
        """Complete set of orthogonal idempotents"""
        return [self.one()]

    def opposite(self) -> "RingSpec":
        return self

    def elements(self) -> Iterator[Element]:
        """All elements of a finite ring in a fixed order"""
        if not self.is_finite:
            raise SearchError(f"{self.describe()} is infinite; elements cannot be listed")
        for coords in itertools.product(range(self.modulus), repeat=self.degree):
            yield self.from_coords(coords)

    def size(self) -> Optional[int]:
        if not self.is_finite:
            return None
        return self.modulus**self.degree

    def random_element(self, rng: random.Random, entry_bound: int = 10) -> Element:
        if self.modulus is None:
            return self.from_coords(
                [rng.randint(-entry_bound, entry_bound) for _ in range(self.degree)]
            )
        return self.from_coords([rng.randrange(self.modulus) for _ in range(self.degree)])

    def format_element(self, x: Element) -> str:
        return str(x)

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class Integers(RingSpec):
    """The ring Z"""

    modulus = None

    @property
    def degree(self) -> int:
        return 1

    @property
    def is_commutative(self) -> bool:
        return True

    def canonical(self, x) -> int:
        return int(x)

    def add(self, x: int, y: int) -> int:
        return x + y

    def mul(self, x: int, y: int) -> int:
        return x * y

    def neg(self, x: int) -> int:
        return -x

    def scalar(self, c: int) -> int:
        return int(c)

    def to_coords(self, x: int) -> Tuple[int, ...]:
        return (x,)

    def from_coords(self, coords: Sequence[int]) -> int:
        return int(coords[0])

    def describe(self) -> str:
        return "Z"


@dataclass(frozen=True)
class IntegersMod(RingSpec):
    """The ring Z/n, n >= 2"""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise RingSpecError(f"Z/n needs n >= 2, got {self.n}")

    @property
    def modulus(self) -> int:
        return self.n

    @property
    def degree(self) -> int:
        return 1

    @property
    def is_commutative(self) -> bool:
        return True

    def canonical(self, x) -> int:
        return int(x) % self.n

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.n

    def neg(self, x: int) -> int:
        return (-x) % self.n

    def scalar(self, c: int) -> int:
        return int(c) % self.n

    def to_coords(self, x: int) -> Tuple[int, ...]:
        return (x,)

    def from_coords(self, coords: Sequence[int]) -> int:
        return int(coords[0]) % self.n

    def describe(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    """The field F_p"""

    def __post_init__(self):
        if not isprime(self.n):
            raise RingSpecError(f"F_p needs a prime, got {self.n}")

    @property
    def p(self) -> int:
        return self.n

    @property
    def is_field(self) -> bool:
        return True

    def inverse(self, x: int) -> int:
        if x % self.n == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.n}")
        return pow(x, -1, self.n)

    def describe(self) -> str:
        return f"F_{self.n}"


@dataclass(frozen=True)
class FinDimAlgebra(RingSpec):
    """
    Finite-dimensional associative algebra over F_p

    ``constants[a][b][c]`` is the coefficient of basis element c in the product
    of basis elements a and b. ``idempotents`` lists indices of basis elements
    forming a complete set of orthogonal idempotents.
    """

    p: int
    basis_names: Tuple[str, ...]
    constants: Tuple[Tuple[Tuple[int, ...], ...], ...]
    idempotent_indices: Tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if not isprime(self.p):
            raise RingSpecError(f"Algebra characteristic must be prime, got {self.p}")
        if self.p >= 2**24:
            raise RingSpecError("Algebra characteristic too large for dense products")
        dim = len(self.basis_names)
        if dim == 0:
            raise RingSpecError("Algebra needs at least one basis element")
        if len(set(self.basis_names)) != dim:
            raise RingSpecError("Basis names must be distinct")
        table = self.table
        if table.shape != (dim, dim, dim):
            raise RingSpecError(
                f"Structure constants must have shape {(dim, dim, dim)}, got {table.shape}"
            )
        if np.any(table < 0) or np.any(table >= self.p):
            raise RingSpecError(f"Structure constants must lie in [0, {self.p})")

        left = np.einsum("abk,kcl->abcl", table, table) % self.p
        right = np.einsum("bck,akl->abcl", table, table) % self.p
        if not np.array_equal(left, right):
            raise RingSpecError("Structure constants are not associative")

        if not self.idempotent_indices:
            raise RingSpecError("A complete set of idempotents is required")
        for i in self.idempotent_indices:
            if not 0 <= i < dim:
                raise RingSpecError(f"Idempotent index {i} out of range")
        for i in self.idempotent_indices:
            for j in self.idempotent_indices:
                expected = np.zeros(dim, dtype=np.int64)
                if i == j:
                    expected[i] = 1
                if not np.array_equal(table[i, j], expected):
                    raise RingSpecError(
                        f"Basis elements {self.basis_names[i]}, {self.basis_names[j]} "
                        "are not orthogonal idempotents"
                    )
        unit = self.one()
        for b in self.basis():
            if self.mul(unit, b) != b or self.mul(b, unit) != b:
                raise RingSpecError("Idempotents do not sum to a two-sided unit")

    @classmethod
    def from_table(
        cls,
        p: int,
        basis_names: Sequence[str],
        products: Mapping[Tuple[str, str], Mapping[str, int]],
        idempotents: Sequence[str],
        label: str = "",
    ) -> "FinDimAlgebra":
        """Build an algebra from a sparse multiplication table; missing products are 0"""
        names = list(basis_names)
        index = {name: i for i, name in enumerate(names)}
        dim = len(names)
        table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (a, b), result in products.items():
            if a not in index or b not in index:
                raise RingSpecError(f"Unknown basis element in product {a}*{b}")
            for c, coef in result.items():
                if c not in index:
                    raise RingSpecError(f"Unknown basis element {c}")
                table[index[a]][index[b]][index[c]] = int(coef) % p
        try:
            idem = tuple(index[name] for name in idempotents)
        except KeyError as e:
            raise RingSpecError(f"Unknown idempotent {e}") from e
        constants = tuple(tuple(tuple(col) for col in row) for row in table)
        return cls(p, tuple(names), constants, idem, label)

    @classmethod
    def path_a2(cls, p: int = 2) -> "FinDimAlgebra":
        """Path algebra of the quiver 1 -> 2 with basis e1, e2, a"""
        products = {
            ("e1", "e1"): {"e1": 1},
            ("e2", "e2"): {"e2": 1},
            ("e2", "a"): {"a": 1},
            ("a", "e1"): {"a": 1},
        }
        return cls.from_table(p, ["e1", "e2", "a"], products, ["e1", "e2"], "A2")

    @cached_property
    def table(self) -> np.ndarray:
        return np.array(self.constants, dtype=np.int64)

    @property
    def modulus(self) -> int:
        return self.p

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def degree(self) -> int:
        return self.dim

    @cached_property
    def _commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    @property
    def is_commutative(self) -> bool:
        return self._commutative

    def canonical(self, x) -> Tuple[int, ...]:
        if isinstance(x, int):
            return self.scalar(x)
        coords = tuple(int(c) % self.p for c in x)
        if len(coords) != self.dim:
            raise RingSpecError(f"Element {x} does not have {self.dim} coordinates")
        return coords

    def add(self, x, y) -> Tuple[int, ...]:
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x) -> Tuple[int, ...]:
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y) -> Tuple[int, ...]:
        partial = np.tensordot(np.array(x, dtype=np.int64), self.table, axes=(0, 0)) % self.p
        product = np.tensordot(np.array(y, dtype=np.int64), partial, axes=(0, 0)) % self.p
        return tuple(int(c) for c in product)

    def scalar(self, c: int) -> Tuple[int, ...]:
        coords = [0] * self.dim
        for i in self.idempotent_indices:
            coords[i] = int(c) % self.p
        return tuple(coords)

    def to_coords(self, x) -> Tuple[int, ...]:
        return tuple(x)

    def from_coords(self, coords: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(c) % self.p for c in coords)

    def idempotents(self) -> List[Tuple[int, ...]]:
        return [self.basis()[i] for i in self.idempotent_indices]

    def opposite(self) -> "FinDimAlgebra":
        if self.is_commutative:
            return self
        transposed = self.table.transpose(1, 0, 2)
        constants = tuple(
            tuple(tuple(int(v) for v in col) for col in row) for row in transposed
        )
        label = self.label[:-3] if self.label.endswith("^op") else f"{self.label or 'A'}^op"
        return FinDimAlgebra(self.p, self.basis_names, constants, self.idempotent_indices, label)

    def format_element(self, x) -> str:
        terms = []
        for name, c in zip(self.basis_names, x):
            if c == 1:
                terms.append(name)
            elif c:
                terms.append(f"{c}*{name}")
        return " + ".join(terms) if terms else "0"

    def describe(self) -> str:
        name = self.label or "A"
        return f"{name} (dim {self.dim} over F_{self.p})"

    def product_table(self) -> Dict[Tuple[str, str], Dict[str, int]]:
        """Sparse multiplication table, inverse of ``from_table``"""
        products = {}
        for a, name_a in enumerate(self.basis_names):
            for b, name_b in enumerate(self.basis_names):
                result = {
                    self.basis_names[c]: int(v)
                    for c, v in enumerate(self.table[a, b])
                    if v
                }
                if result:
                    products[(name_a, name_b)] = result
        return products
