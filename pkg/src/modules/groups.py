"""
Finitely generated abelian groups and lattice homology
"""
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import factorint

from ..errors import HereditasError, InfiniteModuleError
from ..linalg.echelon import (
    Pivot,
    base_left_kernel,
    echelon_form,
    hermite_modulo,
    hermite_rows,
    reduce_against,
)
from ..linalg.smith import smith_form


@dataclass(frozen=True)
class FgAbGroup:
    """Z^free_rank x Z/d_1 x ... x Z/d_k with 2 <= d_1 | d_2 | ... | d_k"""

    free_rank: int = 0
    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise HereditasError(f"Negative free rank {self.free_rank}")
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for i, d in enumerate(factors):
            if d < 2:
                raise HereditasError(f"Invariant factors must be >= 2, got {d}")
            if i and d % factors[i - 1]:
                raise HereditasError(f"Invariant factors {factors} do not form a divisibility chain")

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls()

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "FgAbGroup":
        """Normalize a product of cyclic groups (order 0 meaning Z) to invariant factors"""
        free_rank = 0
        exponents = {}
        for n in orders:
            n = abs(int(n))
            if n == 0:
                free_rank += 1
                continue
            for p, e in factorint(n).items():
                exponents.setdefault(p, []).append(e)
        length = max((len(v) for v in exponents.values()), default=0)
        factors = [1] * length
        for p, exps in exponents.items():
            exps = sorted(exps, reverse=True)
            for i, e in enumerate(exps):
                factors[length - 1 - i] *= p**e
        return cls(free_rank, tuple(factors))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def order(self) -> Optional[int]:
        """Group order, None when infinite"""
        if self.free_rank:
            return None
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        """Least e with e*G = 0 (0 when G is infinite)"""
        if self.free_rank:
            return 0
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def direct_sum(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_cyclic_orders(
            [0] * (self.free_rank + other.free_rank)
            + list(self.invariant_factors)
            + list(other.invariant_factors)
        )

    def require_finite(self) -> int:
        if not self.is_finite:
            raise InfiniteModuleError(f"{self} is infinite")
        return self.order

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"C{d}" for d in self.invariant_factors]
        return " x ".join(parts)


@dataclass
class LatticeQuotient:
    """
    K / L for lattices L <= K <= Z^ncols

    ``generators[i]`` (a vector of Z^ncols) generates a cyclic factor of order
    ``orders[i]`` (0 for infinite). ``coordinates`` reads off the class of a
    vector of K in that decomposition.
    """

    group: FgAbGroup
    ncols: int
    generators: List[List[int]]
    orders: List[int]
    basis: List[Pivot] = field(repr=False, default_factory=list)
    change: List[List[int]] = field(repr=False, default_factory=list)
    kept: List[int] = field(repr=False, default_factory=list)

    def coordinates(self, vector: Sequence[int]) -> List[int]:
        residual, y = reduce_against(self.basis, vector)
        if any(residual):
            raise HereditasError("Vector does not lie in the cycle lattice")
        coords = []
        for idx, order in zip(self.kept, self.orders):
            c = sum(y[k] * self.change[k][idx] for k in range(len(y)))
            coords.append(c % order if order else c)
        return coords

    def is_zero_class(self, vector: Sequence[int]) -> bool:
        return not any(self.coordinates(vector))


def quotient_group(
    basis_rows: Sequence[Sequence[int]],
    sub_rows: Sequence[Sequence[int]],
    ncols: int,
    modulus: Optional[int] = None,
) -> LatticeQuotient:
    """
    K / L with K spanned by basis_rows and L (contained in K) spanned by sub_rows

    A modulus promises modulus*Z^ncols <= K, which keeps the basis of K reduced.
    """
    if modulus is None:
        k_basis = echelon_form(basis_rows, ncols)
    else:
        k_basis = hermite_modulo(basis_rows, ncols, modulus)
    r = len(k_basis)
    coefficient_rows = []
    for row in sub_rows:
        residual, y = reduce_against(k_basis, row)
        if any(residual):
            raise HereditasError("Sublattice is not contained in the lattice")
        if any(y):
            coefficient_rows.append(y)
    # only the column transform is used, so a Hermite basis of the rows will do
    form = smith_form(hermite_rows(coefficient_rows, r), r)
    diagonal = form.diagonal + [0] * (r - len(form.diagonal))

    generators, orders, kept = [], [], []
    for i in range(r):
        if diagonal[i] == 1:
            continue
        vector = [0] * ncols
        for k, coef in enumerate(form.v_inv[i]):
            if coef:
                row = k_basis[k][1]
                vector = [a + coef * b for a, b in zip(vector, row)]
        generators.append(vector)
        orders.append(diagonal[i])
        kept.append(i)
    group = FgAbGroup(
        free_rank=sum(1 for d in orders if d == 0),
        invariant_factors=tuple(d for d in orders if d > 1),
    )
    return LatticeQuotient(group, ncols, generators, orders, k_basis, form.v, kept)


def cycle_modulus(
    outer_rel: Sequence[Sequence[int]], outer_width: int, modulus: Optional[int] = None
) -> Optional[int]:
    """
    A d with d*Z^outer_width inside the span of outer_rel

    The ring modulus when there is one, otherwise the index of the relation
    lattice when it has full rank (the order of a finite target kills it).
    """
    if modulus is not None:
        return modulus
    pivots = echelon_form(outer_rel, outer_width)
    if len(pivots) < outer_width:
        return None
    return prod(p[col] for col, p in pivots)


def cycle_lattice(
    outer: Sequence[Sequence[int]],
    outer_width: int,
    outer_rel: Sequence[Sequence[int]],
    ncols: int,
    modulus: Optional[int] = None,
) -> List[List[int]]:
    """
    Generators of {x in Z^ncols : x * outer lies in the span of outer_rel}

    When the target is finite the kernel is taken modulo its order and the
    multiples of that order are adjoined back.
    """
    modulus = cycle_modulus(outer_rel, outer_width, modulus)
    stacked = [list(r) for r in outer] + [list(r) for r in outer_rel]
    kernel = base_left_kernel(stacked, outer_width, modulus)
    cycles = [k[:ncols] for k in kernel]
    if modulus is not None:
        cycles += [[modulus if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    return cycles


def homology(
    ncols: int,
    middle_rel: Sequence[Sequence[int]],
    inner: Optional[Sequence[Sequence[int]]] = None,
    outer: Optional[Sequence[Sequence[int]]] = None,
    outer_width: int = 0,
    outer_rel: Sequence[Sequence[int]] = (),
    modulus: Optional[int] = None,
) -> LatticeQuotient:
    """
    Homology of  X --inner--> Y --outer--> Z  on lattice-presented groups

    Y = Z^ncols / middle_rel, Z = Z^outer_width / outer_rel. Cycles are vectors
    whose image under ``outer`` lies in outer_rel; boundaries are the rows of
    ``inner`` plus middle_rel. A modulus, when every relation lattice contains
    modulus*Z^m, keeps the kernel computation reduced.
    """
    if outer is None:
        cycles = [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    else:
        modulus = cycle_modulus(outer_rel, outer_width, modulus)
        cycles = cycle_lattice(outer, outer_width, outer_rel, ncols, modulus)
    boundaries = [list(r) for r in (inner or [])] + [list(r) for r in middle_rel]
    logger.debug(
        f"homology: {ncols} coordinates, {len(cycles)} cycle and {len(boundaries)} boundary generators"
    )
    return quotient_group(cycles, boundaries, ncols, modulus)


def block_relations(rel: Sequence[Sequence[int]], width: int, copies: int) -> List[List[int]]:
    """Relations of the direct sum of ``copies`` copies of Z^width / rel"""
    rows = []
    for c in range(copies):
        for r in rel:
            rows.append([0] * (c * width) + list(r) + [0] * ((copies - c - 1) * width))
    return rows
