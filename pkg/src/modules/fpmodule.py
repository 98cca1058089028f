"""
Finitely presented modules

Convention: elements of a free module are row vectors, relations are rows,
and a module over a ring on the right is treated as a module on the left
over the opposite ring (``working_ring``).
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from ..config import config
from ..errors import DimensionMismatchError, HereditasError, RingMismatchError, UnsupportedRingError
from ..linalg import Mat, RingSpec, flatten, left_kernel, linear_map_matrix, solve_middle_linear, solve_rows, unflatten
from ..linalg.echelon import echelon_form
from .groups import FgAbGroup, LatticeQuotient, block_relations, homology, quotient_group

SIDES = ("left", "right")


@dataclass(frozen=True)
class FpModule:
    """coker of the relation matrix: ``generators`` generators, one relation per row"""

    ring: RingSpec
    side: str
    generators: int
    relations: Mat

    def __post_init__(self):
        if self.side not in SIDES:
            raise HereditasError(f"Side must be 'left' or 'right', got {self.side!r}")
        if self.relations.ring != self.ring:
            raise RingMismatchError(f"Relations over {self.relations.ring}, module over {self.ring}")
        if self.relations.cols != self.generators:
            raise DimensionMismatchError(
                f"Relation matrix has {self.relations.cols} columns for {self.generators} generators"
            )

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence], generators: int, side: str = "left") -> "FpModule":
        return cls(ring, side, generators, Mat.from_rows(ring, rows, generators))

    @classmethod
    def free(cls, ring: RingSpec, rank: int, side: str = "left") -> "FpModule":
        return cls(ring, side, rank, Mat.zeros(ring, 0, rank))

    @classmethod
    def zero(cls, ring: RingSpec, side: str = "left") -> "FpModule":
        return cls(ring, side, 0, Mat.zeros(ring, 0, 0))

    @classmethod
    def cyclic(cls, ring: RingSpec, annihilators: Sequence, side: str = "left") -> "FpModule":
        """R / (a_1, ..., a_k) on one generator"""
        return cls.from_rows(ring, [[a] for a in annihilators], 1, side)

    @property
    def working_ring(self) -> RingSpec:
        if self.side == "left":
            return self.ring
        return self.ring.opposite()

    @property
    def working_relations(self) -> Mat:
        return self.relations.with_ring(self.working_ring)

    @property
    def opposite_side(self) -> str:
        return "right" if self.side == "left" else "left"

    def with_side(self, side: str) -> "FpModule":
        """Same presentation on the other side; only meaningful over a commutative ring"""
        if side == self.side:
            return self
        if not self.ring.is_commutative:
            raise UnsupportedRingError(f"{self.ring} is not commutative; sides cannot be swapped")
        return FpModule(self.ring, side, self.generators, self.relations)

    def direct_sum(self, other: "FpModule") -> "FpModule":
        self._check_compatible(other)
        return FpModule(self.ring, self.side, self.generators + other.generators, self.relations.block_diag(other.relations))

    def quotient(self, rows: Mat) -> "FpModule":
        """Quotient by the submodule generated by the given elements"""
        if rows.cols != self.generators:
            raise DimensionMismatchError(f"Elements must have {self.generators} coordinates")
        return FpModule(self.ring, self.side, self.generators, self.relations.stack(rows))

    def submodule(self, elements: Mat) -> "FpModule":
        """Presentation of the submodule generated by the given elements"""
        if elements.cols != self.generators:
            raise DimensionMismatchError(f"Elements must have {self.generators} coordinates")
        w = self.working_ring
        stacked = elements.with_ring(w).stack(self.working_relations)
        kernel = left_kernel(stacked)
        rows = [r[: elements.rows] for r in kernel.rows_list()]
        relations = Mat.from_rows(w, rows, elements.rows).drop_zero_rows()
        return FpModule(self.ring, self.side, elements.rows, relations.with_ring(self.ring))

    def extension(self, quotient: "FpModule", cocycle: Mat) -> "FpModule":
        """
        Middle term of the extension 0 -> self -> E -> quotient -> 0 classified by
        a cocycle: row j of ``cocycle`` is the image in self of the j-th relation
        of ``quotient``
        """
        self._check_compatible(quotient)
        if cocycle.shape != (quotient.relations.rows, self.generators):
            raise DimensionMismatchError(
                f"Cocycle must be {quotient.relations.rows}x{self.generators}, got {cocycle.shape}"
            )
        top = self.relations.hstack(Mat.zeros(self.ring, self.relations.rows, quotient.generators))
        bottom = cocycle.hstack(-quotient.relations)
        return FpModule(self.ring, self.side, self.generators + quotient.generators, top.stack(bottom))

    def _check_compatible(self, other: "FpModule") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.side != other.side:
            raise HereditasError(f"Cannot combine a {self.side} and a {other.side} module")

    def __str__(self) -> str:
        return f"{self.side} module over {self.ring}: {self.generators} generators, relations {self.relations}"


@dataclass(frozen=True)
class NPresentation:
    """P_n -> ... -> P_1 -> P_0 -> M -> 0; ``maps`` is [d_n, ..., d_1] over the working ring"""

    module: FpModule
    n: int
    maps: Tuple[Mat, ...]
    witnesses: Tuple[Mat, ...]

    def map(self, i: int) -> Mat:
        """d_i for 1 <= i <= n"""
        return self.maps[self.n - i]


@dataclass(frozen=True)
class ModMorphism:
    """source -> target sending generator i to row i of ``matrix``; A_src * S = W * A_tgt"""

    source: FpModule
    target: FpModule
    matrix: Mat
    witness: Mat

    def verify(self) -> bool:
        w = self.source.working_ring
        lhs = self.source.working_relations @ self.matrix.with_ring(w)
        return lhs == self.witness.with_ring(w) @ self.target.working_relations


@dataclass
class HomResult:
    group: FgAbGroup
    morphisms: List[ModMorphism] = field(default_factory=list)
    orders: List[int] = field(default_factory=list)


@dataclass
class PdCertificate:
    """pd(M) <= 1 decided through projectivity of the first syzygy"""

    module: FpModule
    verdict: bool
    syzygy: FpModule
    witness: Optional[Mat] = None
    refutation: str = ""


def syzygy(module: FpModule) -> FpModule:
    """First syzygy: generated by the relation rows, related by their left kernel"""
    a = module.working_relations
    relations = left_kernel(a)
    if relations.rows == 0:
        relations = Mat.zeros(a.ring, 0, a.rows)
    return FpModule(module.ring, module.side, a.rows, relations.with_ring(module.ring))


def build_n_presentation(module: FpModule, n: int) -> NPresentation:
    """Extend the presentation to P_n -> ... -> P_0 by iterated left kernels"""
    if n < 0:
        raise HereditasError(f"n must be non-negative, got {n}")
    maps: List[Mat] = []
    current = module.working_relations
    if n >= 1:
        maps.append(current)
    for _ in range(n - 1):
        nxt = left_kernel(current)
        if nxt.rows == 0:
            nxt = Mat.zeros(current.ring, 0, current.rows)
        maps.append(nxt)
        current = nxt
    witnesses = []
    for lower, upper in zip(maps, maps[1:]):
        kernel = left_kernel(lower)
        witness = solve_rows(upper, kernel) if kernel.rows else Mat.zeros(lower.ring, 0, upper.rows)
        if witness is None:
            raise HereditasError("Kernel is not generated by the next map")
        witnesses.append(witness)
    logger.debug(f"{n}-presentation with ranks {[m.cols for m in maps]}")
    return NPresentation(module, n, tuple(reversed(maps)), tuple(reversed(witnesses)))


def verify_presentation(presentation: NPresentation) -> bool:
    """Composites vanish and every recorded kernel is generated by the next map"""
    n = presentation.n
    for i in range(1, n):
        lower, upper = presentation.map(i), presentation.map(i + 1)
        if not (upper @ lower).is_zero():
            return False
        witness = presentation.witnesses[n - 1 - i]
        if witness @ upper != left_kernel(lower):
            return False
    return True


def is_projective(module: FpModule) -> Tuple[bool, Optional[Mat]]:
    """M is projective iff A * U * A = A is solvable for its relation matrix A"""
    a = module.working_relations
    u = solve_middle_linear(a, a, a)
    if u is None:
        return False, None
    return True, u.with_ring(module.ring)


def pd_le_1(module: FpModule) -> PdCertificate:
    omega = syzygy(module)
    projective, witness = is_projective(omega)
    if projective:
        return PdCertificate(module, True, omega, witness)
    return PdCertificate(
        module,
        False,
        omega,
        refutation="A * U * A = A has no solution for the syzygy's relation matrix",
    )


def projective_dimension(module: FpModule, cap: Optional[int] = None) -> Optional[int]:
    """Smallest i with the i-th syzygy projective, or None if it exceeds ``cap``"""
    cap = config.resolution.pd_cap if cap is None else cap
    current = module
    for i in range(cap + 1):
        if is_projective(current)[0]:
            return i
        current = syzygy(current)
    logger.info(f"projective dimension exceeds the cap {cap}")
    return None


# --- underlying abelian groups -------------------------------------------------


def relation_lattice(module: FpModule) -> Tuple[List[List[int]], int]:
    """Relation rows of the underlying group in Z^(generators * degree), congruences included"""
    w = module.working_ring
    width = module.generators * w.degree
    rows = []
    a = module.working_relations
    basis = w.basis()
    for i in range(a.rows):
        row = a.row_mat(i)
        if w.degree == 1:
            rows.append(flatten(row))
        else:
            for b in basis:
                rows.append(flatten(row.left_scale(b)))
    if w.modulus is not None:
        rows += [[w.modulus if j == i else 0 for j in range(width)] for i in range(width)]
    return rows, width


def module_quotient(module: FpModule) -> LatticeQuotient:
    rel, width = relation_lattice(module)
    identity = [[1 if j == i else 0 for j in range(width)] for i in range(width)]
    return quotient_group(identity, rel, width)


def underlying_group(module: FpModule) -> FgAbGroup:
    return module_quotient(module).group


def module_key(module: FpModule) -> Tuple:
    """Canonical form of the presentation's relation submodule (equal keys, equal modules)"""
    rel, width = relation_lattice(module)
    rows = tuple(tuple(p) for _, p in echelon_form(rel, width))
    return (module.ring, module.side, module.generators, rows)


def action_matrix(module: FpModule, a) -> List[List[int]]:
    """Integer matrix of m -> a*m on the coordinate lattice of the module"""
    w = module.working_ring
    matrix, _ = linear_map_matrix(w, lambda x: x.left_scale(a), (1, module.generators))
    return matrix


# --- Hom -----------------------------------------------------------------------


def hom_module(source: FpModule, target: FpModule) -> HomResult:
    """Hom_R(source, target) as an abelian group with generating morphisms"""
    source._check_compatible(target)
    w = source.working_ring
    a = source.working_relations
    rel, width = relation_lattice(target)
    k = source.generators
    outer, outer_width = linear_map_matrix(w, lambda phi: a @ phi, (k, target.generators))
    quotient = homology(
        k * width,
        block_relations(rel, width, k),
        outer=outer,
        outer_width=outer_width,
        outer_rel=block_relations(rel, width, a.rows),
        modulus=w.modulus,
    )
    morphisms = []
    for vector in quotient.generators:
        s = unflatten(w, vector, k, target.generators)
        morphisms.append(_morphism(source, target, s))
    return HomResult(quotient.group, morphisms, quotient.orders)


def _morphism(source: FpModule, target: FpModule, s: Mat) -> ModMorphism:
    w = source.working_ring
    image = source.working_relations @ s
    if image.rows:
        witness = solve_rows(target.working_relations, image)
        if witness is None:
            raise HereditasError("Relations are not sent into the target's relations")
    else:
        witness = Mat.zeros(w, 0, target.relations.rows)
    return ModMorphism(source, target, s.with_ring(source.ring), witness.with_ring(source.ring))
