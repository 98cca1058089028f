"""
Character modules M+ = Hom_Z(M, Q/Z) of finite modules

A finite group with invariant factors d_j and exponent e embeds its dual in
Z/e: the dual basis character chi_j sends the j-th basis element g_j to e/d_j
and the other basis elements to 0.
"""
from dataclasses import dataclass
from typing import List, Tuple

from loguru import logger

from ..errors import InfiniteModuleError
from ..linalg import Mat, flatten
from ..modules.fpmodule import FpModule, action_matrix, module_quotient, underlying_group
from ..modules.groups import FgAbGroup, homology


@dataclass(frozen=True)
class CharModule:
    """M+ on the opposite side; dual generator j is the character chi_j"""

    source: FpModule
    dual: FpModule
    exponent: int
    orders: Tuple[int, ...]
    source_basis: Tuple[Tuple[int, ...], ...]
    pairing: Tuple[Tuple[int, ...], ...]

    def evaluate(self, character: List[int], vector: List[int]) -> int:
        """Value in Z/e of the character sum_j c_j chi_j on a lattice vector of the source"""
        coords = module_quotient(self.source).coordinates(vector)
        e = self.exponent
        return sum(c * (e // d) * x for c, d, x in zip(character, self.orders, coords)) % e


def pontryagin_dual(group: FgAbGroup) -> FgAbGroup:
    """Hom_Z(G, Q/Z) for finite G"""
    if not group.is_finite:
        raise InfiniteModuleError(f"Dual of the infinite group {group} is not finitely generated")
    return group


def _vec_mul(vector: List[int], matrix: List[List[int]]) -> List[int]:
    width = len(matrix[0]) if matrix else 0
    return [sum(v * matrix[i][j] for i, v in enumerate(vector) if v) for j in range(width)]


def character(module: FpModule) -> CharModule:
    """M+ as a module on the opposite side with (f.a)(m) = f(a.m)"""
    quotient = module_quotient(module)
    if not quotient.group.is_finite:
        raise InfiniteModuleError(f"{module} has infinite underlying group {quotient.group}")
    ring = module.ring
    w = module.working_ring
    orders = quotient.orders
    e = quotient.group.exponent
    s = len(orders)
    zero = ring.zero()

    rows = []
    for j, d in enumerate(orders):
        row = [zero] * s
        row[j] = ring.scalar(d)
        rows.append(row)

    for a in w.basis():
        act = action_matrix(module, a)
        images = [quotient.coordinates(_vec_mul(g, act)) for g in quotient.generators]
        for j, dj in enumerate(orders):
            row = [zero] * s
            row[j] = a
            for l, dl in enumerate(orders):
                value = (e // dj) * images[l][j] % e
                coef = value // (e // dl)
                if coef:
                    row[l] = ring.sub(row[l], ring.scalar(coef))
            rows.append(row)

    dual_relations = Mat.from_rows(ring, rows, s).drop_zero_rows()
    dual = FpModule(ring, module.opposite_side, s, dual_relations)
    pairing = tuple(
        tuple((e // orders[j]) if j == l else 0 for l in range(s)) for j in range(s)
    )
    logger.debug(f"character of a module with group {quotient.group}: {s} generators")
    return CharModule(
        module,
        dual,
        e,
        tuple(orders),
        tuple(tuple(g) for g in quotient.generators),
        pairing,
    )


@dataclass
class DualExactness:
    """Order counts along 0 -> M''+ -> M+ -> M'+ -> 0"""

    sub_order: int
    module_order: int
    quotient_order: int
    kernel_order: int
    image_order: int

    @property
    def exact(self) -> bool:
        return (
            self.kernel_order == self.quotient_order
            and self.image_order == self.sub_order
            and self.sub_order * self.quotient_order == self.module_order
        )


def verify_dual_exactness(module: FpModule, elements: Mat) -> DualExactness:
    """
    Dualize 0 -> M' -> M -> M'' -> 0 (M' generated by the rows of ``elements``)
    and compare the kernel and image of restriction M+ -> M'+ with |M''+| and |M'+|
    """
    char = character(module)
    quotient = module_quotient(module)
    e = char.exponent
    w = module.working_ring
    vectors = [
        flatten(elements.with_ring(w).row_mat(i).left_scale(a))
        for i in range(elements.rows)
        for a in w.basis()
    ]
    coords = [quotient.coordinates(v) for v in vectors]
    # restriction: c -> (sum_j c_j (e/d_j) coord_j(v))_v in (Z/e)^vectors
    restriction = [[(e // d) * c[j] for c in coords] for j, d in enumerate(char.orders)]
    s = len(char.orders)
    kernel = homology(
        s,
        [[d if k == j else 0 for k in range(s)] for j, d in enumerate(char.orders)],
        outer=restriction,
        outer_width=len(vectors),
        outer_rel=[[e if k == j else 0 for k in range(len(vectors))] for j in range(len(vectors))],
    ).group
    module_order = underlying_group(char.dual).require_finite()
    kernel_order = kernel.require_finite()
    sub_dual = character(module.submodule(elements)).dual
    quotient_dual = character(module.quotient(elements)).dual
    return DualExactness(
        sub_order=underlying_group(sub_dual).require_finite(),
        module_order=module_order,
        quotient_order=underlying_group(quotient_dual).require_finite(),
        kernel_order=kernel_order,
        image_order=module_order // kernel_order,
    )
