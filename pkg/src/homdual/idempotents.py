"""
Unital decomposition M = sum of e_i M and the Yoneda / coYoneda checks
"""
from dataclasses import dataclass, field
from typing import List

from loguru import logger

from ..errors import HereditasError
from ..linalg import Mat, flatten
from ..modules.fpmodule import FpModule, action_matrix, hom_module, relation_lattice, underlying_group
from ..modules.groups import FgAbGroup, quotient_group
from .derived import tensor_product


@dataclass
class UnitalComponent:
    index: int
    idempotent: str
    group: FgAbGroup
    rows: List[List[int]] = field(repr=False, default_factory=list)


@dataclass
class UnitalDecomposition:
    module: FpModule
    components: List[UnitalComponent]
    total: FgAbGroup
    reconstructs: bool


def _idempotent(module: FpModule, index: int):
    idempotents = module.ring.idempotents()
    if not 0 <= index < len(idempotents):
        raise HereditasError(
            f"Idempotent index {index} out of range; {module.ring} has {len(idempotents)}"
        )
    return idempotents[index]


def _component_rows(module: FpModule, e) -> List[List[int]]:
    """Spanning rows of the lattice of e*M (relations of M included)"""
    rel, _ = relation_lattice(module)
    return action_matrix(module, e) + [list(r) for r in rel]


def _component_group(module: FpModule, e) -> FgAbGroup:
    rel, width = relation_lattice(module)
    return quotient_group(_component_rows(module, e), rel, width).group


def unital_decomposition(module: FpModule) -> UnitalDecomposition:
    """Split the underlying group along the complete set of orthogonal idempotents"""
    ring = module.ring
    rel, width = relation_lattice(module)
    components = []
    spanning: List[List[int]] = []
    for i, e in enumerate(ring.idempotents()):
        rows = _component_rows(module, e)
        group = quotient_group(rows, rel, width).group
        components.append(UnitalComponent(i, ring.format_element(e), group, rows))
        spanning += rows

    total = underlying_group(module)
    covered = quotient_group(
        [[1 if j == i else 0 for j in range(width)] for i in range(width)], spanning, width
    ).group.is_trivial
    summed = FgAbGroup.trivial()
    for c in components:
        summed = summed.direct_sum(c.group)
    reconstructs = covered and summed == total
    logger.debug(f"unital decomposition: {[str(c.group) for c in components]} of {total}")
    return UnitalDecomposition(module, components, total, reconstructs)


@dataclass
class YonedaRecord:
    index: int
    idempotent: str
    hom_group: FgAbGroup
    component_group: FgAbGroup
    tensor_group: FgAbGroup
    surjective: bool
    bijective: bool

    @property
    def hom_iso(self) -> bool:
        return self.bijective

    @property
    def tensor_iso(self) -> bool:
        return self.tensor_group == self.component_group

    @property
    def holds(self) -> bool:
        return self.hom_iso and self.tensor_iso


def yoneda_check(index: int, module: FpModule) -> YonedaRecord:
    """
    Hom(Ae, M) = eM through f -> f(e), and eA (x) M = eM

    For a right module the roles of Ae and eA are exchanged.
    """
    ring = module.ring
    e = _idempotent(module, index)
    complement = ring.sub(ring.one(), e)
    projective = FpModule(ring, module.side, 1, Mat.from_rows(ring, [[complement]], 1))
    hom = hom_module(projective, module)

    rel, width = relation_lattice(module)
    component = _component_rows(module, e)
    component_group = quotient_group(component, rel, width).group

    w = module.working_ring
    images = [flatten(f.matrix.with_ring(w).left_scale(e)) for f in hom.morphisms]
    image_group = quotient_group(component, images + [list(r) for r in rel], width).group
    surjective = image_group.is_trivial
    bijective = surjective and hom.group == component_group

    other = FpModule(ring, module.opposite_side, 1, Mat.from_rows(ring, [[complement]], 1))
    if module.side == "left":
        tensor = tensor_product(other, module)
    else:
        tensor = tensor_product(module, other)

    record = YonedaRecord(
        index, ring.format_element(e), hom.group, component_group, tensor, surjective, bijective
    )
    logger.debug(
        f"Yoneda at {record.idempotent}: Hom = {hom.group}, eM = {component_group}, eA(x)M = {tensor}"
    )
    return record
