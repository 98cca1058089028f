"""
Ext^1, Tor_1 and tensor products of finitely presented modules

Each is the homology of a short complex built from the length-2 truncation
of a free presentation, computed on underlying abelian groups.
"""
import random
from functools import lru_cache
from typing import List, Tuple

from loguru import logger

from ..errors import HereditasError
from ..linalg import Mat, left_kernel, linear_map_matrix, unflatten
from ..modules.fpmodule import FpModule, hom_module, relation_lattice
from ..modules.groups import FgAbGroup, LatticeQuotient, block_relations, cycle_lattice, homology


def _ext_complex(first: FpModule, second: FpModule):
    first._check_compatible(second)
    w = first.working_ring
    d1 = first.working_relations
    d2 = left_kernel(d1)
    rel, width = relation_lattice(second)
    k, m, t = first.generators, d1.rows, d2.rows
    kn = second.generators
    inner, _ = linear_map_matrix(w, lambda phi: d1 @ phi, (k, kn))
    outer, outer_width = linear_map_matrix(w, lambda psi: d2 @ psi, (m, kn))
    return w, rel, width, (k, m, t), inner, outer, outer_width


@lru_cache(maxsize=4096)
def _ext1(first: FpModule, second: FpModule) -> LatticeQuotient:
    w, rel, width, (k, m, t), inner, outer, outer_width = _ext_complex(first, second)
    return homology(
        m * width,
        block_relations(rel, width, m),
        inner=inner,
        outer=outer,
        outer_width=outer_width,
        outer_rel=block_relations(rel, width, t),
        modulus=w.modulus,
    )


def ext1(first: FpModule, second: FpModule) -> FgAbGroup:
    """Ext^1(F, N) for modules on the same side"""
    group = _ext1(first, second).group
    logger.debug(f"Ext^1 = {group}")
    return group


def ext1_cocycles(first: FpModule, second: FpModule) -> List[Mat]:
    """Generators of the cocycle lattice: m x generators(N) matrices psi with d2*psi = 0 in N"""
    w, rel, width, (k, m, t), _, outer, outer_width = _ext_complex(first, second)
    cycles = cycle_lattice(outer, outer_width, block_relations(rel, width, t), m * width, w.modulus)
    return [unflatten(w, v, m, second.generators).with_ring(first.ring) for v in cycles]


def random_cocycle(first: FpModule, second: FpModule, rng: random.Random) -> Mat:
    """Random integer combination of cocycle generators (split extensions included)"""
    generators = ext1_cocycles(first, second)
    cocycle = Mat.zeros(first.ring, first.relations.rows, second.generators)
    for g in generators:
        coef = rng.randint(0, 2)
        for _ in range(coef):
            cocycle = cocycle + g
    return cocycle


def _orient(first: FpModule, second: FpModule) -> Tuple[FpModule, FpModule]:
    """Put the two tensor factors on opposite sides (possible to fix only for commutative rings)"""
    if first.ring != second.ring:
        raise HereditasError(f"{first.ring} vs {second.ring}")
    if first.side == second.side:
        second = second.with_side(first.opposite_side)
    if first.side != "right" and not first.ring.is_commutative:
        raise HereditasError("The first tensor factor must be a right module")
    return first, second


def _tensor_complex(right: FpModule, left: FpModule):
    right, left = _orient(right, left)
    d1 = right.working_relations
    d2 = left_kernel(d1)
    wf = left.working_ring
    rel, width = relation_lattice(left)
    kf = left.generators
    d1t = d1.transpose().with_ring(wf)
    d2t = d2.transpose().with_ring(wf)
    return right, left, wf, rel, width, kf, d1t, d2t


@lru_cache(maxsize=4096)
def _tor1(right: FpModule, left: FpModule) -> LatticeQuotient:
    right, left, wf, rel, width, kf, d1t, d2t = _tensor_complex(right, left)
    k, m, t = d1t.rows, d1t.cols, d2t.cols
    inner, _ = linear_map_matrix(wf, lambda phi: d2t @ phi, (t, kf))
    outer, outer_width = linear_map_matrix(wf, lambda phi: d1t @ phi, (m, kf))
    return homology(
        m * width,
        block_relations(rel, width, m),
        inner=inner,
        outer=outer,
        outer_width=outer_width,
        outer_rel=block_relations(rel, width, k),
        modulus=wf.modulus,
    )


def tor1(right: FpModule, left: FpModule) -> FgAbGroup:
    """Tor_1(N, F) for N and F on opposite sides"""
    group = _tor1(right, left).group
    logger.debug(f"Tor_1 = {group}")
    return group


def tensor_product(right: FpModule, left: FpModule) -> FgAbGroup:
    """N (x) F as an abelian group"""
    right, left, wf, rel, width, kf, d1t, _ = _tensor_complex(right, left)
    k, m = d1t.rows, d1t.cols
    inner, _ = linear_map_matrix(wf, lambda phi: d1t @ phi, (m, kf))
    return homology(k * width, block_relations(rel, width, k), inner=inner, modulus=wf.modulus).group


def hom_group(source: FpModule, target: FpModule) -> FgAbGroup:
    return hom_module(source, target).group


def long_exact_orders(sub: FpModule, mid: FpModule, quot: FpModule, test: FpModule) -> List[int]:
    """
    Orders of Hom(quot,X), Hom(mid,X), Hom(sub,X), Ext^1(quot,X), Ext^1(mid,X), Ext^1(sub,X)
    along 0 -> sub -> mid -> quot -> 0
    """
    groups = [
        hom_group(quot, test),
        hom_group(mid, test),
        hom_group(sub, test),
        ext1(quot, test),
        ext1(mid, test),
        ext1(sub, test),
    ]
    return [g.require_finite() for g in groups]
