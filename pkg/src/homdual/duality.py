"""
Ext/Tor dualities through character modules, checked on invariant factors
"""
from dataclasses import dataclass, field
from typing import List, Sequence

from loguru import logger

from ..errors import HereditasError
from ..modules.fpmodule import FpModule, hom_module
from ..modules.groups import FgAbGroup
from .character import character, pontryagin_dual
from .derived import ext1, tensor_product, tor1

STATEMENTS = {
    "i": "Ext^1(F, N+) = Hom_Z(Tor_1(N, F), Q/Z)",
    "ii": "F (x) N+ = Hom_Z(Hom(F, N), Q/Z)",
    "iii": "Tor_1(F, N+) = Hom_Z(Ext^1(F, N), Q/Z)",
    "flat": "Tor_1(N, F) = 0 for all F in C iff Ext^1(F, N+) = 0 for all F in C",
    "injective": "Ext^1(F, M) = 0 for all F in C iff Tor_1(F, M+) = 0 for all F in C",
}


@dataclass
class DualityRecord:
    which: str
    statement: str
    lhs: FgAbGroup
    rhs: FgAbGroup

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class EquivalenceRow:
    test: FpModule
    first_vanishes: bool
    second_vanishes: bool

    @property
    def agrees(self) -> bool:
        return self.first_vanishes == self.second_vanishes


@dataclass
class EquivalenceRecord:
    which: str
    statement: str
    module: FpModule
    rows: List[EquivalenceRow] = field(default_factory=list)

    @property
    def violations(self) -> List[EquivalenceRow]:
        return [r for r in self.rows if not r.agrees]

    @property
    def holds(self) -> bool:
        return not self.violations


def _on_side(module: FpModule, side: str) -> FpModule:
    if module.side == side:
        return module
    if not module.ring.is_commutative:
        raise HereditasError(f"Expected a {side} module, got a {module.side} module over {module.ring}")
    return module.with_side(side)


def verify_ext_tor_duality(first: FpModule, second: FpModule, which: str) -> DualityRecord:
    """
    (i)   F left, N right:  Ext^1(F, N+) vs Tor_1(N, F)+
    (ii)  F, N right:       F (x) N+     vs Hom(F, N)+
    (iii) F, N right:       Tor_1(F, N+) vs Ext^1(F, N)+
    Over a commutative ring the sides are adjusted automatically.
    """
    if which == "i":
        f = _on_side(first, "left")
        n = _on_side(second, "right")
        lhs = ext1(f, character(n).dual)
        rhs = pontryagin_dual(tor1(n, f))
    elif which in ("ii", "iii"):
        f = _on_side(first, "right")
        n = _on_side(second, "right")
        dual = character(n).dual
        if which == "ii":
            lhs = tensor_product(f, dual)
            rhs = pontryagin_dual(hom_module(f, n).group)
        else:
            lhs = tor1(f, dual)
            rhs = pontryagin_dual(ext1(f, n))
    else:
        raise HereditasError(f"Unknown duality {which!r}; expected i, ii or iii")
    record = DualityRecord(which, STATEMENTS[which], lhs, rhs)
    if not record.holds:
        logger.error(f"duality ({which}) fails: {lhs} vs {rhs}")
    return record


def verify_flat_injective_duality(module: FpModule, testset: Sequence[FpModule]) -> EquivalenceRecord:
    """Tor_1(N, F) = 0 iff Ext^1(F, N+) = 0 for every F in the test set"""
    n = _on_side(module, "right")
    dual = character(n).dual
    record = EquivalenceRecord("flat", STATEMENTS["flat"], module)
    for test in testset:
        f = _on_side(test, "left")
        record.rows.append(EquivalenceRow(f, tor1(n, f).is_trivial, ext1(f, dual).is_trivial))
    if not record.holds:
        logger.error(f"flat/injective duality violated for {len(record.violations)} test modules")
    return record


def verify_injective_flat_duality(
    module: FpModule, testset: Sequence[FpModule], n: int = 2
) -> EquivalenceRecord:
    """Ext^1(F, M) = 0 iff Tor_1(F, M+) = 0 for every F in the test set (F of type FP_2)"""
    if n < 2:
        raise HereditasError(f"The injective/flat duality needs n >= 2, got {n}")
    m = _on_side(module, "right")
    dual = character(m).dual
    record = EquivalenceRecord("injective", STATEMENTS["injective"], module)
    for test in testset:
        f = _on_side(test, "right")
        record.rows.append(EquivalenceRow(f, ext1(f, m).is_trivial, tor1(f, dual).is_trivial))
    if not record.holds:
        logger.error(f"injective/flat duality violated for {len(record.violations)} test modules")
    return record
