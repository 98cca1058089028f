"""
Bounded membership in the FP_n-injective and FP_n-flat classes
"""
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Optional, Sequence

from loguru import logger

from ..errors import HereditasError, SearchError
from ..homdual import ext1, tor1
from ..linalg import RingSpec
from ..modules.fpmodule import FpModule, is_projective
from ..modules.groups import FgAbGroup
from ..search import SearchBound, module_candidates, run_ordered

INJECTIVE = "I_n"
FLAT = "F_n"
CLASSES = (INJECTIVE, FLAT)

IN = "in"
OUT = "out"
IN_UP_TO_BOUND = "in-up-to-bound"


@dataclass(frozen=True)
class Witness:
    """Test module F with a nonzero Ext^1(F, M) or Tor_1(M, F)"""

    test: FpModule
    value: FgAbGroup


@dataclass(frozen=True)
class MembershipVerdict:
    module: FpModule
    cls: str
    n: int
    verdict: str
    bound: str
    tested: int = 0
    witness: Optional[Witness] = None
    reason: str = ""

    @property
    def member(self) -> bool:
        return self.verdict != OUT


@lru_cache(maxsize=64)
def is_semisimple(ring: RingSpec) -> bool:
    """A finite ring is semisimple iff every a has some u with a*u*a = a"""
    if not ring.is_finite:
        return False
    elements = list(ring.elements())
    for a in elements:
        if not any(ring.mul(ring.mul(a, u), a) == a for u in elements):
            return False
    return True


def check_class(cls: str) -> None:
    if cls not in CLASSES:
        raise HereditasError(f"Unknown class {cls!r}; expected one of {CLASSES}")


def tester_side(module: FpModule, cls: str) -> str:
    """Side of the test modules: same side for I_n, opposite side for F_n"""
    return module.side if cls == INJECTIVE else module.opposite_side


def class_value(cls: str, module: FpModule, test: FpModule) -> FgAbGroup:
    """Ext^1(F, M) for I_n, Tor_1 of M against F for F_n"""
    if cls == INJECTIVE:
        return ext1(test, module)
    if module.side == "right" or (module.side == test.side and module.ring.is_commutative):
        return tor1(module, test)
    return tor1(test, module)


def _first_nonzero(cls: str, module: FpModule, test: FpModule) -> Optional[Witness]:
    value = class_value(cls, module, test)
    return None if value.is_trivial else Witness(test, value)


def membership(
    module: FpModule,
    cls: str,
    n: int = 1,
    bound: Optional[SearchBound] = None,
    seed: int = 0,
    testset: Optional[Sequence[FpModule]] = None,
    jobs: int = 1,
) -> MembershipVerdict:
    """
    Check vanishing of Ext^1(F, M) (I_n) or Tor_1(M, F) (F_n) for every test
    module F within the bound. Over the supported coherent rings FP_n and FP_1
    coincide, so n does not change the test set.

    "in" is claimed only when the answer is complete: semisimple rings, and
    projective modules for F_n.
    """
    check_class(cls)
    if n < 1:
        raise HereditasError(f"n must be positive, got {n}")
    bound = bound or SearchBound()
    ring = module.ring

    if is_semisimple(ring):
        return MembershipVerdict(module, cls, n, IN, bound.describe(), reason="semisimple ring")
    if cls == FLAT and is_projective(module)[0]:
        return MembershipVerdict(module, cls, n, IN, bound.describe(), reason="projective module")

    if testset is None:
        if not ring.is_finite:
            raise SearchError(f"{ring} is infinite; membership needs an explicit test set")
        mode, testset = module_candidates(ring, bound, seed, tester_side(module, cls))
        description = f"{mode} {bound.describe()}"
    else:
        description = f"explicit test set of {len(testset)} modules"

    results = run_ordered(
        partial(_first_nonzero, cls, module), list(testset), jobs, stop=lambda w: w is not None
    )
    witness = results[-1] if results else None
    if witness is not None:
        logger.debug(f"{cls} membership fails: value {witness.value} at {witness.test}")
        return MembershipVerdict(module, cls, n, OUT, description, len(results), witness)
    return MembershipVerdict(module, cls, n, IN_UP_TO_BOUND, description, len(results))


def verify_verdict(verdict: MembershipVerdict) -> bool:
    """Recompute an "out" witness from the raw presentations"""
    if verdict.verdict != OUT:
        return verdict.witness is None
    if verdict.witness is None:
        return False
    value = class_value(verdict.cls, verdict.module, verdict.witness.test)
    return not value.is_trivial and value == verdict.witness.value
