"""
Closure of I_n / F_n under quotients, subobjects, extensions and finite (co)products
"""
import random
from dataclasses import dataclass, field
from functools import partial
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import HereditasError
from ..homdual import random_cocycle
from ..linalg import Mat, RingSpec
from ..modules.fpmodule import FpModule, module_key
from ..search import SearchBound, module_candidates, run_ordered
from .membership import INJECTIVE, OUT, MembershipVerdict, check_class, membership, verify_verdict

PROPERTIES = ("quotients", "extensions", "finite-coproducts", "subobjects", "finite-products")


@dataclass(frozen=True)
class ClosureTrial:
    """One derived object: ``operation`` applied to ``sources`` with ``detail``
    (an element row, a cocycle, or nothing for sums)"""

    operation: str
    sources: Tuple[FpModule, ...]
    detail: Optional[Mat]
    derived: FpModule


@dataclass
class ClosureCounterexample:
    trial: ClosureTrial
    verdict: MembershipVerdict


@dataclass
class ClosureReport:
    cls: str
    n: int
    ring: RingSpec
    property: str
    seed: int
    bound: SearchBound
    members: int = 0
    trials: int = 0
    counterexample: Optional[ClosureCounterexample] = None
    member_verdicts: List[MembershipVerdict] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def statement(self) -> str:
        if self.counterexample is not None:
            t = self.counterexample.trial
            return f"{self.cls} not closed under {self.property}: {t.operation} gives a non-member"
        return f"{self.cls} closed under {self.property} on {self.trials} trials ({self.members} members)"


def _random_row(ring: RingSpec, generators: int, rng: random.Random, entry_bound: int) -> Mat:
    return Mat.from_rows(ring, [[ring.random_element(rng, entry_bound) for _ in range(generators)]], generators)


def build_trial(operation: str, sources: Sequence[FpModule], detail: Optional[Mat]) -> FpModule:
    """Rebuild a derived object from raw presentations"""
    if operation == "quotients":
        return sources[0].quotient(detail)
    if operation == "subobjects":
        return sources[0].submodule(detail)
    if operation == "extensions":
        return sources[0].extension(sources[1], detail)
    if operation in ("finite-coproducts", "finite-products"):
        return sources[0].direct_sum(sources[1])
    raise HereditasError(f"Unknown closure property {operation!r}; expected one of {PROPERTIES}")


def _make_trial(
    prop: str, members: Sequence[FpModule], rng: random.Random, entry_bound: int
) -> Optional[ClosureTrial]:
    first = rng.choice(members)
    if prop in ("quotients", "subobjects"):
        if first.generators == 0:
            return None
        detail = _random_row(first.ring, first.generators, rng, entry_bound)
        return ClosureTrial(prop, (first,), detail, build_trial(prop, (first,), detail))
    second = rng.choice(members)
    if prop == "extensions":
        # 0 -> first -> E -> second -> 0
        cocycle = random_cocycle(second, first, rng)
        return ClosureTrial(prop, (first, second), cocycle, build_trial(prop, (first, second), cocycle))
    return ClosureTrial(prop, (first, second), None, build_trial(prop, (first, second), None))


def _judge(cls: str, n: int, testset: Sequence[FpModule], module: FpModule) -> MembershipVerdict:
    return membership(module, cls, n, testset=testset)


def closure_check(
    cls: str,
    n: int,
    ring: RingSpec,
    prop: str,
    trials: int = 100,
    seed: int = 0,
    bound: Optional[SearchBound] = None,
    side: str = "left",
    jobs: int = 1,
) -> ClosureReport:
    """
    Sample members of the class among the presentations within the bound,
    apply random operations of the given kind and re-test membership
    """
    check_class(cls)
    if prop not in PROPERTIES:
        raise HereditasError(f"Unknown closure property {prop!r}; expected one of {PROPERTIES}")
    bound = bound or SearchBound()
    _, pool = module_candidates(ring, bound, seed, side)
    if cls == INJECTIVE:
        testset = pool
    else:
        _, testset = module_candidates(ring, bound, seed, "right" if side == "left" else "left")

    verdicts = run_ordered(partial(_judge, cls, n, testset), pool, jobs)
    members = [v.module for v in verdicts if v.member]
    report = ClosureReport(cls, n, ring, prop, seed, bound, len(members), member_verdicts=verdicts)
    if not members:
        logger.info(f"{cls} has no members within {bound.describe()} over {ring}")
        return report

    rng = random.Random(seed)
    candidates: List[ClosureTrial] = []
    for _ in range(trials):
        trial = _make_trial(prop, members, rng, bound.entry_bound)
        if trial is not None:
            candidates.append(trial)

    results = run_ordered(
        partial(_judge, cls, n, testset),
        [t.derived for t in candidates],
        jobs,
        stop=lambda v: v.verdict == OUT,
    )
    report.trials = len(results)
    if results and results[-1].verdict == OUT:
        report.counterexample = ClosureCounterexample(candidates[len(results) - 1], results[-1])
        logger.info(report.statement())
    else:
        logger.info(f"{ring}: {report.statement()}")
    return report


def verify_closure(report: ClosureReport) -> bool:
    """Rebuild the counterexample from its sources and recheck the witness"""
    if report.counterexample is None:
        return True
    trial = report.counterexample.trial
    rebuilt = build_trial(trial.operation, trial.sources, trial.detail)
    if module_key(rebuilt) != module_key(trial.derived):
        return False
    verdict = report.counterexample.verdict
    return verdict.module == trial.derived and verify_verdict(verdict)
