"""
Bounded ring-level hereditary search
"""
from dataclasses import dataclass
from functools import partial
from typing import Optional

from loguru import logger

from ..linalg import Mat, RingSpec
from ..search import SearchBound, matrix_candidates, run_ordered
from .certificates import HereditaryCertificate, n_hereditary_witness


@dataclass
class RingHereditaryReport:
    ring: RingSpec
    n: int
    bound: SearchBound
    mode: str
    tested: int
    counterexample: Optional[Mat] = None
    certificate: Optional[HereditaryCertificate] = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None

    def statement(self) -> str:
        if not self.verified:
            return f"counterexample {self.counterexample} after {self.tested} matrices"
        if self.mode == "exhaustive":
            return f"verified for all {self.tested} matrices within {self.bound.describe()}"
        return f"verified for {self.tested} sampled matrices within {self.bound.describe()}"


def _certify(n: int, a: Mat) -> HereditaryCertificate:
    return n_hereditary_witness(a, n)


def ring_hereditary_report(
    ring: RingSpec, n: int, bound: SearchBound, seed: int = 0, jobs: int = 1
) -> RingHereditaryReport:
    """Search the matrices within the bound for one failing the n-hereditary criterion"""
    mode, candidates = matrix_candidates(ring, bound, seed)
    results = run_ordered(partial(_certify, n), candidates, jobs, stop=lambda c: not c.success)
    report = RingHereditaryReport(ring, n, bound, mode, len(results))
    if results and not results[-1].success:
        report.counterexample = results[-1].a
        report.certificate = results[-1]
        logger.info(f"{ring}: n={n} hereditary criterion fails for {report.counterexample}")
    else:
        logger.info(f"{ring}: {report.statement()}")
    return report
