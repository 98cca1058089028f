"""
Projective dimension search and the hereditary consistency report

Three independent routes decide whether a ring is n-hereditary within a bound:
pd <= 1 for every finitely presented module, the matrix-category criterion,
and closure of I_n under quotients. They must agree.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from loguru import logger

from ..linalg import RingSpec
from ..matcat import RingHereditaryReport, ring_hereditary_report, semi_hereditary_witness
from ..modules.fpmodule import FpModule, PdCertificate, pd_le_1
from ..search import SearchBound, module_candidates, run_ordered
from .closure import ClosureReport, closure_check
from .membership import FLAT, INJECTIVE


@dataclass
class PdSearchReport:
    ring: RingSpec
    n: int
    bound: SearchBound
    mode: str
    tested: int
    counterexample: Optional[FpModule] = None
    certificate: Optional[PdCertificate] = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None

    def statement(self) -> str:
        if self.counterexample is not None:
            return f"pd > 1 for {self.counterexample} after {self.tested} presentations"
        return f"pd <= 1 for {self.tested} {self.mode} presentations within {self.bound.describe()}"


def pd_fpn_search(
    ring: RingSpec, n: int, bound: SearchBound, seed: int = 0, jobs: int = 1
) -> PdSearchReport:
    """First finitely presented module within the bound with pd > 1"""
    mode, modules = module_candidates(ring, bound, seed)
    results = run_ordered(pd_le_1, modules, jobs, stop=lambda c: not c.verdict)
    report = PdSearchReport(ring, n, bound, mode, len(results))
    if results and not results[-1].verdict:
        report.counterexample = results[-1].module
        report.certificate = results[-1]
    logger.info(f"{ring}: {report.statement()}")
    return report


@dataclass
class ConsistencyReport:
    ring: RingSpec
    n: int
    pd: PdSearchReport
    matrices: RingHereditaryReport
    closure: ClosureReport
    flat: ClosureReport
    cross_checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def verdicts(self) -> Dict[str, bool]:
        return {
            "pd-search": self.pd.verified,
            "matrix-criterion": self.matrices.verified,
            "injective-quotients": self.closure.passed,
            "flat-subobjects": self.flat.passed,
        }

    @property
    def all_pass(self) -> bool:
        return all(self.verdicts.values())

    @property
    def consistent(self) -> bool:
        values = set(self.verdicts.values())
        return len(values) == 1 and all(self.cross_checks.values())

    def disagreements(self) -> List[str]:
        problems = []
        if len(set(self.verdicts.values())) > 1:
            problems.append(f"verdicts differ: {self.verdicts}")
        problems += [f"cross-check {k} failed" for k, ok in self.cross_checks.items() if not ok]
        return problems


def _cross_checks(report: ConsistencyReport) -> Dict[str, bool]:
    checks = {}
    ring = report.ring
    if report.matrices.counterexample is not None:
        a = report.matrices.counterexample
        checks["matrix-counterexample-has-pd>1"] = not pd_le_1(FpModule(ring, "left", a.cols, a)).verdict
    if report.pd.counterexample is not None:
        relations = report.pd.counterexample.relations
        checks["pd-counterexample-fails-matrix-criterion"] = not semi_hereditary_witness(relations).success
    if report.closure.counterexample is not None:
        witness = report.closure.counterexample.verdict.witness
        checks["closure-witness-has-pd>1"] = witness is not None and not pd_le_1(witness.test).verdict
    return checks


def hereditary_consistency_report(
    ring: RingSpec,
    n: int,
    bound: SearchBound,
    seed: int = 0,
    trials: int = 100,
    jobs: int = 1,
) -> ConsistencyReport:
    """
    Run the pd search, the matrix criterion and the closure checks on one bound

    Over an infinite ring every route works on the same seeded sample of
    presentations.
    """
    pd = pd_fpn_search(ring, n, bound, seed, jobs)
    matrices = ring_hereditary_report(ring, n, bound, seed, jobs)
    closure = closure_check(INJECTIVE, n, ring, "quotients", trials, seed, bound, jobs=jobs)
    flat = closure_check(FLAT, n, ring, "subobjects", trials, seed, bound, jobs=jobs)
    report = ConsistencyReport(ring, n, pd, matrices, closure, flat)
    report.cross_checks = _cross_checks(report)
    if report.consistent:
        logger.info(f"{ring}: consistent, {'all pass' if report.all_pass else 'all fail'}")
    else:
        logger.error(f"{ring}: inconsistent verdicts, {report.disagreements()}")
    return report
