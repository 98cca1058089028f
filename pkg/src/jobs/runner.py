"""
Task registry and job execution
"""
import json
import os
import tempfile
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from loguru import logger

from .. import __version__
from ..config import config
from ..errors import JobSpecError
from ..homdual import (
    character,
    ext1,
    tensor_product,
    tor1,
    unital_decomposition,
    verify_dual_exactness,
    verify_ext_tor_duality,
    verify_flat_injective_duality,
    verify_injective_flat_duality,
    yoneda_check,
)
from ..linalg import Mat, RingSpec
from ..matcat import (
    is_n_cokernel,
    n_hereditary_witness,
    pseudo_n_cokernel,
    ring_hereditary_report,
    semi_hereditary_witness,
    split_cokernel_test,
)
from ..matcat.certificates import HereditaryCertificate
from ..modules.fpmodule import (
    FpModule,
    build_n_presentation,
    hom_module,
    is_projective,
    pd_le_1,
    projective_dimension,
    underlying_group,
    verify_presentation,
)
from ..search import SearchBound, module_candidates
from ..torsionlab import (
    INJECTIVE,
    closure_check,
    hereditary_consistency_report,
    membership,
    pd_fpn_search,
    verify_closure,
    verify_verdict,
)
from .codec import group_to_json, matrix_to_json, module_to_json, parse_matrix, parse_module, parse_ring
from .models import CheckResult, JobSpec, Report, RunReport

THEOREMS = {
    "pseudo-cok": "f_(i+1) generates every g with g*f_i = 0 (pseudo n-cokernel)",
    "semi-hereditary": "R is semi-hereditary iff for every A there is C with B*C = 0 and C*A = A, B a pseudo-cokernel of A",
    "n-hereditary": "R is n-hereditary iff every pseudo n-cokernel admits alpha with f_n*alpha = 0 and alpha*f_(n-1) = f_(n-1)",
    "split-cokernel": "a split cokernel G (G*P = I) yields alpha = I - P*G",
    "projective": "coker(A) is projective iff A*U*A = A is solvable",
    "presentation": "iterated left kernels extend a presentation to P_n -> ... -> P_0 -> M",
    "hom": "Hom(F, N) as an abelian group",
    "ext": "Ext^1(F, M) = 0 is the FP_n-injectivity test",
    "tor": "Tor_1(N, F) = 0 is the FP_n-flatness test",
    "tensor": "N (x) F as an abelian group",
    "character": "M+ = Hom_Z(M, Q/Z) is exact, contravariant and (M+)+ = M for finite M",
    "exactness": "0 -> M''+ -> M+ -> M'+ -> 0 is exact",
    "membership": "M lies in I_n iff Ext^1(F, M) = 0, in F_n iff Tor_1(M, F) = 0, for F of type FP_n",
    "closure": "I_n is a torsion class iff it is closed under quotients; F_n is closed under subobjects iff R is n-hereditary",
    "pd-search": "I_n is a torsion class iff pd(F) <= 1 for every F of type FP_n",
    "hereditary-report": "R is n-hereditary iff the alpha criterion holds for every matrix",
    "consistency-report": "n-hereditary iff pd(FP_n) <= 1 iff I_n closed under quotients iff F_n closed under subobjects",
    "yoneda": "Hom(Ae, M) = eM via f -> f(e), and eA (x) M = eM",
    "unital-decomposition": "M is the direct sum of the e_i M",
}

# short identifiers of the statements, stable across wording changes
REFS = {
    "pseudo-cok": "pseudo-n-cokernel",
    "semi-hereditary": "semi-hereditary-criterion",
    "n-hereditary": "n-hereditary-criterion",
    "split-cokernel": "split-cokernel-shortcut",
    "projective": "projectivity-criterion",
    "presentation": "n-presentation",
    "hom": "hom-group",
    "ext": "fp-injectivity-test",
    "tor": "fp-flatness-test",
    "tensor": "tensor-group",
    "character": "character-module",
    "exactness": "character-exactness",
    "duality-check": "ext-tor-duality",
    "membership": "bounded-membership",
    "closure": "torsion-class-closure",
    "pd-search": "torsion-class-pd-criterion",
    "hereditary-report": "n-hereditary-criterion",
    "consistency-report": "hereditary-equivalences",
    "yoneda": "idempotent-yoneda",
    "unital-decomposition": "unital-decomposition",
}

FAILING = {"failure", "counterexample", "out", "unequal", "violated", "inconsistent"}


@dataclass
class JobContext:
    job: JobSpec
    ring: RingSpec
    bound: SearchBound
    seed: int
    jobs: int
    trials: int

    def matrix(self) -> Mat:
        if self.job.matrix is None:
            raise JobSpecError(f"Task {self.job.task} needs a matrix")
        return parse_matrix(self.ring, self.job.matrix)

    def module(self, name: str = "module") -> FpModule:
        spec = getattr(self.job, name)
        if spec is None:
            raise JobSpecError(f"Task {self.job.task} needs '{name}'")
        return parse_module(self.ring, spec)

    def testset(self, side: str) -> List[FpModule]:
        if self.job.testset is not None:
            return [parse_module(self.ring, m) for m in self.job.testset]
        return module_candidates(self.ring, self.bound, self.seed, side)[1]


def build_context(job: JobSpec) -> JobContext:
    ring = parse_ring(job.ring)
    b = job.bound
    bound = SearchBound(
        max_rows=b.rows,
        max_cols=b.cols,
        entry_bound=b.entry_bound or config.search.entry_bound,
        mode=b.mode,
        samples=b.samples or config.search.samples,
    )
    return JobContext(
        job,
        ring,
        bound,
        config.search.seed if job.seed is None else job.seed,
        job.jobs or config.search.jobs,
        job.trials or config.search.trials,
    )


def _result(
    check: str, verdict: str, theorem: Optional[str] = None, paper_ref: Optional[str] = None, **data
) -> CheckResult:
    return CheckResult(
        check=check,
        theorem=theorem or THEOREMS[check],
        paper_ref=paper_ref or REFS[check],
        verdict=verdict,
        data=data,
    )


# --- matrix category -----------------------------------------------------------


def _certificate_data(cert: HereditaryCertificate) -> Dict:
    data = {
        "a": matrix_to_json(cert.a),
        "b": matrix_to_json(cert.b),
        "chain": [matrix_to_json(cert.chain.stage(i)) for i in range(1, cert.n + 1)],
    }
    if cert.c is not None:
        data["c"] = matrix_to_json(cert.c)
    if cert.alpha is not None:
        data["alpha"] = matrix_to_json(cert.alpha)
    if cert.refutation is not None:
        data["refutation"] = cert.refutation.describe()
    return data


def task_pseudo_cok(ctx: JobContext) -> List[CheckResult]:
    chain = pseudo_n_cokernel(ctx.matrix(), ctx.job.n)
    return [
        _result(
            "pseudo-cok",
            "success" if chain.verify() else "failure",
            f=matrix_to_json(chain.f),
            chain=[matrix_to_json(m) for m in chain.chain],
            witnesses=[matrix_to_json(w) for w in chain.witnesses],
            is_n_cokernel=is_n_cokernel(chain),
        )
    ]


def task_semi_hereditary(ctx: JobContext) -> List[CheckResult]:
    cert = semi_hereditary_witness(ctx.matrix())
    return [_result("semi-hereditary", cert.kind, **_certificate_data(cert))]


def task_n_hereditary(ctx: JobContext) -> List[CheckResult]:
    cert = n_hereditary_witness(ctx.matrix(), ctx.job.n)
    return [_result("n-hereditary", cert.kind, n=cert.n, **_certificate_data(cert))]


def task_split_cokernel(ctx: JobContext) -> List[CheckResult]:
    g = ctx.matrix()
    p = split_cokernel_test(g)
    if p is None:
        return [_result("split-cokernel", "failure", g=matrix_to_json(g), refutation="no P with G*P = I")]
    return [_result("split-cokernel", "success", g=matrix_to_json(g), p=matrix_to_json(p))]


def task_hereditary_report(ctx: JobContext) -> List[CheckResult]:
    report = ring_hereditary_report(ctx.ring, ctx.job.n, ctx.bound, ctx.seed, ctx.jobs)
    data = {"n": report.n, "mode": report.mode, "tested": report.tested, "statement": report.statement()}
    if report.certificate is not None:
        data["certificate"] = _certificate_data(report.certificate)
    return [_result("hereditary-report", "verified" if report.verified else "counterexample", **data)]


# --- modules -------------------------------------------------------------------


def task_projective(ctx: JobContext) -> List[CheckResult]:
    module = ctx.module()
    projective, u = is_projective(module)
    data = {"module": module_to_json(module), "projective_dimension": projective_dimension(module)}
    if projective:
        return [_result("projective", "success", u=matrix_to_json(u), **data)]
    return [_result("projective", "failure", refutation="A*U*A = A has no solution", **data)]


def task_presentation(ctx: JobContext) -> List[CheckResult]:
    module = ctx.module()
    presentation = build_n_presentation(module, ctx.job.n)
    pd = pd_le_1(module)
    return [
        _result(
            "presentation",
            "success" if verify_presentation(presentation) else "failure",
            module=module_to_json(module),
            maps=[matrix_to_json(m.with_ring(module.ring)) for m in presentation.maps],
            witnesses=[matrix_to_json(w.with_ring(module.ring)) for w in presentation.witnesses],
            pd_le_1=pd.verdict,
            projective_dimension=projective_dimension(module),
        )
    ]


def task_hom(ctx: JobContext) -> List[CheckResult]:
    first, second = ctx.module("first"), ctx.module("second")
    hom = hom_module(first, second)
    morphisms = [{"matrix": matrix_to_json(f.matrix), "witness": matrix_to_json(f.witness)} for f in hom.morphisms]
    return [
        _result(
            "hom",
            "value",
            first=module_to_json(first),
            second=module_to_json(second),
            group=group_to_json(hom.group),
            morphisms=morphisms,
        )
    ]


def _group_task(check: str, func: Callable) -> Callable[[JobContext], List[CheckResult]]:
    def task(ctx: JobContext) -> List[CheckResult]:
        first, second = ctx.module("first"), ctx.module("second")
        group = func(first, second)
        return [
            _result(
                check,
                "value",
                first=module_to_json(first),
                second=module_to_json(second),
                group=group_to_json(group),
            )
        ]

    return task


# --- duality -------------------------------------------------------------------


def task_character(ctx: JobContext) -> List[CheckResult]:
    module = ctx.module()
    char = character(module)
    double = character(char.dual)
    group = underlying_group(module)
    dual_group = underlying_group(char.dual)
    double_group = underlying_group(double.dual)
    ok = group == dual_group == double_group
    return [
        _result(
            "character",
            "equal" if ok else "unequal",
            module=module_to_json(module),
            dual=module_to_json(char.dual),
            exponent=str(char.exponent),
            group=group_to_json(group),
            dual_group=group_to_json(dual_group),
            double_dual_group=group_to_json(double_group),
        )
    ]


def _duality_result(record) -> CheckResult:
    return _result(
        "duality-check",
        "equal" if record.holds else "unequal",
        theorem=record.statement,
        paper_ref=f"ext-tor-duality-{record.which}",
        which=record.which,
        lhs=group_to_json(record.lhs),
        rhs=group_to_json(record.rhs),
    )


def _equivalence_result(record) -> CheckResult:
    rows = [
        {"test": module_to_json(r.test), "first_vanishes": r.first_vanishes, "second_vanishes": r.second_vanishes}
        for r in record.rows
    ]
    return _result(
        "duality-check",
        "equal" if record.holds else "violated",
        theorem=record.statement,
        paper_ref=f"{record.which}-duality-equivalence",
        which=record.which,
        tested=len(record.rows),
        violations=[row for row, r in zip(rows, record.rows) if not r.agrees],
    )


def task_duality_check(ctx: JobContext) -> List[CheckResult]:
    which = ctx.job.which
    if which in (None, "i", "ii", "iii"):
        first, second = ctx.module("first"), ctx.module("second")
        parts = [which] if which else ["i", "ii", "iii"]
        return [_duality_result(verify_ext_tor_duality(first, second, w)) for w in parts]
    module = ctx.module()
    if which == "flat":
        record = verify_flat_injective_duality(module, ctx.testset("left"))
        return [_equivalence_result(record)]
    if which == "injective":
        n = max(ctx.job.n, 2)
        record = verify_injective_flat_duality(module, ctx.testset("right"), n)
        return [_equivalence_result(record)]
    if ctx.job.elements is None:
        raise JobSpecError("The exactness check needs 'elements'")
    elements = parse_matrix(ctx.ring, ctx.job.elements, module.generators)
    counts = verify_dual_exactness(module, elements)
    return [
        _result(
            "exactness",
            "equal" if counts.exact else "unequal",
            sub_order=str(counts.sub_order),
            module_order=str(counts.module_order),
            quotient_order=str(counts.quotient_order),
            kernel_order=str(counts.kernel_order),
            image_order=str(counts.image_order),
        )
    ]


def task_yoneda(ctx: JobContext) -> List[CheckResult]:
    module = ctx.module()
    names = [ctx.ring.format_element(e) for e in ctx.ring.idempotents()]
    idempotent = ctx.job.idempotent
    if idempotent is None:
        indices = list(range(len(names)))
    elif isinstance(idempotent, str):
        if idempotent not in names:
            raise JobSpecError(f"Unknown idempotent {idempotent!r}; expected one of {names}")
        indices = [names.index(idempotent)]
    else:
        indices = [idempotent]
    results = []
    for i in indices:
        record = yoneda_check(i, module)
        results.append(
            _result(
                "yoneda",
                "equal" if record.holds else "unequal",
                index=record.index,
                idempotent=record.idempotent,
                hom_group=group_to_json(record.hom_group),
                component_group=group_to_json(record.component_group),
                tensor_group=group_to_json(record.tensor_group),
                surjective=record.surjective,
                bijective=record.bijective,
            )
        )
    return results


def task_unital_decomposition(ctx: JobContext) -> List[CheckResult]:
    decomposition = unital_decomposition(ctx.module())
    return [
        _result(
            "unital-decomposition",
            "equal" if decomposition.reconstructs else "unequal",
            total=group_to_json(decomposition.total),
            components=[
                {"index": c.index, "idempotent": c.idempotent, "group": group_to_json(c.group)}
                for c in decomposition.components
            ],
        )
    ]


# --- torsion classes -----------------------------------------------------------


def task_membership(ctx: JobContext) -> List[CheckResult]:
    module = ctx.module()
    cls = ctx.job.class_ or INJECTIVE
    testset = None
    if ctx.job.testset is not None:
        testset = [parse_module(ctx.ring, m) for m in ctx.job.testset]
    verdict = membership(module, cls, ctx.job.n, ctx.bound, ctx.seed, testset, ctx.jobs)
    data = {
        "module": module_to_json(module),
        "class": cls,
        "n": verdict.n,
        "bound": verdict.bound,
        "tested": verdict.tested,
        "reason": verdict.reason,
        "reverified": verify_verdict(verdict),
    }
    if verdict.witness is not None:
        data["witness"] = {"test": module_to_json(verdict.witness.test), "value": group_to_json(verdict.witness.value)}
    return [_result("membership", verdict.verdict, **data)]


def _closure_data(report) -> Dict:
    data = {
        "class": report.cls,
        "property": report.property,
        "members": report.members,
        "trials": report.trials,
        "statement": report.statement(),
    }
    if report.counterexample is not None:
        trial = report.counterexample.trial
        witness = report.counterexample.verdict.witness
        data["counterexample"] = {
            "operation": trial.operation,
            "sources": [module_to_json(s) for s in trial.sources],
            "detail": matrix_to_json(trial.detail) if trial.detail is not None else None,
            "derived": module_to_json(trial.derived),
            "witness": {"test": module_to_json(witness.test), "value": group_to_json(witness.value)},
            "reverified": verify_closure(report),
        }
    return data


def task_closure(ctx: JobContext) -> List[CheckResult]:
    cls = ctx.job.class_ or INJECTIVE
    prop = ctx.job.property or "quotients"
    report = closure_check(cls, ctx.job.n, ctx.ring, prop, ctx.trials, ctx.seed, ctx.bound, jobs=ctx.jobs)
    return [_result("closure", "pass" if report.passed else "counterexample", **_closure_data(report))]


def _pd_data(report) -> Dict:
    data = {"mode": report.mode, "tested": report.tested, "statement": report.statement()}
    if report.counterexample is not None:
        data["counterexample"] = module_to_json(report.counterexample)
        data["syzygy"] = module_to_json(report.certificate.syzygy)
    return data


def task_pd_search(ctx: JobContext) -> List[CheckResult]:
    report = pd_fpn_search(ctx.ring, ctx.job.n, ctx.bound, ctx.seed, ctx.jobs)
    return [_result("pd-search", "verified" if report.verified else "counterexample", **_pd_data(report))]


def task_consistency_report(ctx: JobContext) -> List[CheckResult]:
    report = hereditary_consistency_report(ctx.ring, ctx.job.n, ctx.bound, ctx.seed, ctx.trials, ctx.jobs)
    matrices = report.matrices
    matrix_data = {"mode": matrices.mode, "tested": matrices.tested, "statement": matrices.statement()}
    if matrices.certificate is not None:
        matrix_data["certificate"] = _certificate_data(matrices.certificate)
    if not report.consistent:
        overall = "inconsistent"
    else:
        overall = "verified" if report.all_pass else "counterexample"

    return [
        _result("pd-search", "verified" if report.pd.verified else "counterexample", **_pd_data(report.pd)),
        _result("hereditary-report", "verified" if matrices.verified else "counterexample", **matrix_data),
        _result("closure", "pass" if report.closure.passed else "counterexample", **_closure_data(report.closure)),
        _result("closure", "pass" if report.flat.passed else "counterexample", **_closure_data(report.flat)),
        _result(
            "consistency-report",
            overall,
            verdicts=report.verdicts,
            cross_checks=report.cross_checks,
            disagreements=report.disagreements(),
        ),
    ]


# Task registry
TASKS: Dict[str, Callable[[JobContext], List[CheckResult]]] = {
    "pseudo-cok": task_pseudo_cok,
    "n-hereditary": task_n_hereditary,
    "semi-hereditary": task_semi_hereditary,
    "split-cokernel": task_split_cokernel,
    "hereditary-report": task_hereditary_report,
    "projective": task_projective,
    "presentation": task_presentation,
    "hom": task_hom,
    "ext": _group_task("ext", ext1),
    "tor": _group_task("tor", tor1),
    "tensor": _group_task("tensor", tensor_product),
    "character": task_character,
    "duality-check": task_duality_check,
    "yoneda": task_yoneda,
    "unital-decomposition": task_unital_decomposition,
    "membership": task_membership,
    "closure": task_closure,
    "pd-search": task_pd_search,
    "consistency-report": task_consistency_report,
}


def get_task(name: str) -> Callable[[JobContext], List[CheckResult]]:
    """Get task handler by name"""
    if name not in TASKS:
        raise JobSpecError(f"Unknown task: {name}")
    return TASKS[name]


def exit_code_for(results: List[CheckResult]) -> int:
    return 1 if any(r.verdict in FAILING for r in results) else 0


def run_job(job: JobSpec) -> RunReport:
    """Execute one job; exit code 1 means the mathematics answered no"""
    ctx = build_context(job)
    logger.info(f"Running {job.task} over {ctx.ring}")
    results = get_task(job.task)(ctx)
    resolved = job.model_dump(mode="json", by_alias=True, exclude_none=True, exclude={"jobs", "output"})
    resolved["seed"] = ctx.seed
    return RunReport(job=resolved, exit_code=exit_code_for(results), results=results)


def build_report(runs: List[RunReport]) -> Report:
    return Report(version=__version__, exit_code=max((r.exit_code for r in runs), default=0), runs=runs)


def report_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"


def write_report(report: Report, path: str) -> None:
    """Write atomically: temporary file in the target directory, then rename"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".hereditas-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(report_json(report))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.info(f"Report written to {path}")
