"""
Built-in demo job lists
"""
from typing import Any, Dict, List, Optional

from ..errors import JobSpecError
from .models import JobSpec, Report
from .runner import build_report, run_job

Z2 = {"generators": 1, "relations": [["2"]]}
Z3 = {"generators": 1, "relations": [["3"]]}
FREE = {"generators": 1, "relations": []}

DEMOS: Dict[str, List[Dict[str, Any]]] = {
    "z": [
        {"ring": "Z", "task": "semi-hereditary", "matrix": [["2"]]},
        {"ring": "Z", "task": "semi-hereditary", "matrix": [["2", "4"], ["6", "3"]]},
        {"ring": "Z", "task": "ext", "first": Z2, "second": Z2},
        {"ring": "Z", "task": "ext", "first": Z2, "second": Z3},
        {"ring": "Z", "task": "tor", "first": Z2, "second": Z2},
        {"ring": "Z", "task": "projective", "module": Z2},
        {"ring": "Z", "task": "pd-search", "bound": {"rows": 3, "cols": 3, "samples": 40}},
        {"ring": "Z", "task": "hereditary-report", "bound": {"rows": 3, "cols": 3, "samples": 40}},
    ],
    "z4": [
        {"ring": "Z/4", "task": "semi-hereditary", "matrix": [["2"]]},
        {"ring": "Z/4", "task": "pseudo-cok", "matrix": [["2"]], "n": 3},
        {"ring": "Z/4", "task": "ext", "first": Z2, "second": Z2},
        {"ring": "Z/4", "task": "tor", "first": Z2, "second": Z2},
        {"ring": "Z/4", "task": "character", "module": Z2},
        {"ring": "Z/4", "task": "duality-check", "first": Z2, "second": Z2},
        {"ring": "Z/4", "task": "membership", "module": FREE, "class": "I_n", "bound": {"rows": 2, "cols": 2}},
        {"ring": "Z/4", "task": "membership", "module": Z2, "class": "I_n", "bound": {"rows": 1, "cols": 1}},
        {"ring": "Z/4", "task": "consistency-report", "bound": {"rows": 1, "cols": 1}, "trials": 50},
    ],
    "z6": [
        {"ring": "Z/6", "task": "semi-hereditary", "matrix": [["2"]]},
        {"ring": "Z/6", "task": "n-hereditary", "matrix": [["2", "3"]], "n": 1},
        {"ring": "Z/6", "task": "duality-check", "which": "flat", "module": Z3, "testset": [Z2, Z3]},
        {"ring": "Z/6", "task": "closure", "class": "I_n", "property": "quotients", "trials": 50},
        {"ring": "Z/6", "task": "consistency-report", "bound": {"rows": 1, "cols": 2}, "trials": 50},
    ],
    "f2": [
        {"ring": "F_2", "task": "split-cokernel", "matrix": [["1", "1"]]},
        {"ring": "F_2", "task": "hereditary-report", "bound": {"rows": 2, "cols": 2}},
        {"ring": "F_2", "task": "consistency-report", "bound": {"rows": 1, "cols": 2}, "trials": 50},
    ],
    "a2": [
        {"ring": "A2", "task": "unital-decomposition", "module": FREE},
        {"ring": "A2", "task": "yoneda", "module": FREE},
        {"ring": "A2", "task": "yoneda", "module": {"generators": 1, "relations": [["e2"]]}},
        {"ring": "A2", "task": "semi-hereditary", "matrix": [["a"]]},
        {"ring": "A2", "task": "pd-search", "bound": {"rows": 1, "cols": 1}},
    ],
}


def demo_jobs(
    name: str, seed: Optional[int] = None, bound: Optional[Dict[str, int]] = None
) -> List[JobSpec]:
    if name not in DEMOS:
        raise JobSpecError(f"Unknown demo {name!r}; expected one of {sorted(DEMOS)}")
    jobs = []
    for raw in DEMOS[name]:
        spec = dict(raw)
        if seed is not None:
            spec["seed"] = seed
        if bound is not None:
            spec["bound"] = {**spec.get("bound", {}), **bound}
        jobs.append(JobSpec.model_validate(spec))
    return jobs


def run_demo(
    name: str,
    seed: Optional[int] = None,
    bound: Optional[Dict[str, int]] = None,
    jobs: Optional[int] = None,
) -> Report:
    runs = []
    for job in demo_jobs(name, seed, bound):
        if jobs is not None:
            job = job.model_copy(update={"jobs": jobs})
        runs.append(run_job(job))
    return build_report(runs)
