"""
Independent re-verification of report certificates

Only multiplications and comparisons: nothing here solves a system.
"""
from typing import Callable, Dict, List, Tuple

from loguru import logger

from ..errors import JobSpecError
from ..linalg import Mat, RingSpec
from .codec import parse_matrix, parse_module, parse_ring
from .models import CheckResult, Report


def _mat(ring: RingSpec, data: Dict, key: str) -> Mat:
    if key not in data:
        raise JobSpecError(f"Certificate is missing '{key}'")
    return parse_matrix(ring, data[key])


def _composites_vanish(maps: List[Mat]) -> bool:
    return all((upper @ lower).is_zero() for lower, upper in zip(maps, maps[1:]))


def _check_hereditary(ring: RingSpec, data: Dict) -> bool:
    a = _mat(ring, data, "a")
    chain = [a] + [parse_matrix(ring, m) for m in data.get("chain", [])]
    if not _composites_vanish(chain):
        return False
    if "c" in data:
        b, c = chain[1], _mat(ring, data, "c")
        if not ((b @ c).is_zero() and c @ a == a):
            return False
    if "alpha" in data:
        alpha = _mat(ring, data, "alpha")
        fn, fprev = chain[-1], chain[-2]
        if not ((fn @ alpha).is_zero() and alpha @ fprev == fprev):
            return False
    return "c" in data or "alpha" in data


def _check_split(ring: RingSpec, data: Dict) -> bool:
    g, p = _mat(ring, data, "g"), _mat(ring, data, "p")
    return g @ p == Mat.identity(ring, g.rows)


def _check_projective(ring: RingSpec, data: Dict) -> bool:
    module = parse_module(ring, data["module"])
    w = module.working_ring
    a = module.working_relations
    u = _mat(ring, data, "u").with_ring(w)
    return a @ u @ a == a


def _check_pseudo_cok(ring: RingSpec, data: Dict) -> bool:
    return _composites_vanish([_mat(ring, data, "f")] + [parse_matrix(ring, m) for m in data["chain"]])


def _check_hom(ring: RingSpec, data: Dict) -> bool:
    source = parse_module(ring, data["first"])
    target = parse_module(ring, data["second"])
    w = source.working_ring
    for f in data.get("morphisms", []):
        s = parse_matrix(ring, f["matrix"]).with_ring(w)
        witness = parse_matrix(ring, f["witness"]).with_ring(w)
        if source.working_relations @ s != witness @ target.working_relations:
            return False
    return True


CHECKERS: Dict[str, Tuple[str, Callable[[RingSpec, Dict], bool]]] = {
    "semi-hereditary": ("success", _check_hereditary),
    "n-hereditary": ("success", _check_hereditary),
    "split-cokernel": ("success", _check_split),
    "projective": ("success", _check_projective),
    "pseudo-cok": ("success", _check_pseudo_cok),
    "hom": ("value", _check_hom),
}


def _check_result(ring: RingSpec, result: CheckResult) -> bool:
    verdict, checker = CHECKERS[result.check]
    return result.verdict != verdict or checker(ring, result.data)


def verify_report(report: Report) -> Tuple[int, List[str]]:
    """Re-check every certificate; returns the number checked and the failures"""
    checked = 0
    failures = []
    for i, run in enumerate(report.runs):
        ring = parse_ring(run.job["ring"])
        for j, result in enumerate(run.results):
            if result.check not in CHECKERS:
                continue
            checked += 1
            if not _check_result(ring, result):
                failures.append(f"run {i} result {j} ({result.check}) does not re-verify")
    logger.info(f"Re-verified {checked} certificates, {len(failures)} failures")
    return checked, failures
