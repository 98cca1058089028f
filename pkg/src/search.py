"""
Bounded, seed-reproducible enumeration of matrices and presentations
"""
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from .config import config
from .errors import SearchError
from .linalg import Mat, RingSpec
from .modules.fpmodule import FpModule, module_key

T = TypeVar("T")
R = TypeVar("R")

MODES = ("auto", "exhaustive", "sampled")


@dataclass(frozen=True)
class SearchBound:
    """Size limits: matrices up to max_rows x max_cols, presentations with at most
    max_rows relations on at most max_cols generators"""

    max_rows: int = 2
    max_cols: int = 2
    entry_bound: int = 10
    mode: str = "auto"
    samples: int = 200

    def __post_init__(self):
        if self.max_rows < 1 or self.max_cols < 1:
            raise SearchError(f"Bound must be at least 1x1, got {self.max_rows}x{self.max_cols}")
        if self.mode not in MODES:
            raise SearchError(f"Unknown search mode {self.mode!r}")

    def describe(self) -> str:
        return f"{self.max_rows}x{self.max_cols}"


def _exhaustive_count(ring: RingSpec, shapes: Sequence[Tuple[int, int]]) -> Optional[int]:
    size = ring.size()
    if size is None:
        return None
    return sum(size ** (r * c) for r, c in shapes)


def resolve_mode(ring: RingSpec, bound: SearchBound, shapes: Sequence[Tuple[int, int]]) -> str:
    count = _exhaustive_count(ring, shapes)
    if bound.mode == "exhaustive":
        if count is None:
            raise SearchError(f"{ring} is infinite; exhaustive search is impossible")
        return "exhaustive"
    if bound.mode == "sampled":
        return "sampled"
    if count is not None and count <= config.search.exhaustive_limit:
        return "exhaustive"
    logger.info(f"{ring}: {count if count is not None else 'infinitely many'} candidates, sampling instead")
    return "sampled"


def _all_matrices(ring: RingSpec, rows: int, cols: int) -> Iterator[Mat]:
    elements = list(ring.elements())
    for entries in itertools.product(elements, repeat=rows * cols):
        yield Mat(ring, rows, cols, tuple(entries))


def _random_matrix(ring: RingSpec, rows: int, cols: int, rng: random.Random, entry_bound: int) -> Mat:
    return Mat(ring, rows, cols, tuple(ring.random_element(rng, entry_bound) for _ in range(rows * cols)))


def matrix_candidates(ring: RingSpec, bound: SearchBound, seed: int = 0) -> Tuple[str, List[Mat]]:
    """All matrices within the bound (exhaustive) or a seeded sample"""
    shapes = [(r, c) for r in range(1, bound.max_rows + 1) for c in range(1, bound.max_cols + 1)]
    mode = resolve_mode(ring, bound, shapes)
    if mode == "exhaustive":
        candidates = [m for r, c in shapes for m in _all_matrices(ring, r, c)]
    else:
        rng = random.Random(seed)
        candidates = []
        for _ in range(bound.samples):
            r = rng.randint(1, bound.max_rows)
            c = rng.randint(1, bound.max_cols)
            candidates.append(_random_matrix(ring, r, c, rng, bound.entry_bound))
    logger.debug(f"{len(candidates)} {mode} matrices over {ring} within {bound.describe()}")
    return mode, candidates


def module_candidates(
    ring: RingSpec, bound: SearchBound, seed: int = 0, side: str = "left"
) -> Tuple[str, List[FpModule]]:
    """Presentations within the bound, deduplicated by their relation submodule"""
    shapes = [(r, g) for g in range(1, bound.max_cols + 1) for r in range(0, bound.max_rows + 1)]
    mode = resolve_mode(ring, bound, shapes)
    raw: List[FpModule] = []
    if mode == "exhaustive":
        for r, g in shapes:
            for m in _all_matrices(ring, r, g):
                raw.append(FpModule(ring, side, g, m))
    else:
        rng = random.Random(seed)
        for _ in range(bound.samples):
            g = rng.randint(1, bound.max_cols)
            r = rng.randint(0, bound.max_rows)
            raw.append(FpModule(ring, side, g, _random_matrix(ring, r, g, rng, bound.entry_bound)))
    seen = set()
    modules = []
    for module in raw:
        key = module_key(module)
        if key not in seen:
            seen.add(key)
            modules.append(module)
    logger.debug(f"{len(modules)} distinct {mode} presentations over {ring} ({len(raw)} enumerated)")
    return mode, modules


def run_ordered(
    func: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
    stop: Optional[Callable[[R], bool]] = None,
) -> List[R]:
    """
    Map func over items in order, stopping after the first result with stop(result)

    With jobs > 1 the work is spread over worker processes in ordered chunks,
    so the returned prefix is identical to the sequential one.
    """
    results: List[R] = []
    if jobs <= 1 or len(items) <= 1:
        for item in items:
            result = func(item)
            results.append(result)
            if stop is not None and stop(result):
                break
        return results

    chunk = jobs * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, len(items), chunk):
            for result in pool.map(func, items[start:start + chunk]):
                results.append(result)
                if stop is not None and stop(result):
                    return results
    return results
