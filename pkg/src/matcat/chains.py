"""
Pseudo n-cokernels in the matrix category of a ring

A morphism k -> m is a k x m matrix and composition is the matrix product, so
the pseudo-cokernel of f is a generating matrix of its left kernel.
"""
from dataclasses import dataclass
from typing import Tuple

from loguru import logger

from ..errors import DimensionMismatchError, HereditasError
from ..linalg import Mat, RingSpec, left_kernel


@dataclass(frozen=True)
class PseudoCokChain:
    """f and f_1, ..., f_n with f_1 * f = 0 and f_{i+1} * f_i = 0"""

    ring: RingSpec
    f: Mat
    chain: Tuple[Mat, ...]
    witnesses: Tuple[Mat, ...]

    def __post_init__(self):
        previous = self.f
        for i, m in enumerate(self.chain, start=1):
            if m.cols != previous.rows:
                raise DimensionMismatchError(
                    f"f_{i} has {m.cols} columns but its source has {previous.rows} rows"
                )
            previous = m

    @property
    def n(self) -> int:
        return len(self.chain)

    def stage(self, i: int) -> Mat:
        """f_i, with f_0 = f"""
        return self.f if i == 0 else self.chain[i - 1]

    def composites_vanish(self) -> bool:
        return all((self.stage(i + 1) @ self.stage(i)).is_zero() for i in range(self.n))

    def verify(self) -> bool:
        """Composites vanish and each left kernel is generated by the next map"""
        if not self.composites_vanish():
            return False
        for i in range(self.n):
            if self.witnesses[i] @ self.stage(i + 1) != left_kernel(self.stage(i)):
                return False
        return True


def pseudo_cokernel(a: Mat) -> Mat:
    """B = left_kernel(A): every g with g*A = 0 factors as g = y*B, row by row"""
    return left_kernel(a)


def pseudo_n_cokernel(a: Mat, n: int) -> PseudoCokChain:
    if n < 1:
        raise HereditasError(f"n must be positive, got {n}")
    chain = []
    witnesses = []
    current = a
    for _ in range(n):
        nxt = pseudo_cokernel(current)
        # the kernel normal form is f_{i+1} itself
        witness = Mat.identity(a.ring, nxt.rows)
        chain.append(nxt)
        witnesses.append(witness)
        current = nxt
    logger.debug(f"pseudo {n}-cokernel of {a.rows}x{a.cols}: ranks {[m.rows for m in chain]}")
    return PseudoCokChain(a.ring, a, tuple(chain), tuple(witnesses))


def is_n_cokernel(chain: PseudoCokChain) -> bool:
    """f_n is a cokernel of f_{n-1} exactly when nothing nonzero is killed by f_n"""
    return left_kernel(chain.stage(chain.n)).rows == 0
