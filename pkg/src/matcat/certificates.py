"""
Hereditary criteria in the matrix category and their certificates
"""
from dataclasses import dataclass
from typing import Optional

from loguru import logger

from ..errors import DimensionMismatchError, HereditasError
from ..linalg import Mat, solve_linear, solve_rows
from .chains import PseudoCokChain, pseudo_n_cokernel

SUCCESS = "success"
FAILURE = "failure"


@dataclass(frozen=True)
class Refutation:
    """An unsolvable flattened linear system"""

    equations: tuple
    unknown_shape: tuple
    ring: str

    def describe(self) -> str:
        rows, cols = self.unknown_shape
        return (
            f"no {rows}x{cols} matrix over {self.ring} satisfies " + " and ".join(self.equations)
        )


@dataclass(frozen=True)
class HereditaryCertificate:
    kind: str
    n: int
    chain: PseudoCokChain
    c: Optional[Mat] = None
    alpha: Optional[Mat] = None
    refutation: Optional[Refutation] = None

    @property
    def success(self) -> bool:
        return self.kind == SUCCESS

    @property
    def a(self) -> Mat:
        return self.chain.f

    @property
    def b(self) -> Mat:
        return self.chain.stage(1)


def _alpha_equations(chain: PseudoCokChain):
    fn = chain.stage(chain.n)
    fprev = chain.stage(chain.n - 1)
    if fn.cols != fprev.rows:
        raise DimensionMismatchError(f"f_n is {fn.shape} but f_(n-1) is {fprev.shape}")
    size = fprev.rows
    zero = Mat.zeros(chain.ring, fn.rows, size)
    return size, [(lambda x: fn @ x, zero), (lambda x: x @ fprev, fprev)]


def alpha_solve(chain: PseudoCokChain) -> Optional[Mat]:
    """Endomorphism alpha of X_(n-1) with f_n * alpha = 0 and alpha * f_(n-1) = f_(n-1)"""
    if chain.n < 1:
        raise HereditasError("Chain must have length at least 1")
    size, equations = _alpha_equations(chain)
    return solve_linear(chain.ring, (size, size), equations)


def alpha_from_section(chain: PseudoCokChain, section: Mat) -> Mat:
    """alpha = I - P * f_n for a section P of f_n (f_n * P = I)"""
    fn = chain.stage(chain.n)
    if fn @ section != Mat.identity(chain.ring, fn.rows):
        raise HereditasError("Matrix is not a section of f_n")
    return Mat.identity(chain.ring, fn.cols) - section @ fn


def split_cokernel_test(g: Mat) -> Optional[Mat]:
    """P with G * P = I, or None"""
    return solve_linear(g.ring, (g.cols, g.rows), [(lambda x: g @ x, Mat.identity(g.ring, g.rows))])


def semi_hereditary_witness(a: Mat) -> HereditaryCertificate:
    """Find C with B*C = 0 and C*A = A, B the pseudo-cokernel of A"""
    chain = pseudo_n_cokernel(a, 1)
    b = chain.stage(1)
    k = a.rows
    c = solve_linear(
        a.ring,
        (k, k),
        [(lambda x: b @ x, Mat.zeros(a.ring, b.rows, k)), (lambda x: x @ a, a)],
    )
    if c is None:
        refutation = Refutation(("B*C = 0", "C*A = A"), (k, k), str(a.ring))
        logger.debug(f"semi-hereditary criterion fails for {a}")
        return HereditaryCertificate(FAILURE, 1, chain, refutation=refutation)

    # alpha = I - h*B with h*B = I - C; rows of I - C lie in the left kernel of A
    identity = Mat.identity(a.ring, k)
    h = solve_rows(b, identity - c)
    if h is None:
        raise HereditasError("I - C is not generated by the pseudo-cokernel")
    alpha = identity - h @ b
    return HereditaryCertificate(SUCCESS, 1, chain, c=c, alpha=alpha)


def n_hereditary_witness(a: Mat, n: int) -> HereditaryCertificate:
    chain = pseudo_n_cokernel(a, n)
    alpha = alpha_solve(chain)
    if alpha is None:
        size = chain.stage(n - 1).rows
        cert = HereditaryCertificate(
            FAILURE,
            n,
            chain,
            refutation=Refutation(
                ("f_n*alpha = 0", "alpha*f_(n-1) = f_(n-1)"), (size, size), str(a.ring)
            ),
        )
    else:
        cert = HereditaryCertificate(SUCCESS, n, chain, alpha=alpha)

    if n == 1:
        other = semi_hereditary_witness(a)
        if other.success != cert.success:
            raise HereditasError(f"alpha and C certificates disagree on {a}")
        if other.success:
            cert = HereditaryCertificate(SUCCESS, 1, chain, c=other.c, alpha=alpha)
            if not (verify_certificate(cert) and verify_certificate(other)):
                raise HereditasError(f"alpha = I - h*B does not certify {a}")
    return cert


def verify_certificate(cert: HereditaryCertificate) -> bool:
    """Re-check a success certificate by multiplication only"""
    if not cert.success:
        return False
    chain = cert.chain
    if not chain.composites_vanish():
        return False
    if cert.c is not None:
        b, a = chain.stage(1), chain.f
        if not ((b @ cert.c).is_zero() and cert.c @ a == a):
            return False
    if cert.alpha is not None:
        fn, fprev = chain.stage(cert.n), chain.stage(cert.n - 1)
        if not ((fn @ cert.alpha).is_zero() and cert.alpha @ fprev == fprev):
            return False
    return cert.c is not None or cert.alpha is not None

