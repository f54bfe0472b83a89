"""The determinant of the induced weight as a character of bosonic Fock space.

For unitary U the one-boson operator acts on the 2 N_b N_c charged modes
through M(U) = (U x 1_{N_b}) + (conj U x 1_{N_b}), and

    |Det(1 - alpha U)|^{-2 N_b} = sum_n alpha^n Tr Sym^n M(U).

Symmetric power traces h_n come from the power sums p_k = Tr M^k by
Newton's identities n h_n = sum_{k=1}^n p_k h_{n-k}.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from ..errors import IdentityViolation, InvalidInput
from ..logging import get_logger

logger = get_logger(__name__)


@dataclass
class OneParticleMatrix:
    """Single-boson action of U on the charge +/- mode space."""
    u: np.ndarray
    n_b: int

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=complex)
        if self.u.ndim != 2 or self.u.shape[0] != self.u.shape[1]:
            raise InvalidInput("U must be a square matrix", module="fockcheck")
        if self.n_b < 1:
            raise InvalidInput("N_b must be at least 1", module="fockcheck")

    @property
    def n_c(self) -> int:
        return self.u.shape[0]

    @property
    def dimension(self) -> int:
        return 2 * self.n_b * self.n_c

    @property
    def matrix(self) -> np.ndarray:
        flavors = np.eye(self.n_b)
        return block_diag(np.kron(self.u, flavors), np.kron(np.conj(self.u), flavors))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.matrix)

    def power_sums(self, k_max: int) -> np.ndarray:
        """p_1 .. p_{k_max} with p_k = Tr M^k."""
        eig = self.eigenvalues()
        k = np.arange(1, k_max + 1)[:, None]
        return np.sum(eig[None, :] ** k, axis=1)


def symmetric_power_traces(power_sums: np.ndarray, cutoff: int) -> np.ndarray:
    """
    h_0 .. h_cutoff from power sums p_1 .. p_cutoff.

    ``power_sums`` may carry extra trailing axes (one recursion per grid
    point); axis 0 indexes k.
    """
    p = np.asarray(power_sums)
    h = np.zeros((cutoff + 1,) + p.shape[1:], dtype=np.result_type(p, complex))
    h[0] = 1.0
    for n in range(1, cutoff + 1):
        h[n] = sum(p[k - 1] * h[n - k] for k in range(1, n + 1)) / n
    return h


def truncated_fock_trace(u: np.ndarray, alpha: float, n_b: int, cutoff: int) -> complex:
    """sum_{n=0}^{K} alpha^n Tr Sym^n M(U)."""
    if not 0 <= alpha < 1:
        raise InvalidInput("alpha must lie in [0, 1)", module="fockcheck")
    if cutoff < 0:
        raise InvalidInput("cutoff must be non-negative", module="fockcheck")
    if cutoff == 0:
        return complex(1.0)
    one = OneParticleMatrix(u, n_b)
    h = symmetric_power_traces(one.power_sums(cutoff), cutoff)
    return complex(np.sum(alpha ** np.arange(cutoff + 1) * h))


def fock_determinant(u: np.ndarray, alpha: float, n_b: int) -> float:
    """|Det(1 - alpha U)|^{-2 N_b}."""
    u = np.asarray(u, dtype=complex)
    _, logdet = np.linalg.slogdet(np.eye(u.shape[0]) - alpha * u)
    return float(np.exp(-2 * n_b * logdet))


def tail_bound(alpha: float, dimension: int, cutoff: int) -> float:
    """sum_{n > K} alpha^n C(n + D - 1, D - 1), since |Tr Sym^n M| <= dim Sym^n for unitary M."""
    if alpha == 0:
        return 0.0
    total = 0.0
    n = cutoff + 1
    term = alpha ** n * math.comb(n + dimension - 1, dimension - 1)
    while True:
        total += term
        ratio = alpha * (n + dimension) / (n + 1)
        n += 1
        term *= ratio
        if ratio < 1 and term <= 1e-18 * total:
            break
    return total


@dataclass
class IdentityCheck:
    trace: complex
    determinant: float
    relative_error: float
    bound: float
    constant: float

    def to_dict(self) -> dict:
        return {
            "trace": float(self.trace.real),
            "trace_imag": float(self.trace.imag),
            "determinant": self.determinant,
            "relative_error": self.relative_error,
            "bound": self.bound,
            "constant": self.constant,
        }


def verify_det_identity(u: np.ndarray, alpha: float, n_b: int, cutoff: int) -> IdentityCheck:
    """
    Compare the truncated Fock trace with the determinant.

    The relative error must stay below the excluded-sector bound
    (1 + alpha)^D sum_{n>K} alpha^n dim Sym^n plus a rounding floor, with
    D = 2 N_b N_c. The empirical constant
    C = error / (alpha^{K+1} (K+1)^D) is logged.

    Raises:
        IdentityViolation: if the error exceeds the bound
    """
    one = OneParticleMatrix(u, n_b)
    d = one.dimension
    trace = truncated_fock_trace(one.u, alpha, n_b, cutoff)
    det = fock_determinant(one.u, alpha, n_b)
    rel = abs(trace - det) / det

    bound = tail_bound(alpha, d, cutoff) * (1 + alpha) ** d
    floor = 64 * np.finfo(float).eps * ((1 + alpha) / (1 - alpha)) ** d
    scale = alpha ** (cutoff + 1) * (cutoff + 1) ** d
    constant = rel / scale if scale > 0 else 0.0
    logger.debug(
        "Fock identity N_c=%d N_b=%d alpha=%g K=%d: rel=%.3g bound=%.3g C=%.3g",
        one.n_c, n_b, alpha, cutoff, rel, bound, constant,
    )
    if rel > bound + floor:
        raise IdentityViolation(
            f"relative error {rel:.3g} exceeds the tail bound {bound:.3g}", module="fockcheck"
        )
    return IdentityCheck(trace=trace, determinant=det, relative_error=rel, bound=bound, constant=constant)
