"""Dimensions of the U(N_c)-invariant Fock sectors (the Hilbert series of c_0)."""

import math
from dataclasses import dataclass

import numpy as np

from ..config import Config
from ..errors import BudgetExceeded, InvalidInput, QuadratureError
from ..logging import get_logger, warn_near_limit
from ..repn import torus_grid, weyl_integral
from ..weights.asymptotics import ExponentFit, expected_exponent, fit_log_series
from .trace import symmetric_power_traces

logger = get_logger(__name__)

HILBERT_ALPHAS = (0.9, 0.925, 0.95)
EXACT_MAX_NC = 3


@dataclass
class HilbertSeries:
    n_c: int
    n_b: int
    dims: list[int]
    residual: float = 0.0

    def partial_sum(self, alpha: float) -> float:
        return float(sum(d * alpha ** n for n, d in enumerate(self.dims)))

    def to_dict(self) -> dict:
        return {
            "n_c": self.n_c,
            "n_b": self.n_b,
            "dims": self.dims,
            "residual": self.residual,
        }


def _default_grid(n_c: int, degree: int) -> int:
    """Power of two exceeding the largest exponent of h_n times the Weyl density."""
    m = 4
    while m <= degree + 2 * (n_c - 1):
        m *= 2
    return m


def singlet_hilbert_series(n_c: int, n_b: int, degree: int, grid: int | None = None) -> HilbertSeries:
    """
    dim of the invariant subspace at each boson number n <= degree, as the
    Weyl integral of Tr Sym^n M(e^{i theta}).

    Quadrature values are rounded to integers; the largest rounding
    residual must stay below Config.HILBERT_RESIDUAL.

    Raises:
        BudgetExceeded: for N_c or degree beyond the quadrature limits
        QuadratureError: if the rounding residual is too large
    """
    if n_c < 1 or n_b < 1:
        raise InvalidInput("N_c and N_b must be at least 1", module="fockcheck")
    if degree < 0:
        raise InvalidInput("degree must be non-negative", module="fockcheck")
    if n_c > Config.HILBERT_MAX_NC:
        raise BudgetExceeded(f"quadrature Hilbert series needs N_c <= {Config.HILBERT_MAX_NC}", module="fockcheck")
    if degree > Config.HILBERT_MAX_DEGREE:
        raise BudgetExceeded(
            f"quadrature Hilbert series needs degree <= {Config.HILBERT_MAX_DEGREE}", module="fockcheck"
        )
    m = _default_grid(n_c, degree) if grid is None else grid

    theta = torus_grid(n_c, m)
    # p_k = N_b sum_j (e^{i k theta_j} + e^{-i k theta_j})
    k = np.arange(1, degree + 1)[:, None, None]
    p = 2 * n_b * np.sum(np.cos(k * theta[None, :, :]), axis=-1)
    h = symmetric_power_traces(p, degree)
    raw = np.array([weyl_integral(h[n], theta) for n in range(degree + 1)])
    dims = np.rint(raw.real).astype(int)
    residual = float(np.max(np.abs(raw - dims))) if len(raw) else 0.0
    logger.debug("Hilbert series N_c=%d N_b=%d D=%d M=%d: residual %.3g", n_c, n_b, degree, m, residual)
    if residual > Config.HILBERT_RESIDUAL:
        raise QuadratureError(
            f"rounding residual {residual:.3g} above {Config.HILBERT_RESIDUAL:g} (grid {m})",
            module="fockcheck",
        )
    warn_near_limit(logger, "Hilbert series rounding residual", residual, Config.HILBERT_RESIDUAL)
    return HilbertSeries(n_c=n_c, n_b=n_b, dims=[int(d) for d in dims], residual=residual)


# ── Exact expansion ───────────────────────────────────────────────────


def _vandermonde_square(n_c: int) -> dict[tuple[int, ...], int]:
    """Laurent coefficients of |Delta(z)|^2 = prod_{j != k} (1 - z_j / z_k)."""
    poly: dict[tuple[int, ...], int] = {(0,) * n_c: 1}
    for j in range(n_c):
        for k in range(n_c):
            if j == k:
                continue
            shift = [0] * n_c
            shift[j] += 1
            shift[k] -= 1
            out: dict[tuple[int, ...], int] = {}
            for w, c in poly.items():
                out[w] = out.get(w, 0) + c
                moved = tuple(a + b for a, b in zip(w, shift))
                out[moved] = out.get(moved, 0) - c
            poly = {w: c for w, c in out.items() if c}
    return poly


def _mode_counts(n_b: int, charge: int, degree: int) -> list[int]:
    """
    Number of states of one color with m bosons and net charge w, for
    m = 0..degree: C(a + N_b - 1, N_b - 1) C(b + N_b - 1, N_b - 1) with
    a + b = m, a - b = w.
    """
    out = [0] * (degree + 1)
    for m in range(abs(charge), degree + 1, 2):
        a = (m + charge) // 2
        b = (m - charge) // 2
        out[m] = math.comb(a + n_b - 1, n_b - 1) * math.comb(b + n_b - 1, n_b - 1)
    return out


def _convolve(a: list[int], b: list[int], degree: int) -> list[int]:
    out = [0] * (degree + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(degree + 1 - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def singlet_series_exact(n_c: int, n_b: int, degree: int) -> HilbertSeries:
    """
    Invariant dimensions by exact integer expansion of the Molien integrand.

    dim_n = (1/N!) sum_w d(w) [alpha^n] prod_j F(z_j)|_{z^{-w}}, where d(w)
    are the Laurent coefficients of |Delta|^2 and F(z) the one-color
    generating function of the 2 N_b modes.
    """
    if n_c < 1 or n_b < 1:
        raise InvalidInput("N_c and N_b must be at least 1", module="fockcheck")
    if degree < 0:
        raise InvalidInput("degree must be non-negative", module="fockcheck")
    if n_c > EXACT_MAX_NC:
        raise BudgetExceeded(f"exact Hilbert series needs N_c <= {EXACT_MAX_NC}", module="fockcheck")

    total = [0] * (degree + 1)
    counts: dict[int, list[int]] = {}
    for w, coeff in _vandermonde_square(n_c).items():
        series = [1] + [0] * degree
        for charge in w:
            if -charge not in counts:
                counts[-charge] = _mode_counts(n_b, -charge, degree)
            series = _convolve(series, counts[-charge], degree)
        for n in range(degree + 1):
            total[n] += coeff * series[n]

    norm = math.factorial(n_c)
    if any(t % norm for t in total):
        raise QuadratureError("invariant counts are not divisible by N_c!", module="fockcheck")
    return HilbertSeries(n_c=n_c, n_b=n_b, dims=[t // norm for t in total])


def hilbert_exponent(
    n_c: int,
    n_b: int,
    alphas: tuple[float, ...] = HILBERT_ALPHAS,
    degree: int = 1200,
) -> ExponentFit:
    """Fit the singularity exponent of c_0 from partial sums of the exact series."""
    series = singlet_series_exact(n_c, n_b, degree)
    logs = [math.log(series.partial_sum(a)) for a in alphas]
    fit = fit_log_series(alphas, logs, expected_exponent(n_c, n_b))
    logger.debug("Hilbert exponent N_c=%d N_b=%d: %.6g (expected %d)", n_c, n_b, fit.exponent, fit.expected)
    return fit
