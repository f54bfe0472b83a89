"""Fourier coefficients of the one-variable factor of the plaquette weight.

For U = diag(e^{i theta_j}) the weight factorizes into prod_j w(theta_j) with

    w(theta) = |1 - alpha_f e^{i theta}|^{2 N_f} |1 - alpha_b e^{i theta}|^{-2 N_b}

(or exp(kappa cos theta), kappa = beta / N_c, for the Wilson weight). The
coefficients f_m = (2 pi)^{-1} int w e^{-i m theta} d theta feed the
determinant engine.
"""

from fractions import Fraction
from math import comb

import mpmath
import numpy as np

from ..cache import coefficient_cache
from ..config import Config
from ..errors import InvalidInput, PrecisionError
from ..logging import get_logger
from .couplings import ModelCouplings, Number

logger = get_logger(__name__)


def to_mpf(x: Number) -> mpmath.mpf:
    """Exact conversion of ints/Fractions (and floats) to the current mp context."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def bosonic_fourier(m: int, n_b: int, alpha: Number, rel_tol=None) -> mpmath.mpf:
    """
    m-th Fourier coefficient of |1 - alpha e^{i theta}|^{-2 N_b}.

    Sums f_m = sum_k C(N_b-1+k, k) C(N_b-1+k+|m|, k+|m|) alpha^{2k+|m|}
    term by term via the ratio recurrence, stopping once terms are
    decreasing and below rel_tol of the running sum.

    Raises:
        PrecisionError: if Config.SERIES_MAX_TERMS terms are not enough
    """
    m = abs(int(m))
    if n_b == 0:
        return mpmath.mpf(1 if m == 0 else 0)
    a = to_mpf(alpha)
    if a == 0:
        return mpmath.mpf(1 if m == 0 else 0)
    tol = mpmath.mpf(Config.SERIES_TOLERANCE if rel_tol is None else rel_tol)

    a2 = a * a
    term = comb(n_b - 1 + m, m) * a ** m
    total = term
    k = 0
    while True:
        ratio = mpmath.mpf((n_b + k) * (n_b + k + m)) / ((k + 1) * (k + m + 1)) * a2
        term = term * ratio
        total += term
        k += 1
        if ratio < 1 and abs(term) <= tol * abs(total):
            break
        if k >= Config.SERIES_MAX_TERMS:
            raise PrecisionError(
                f"bosonic Fourier series for m={m}, N_b={n_b}, alpha={alpha} "
                f"did not converge in {Config.SERIES_MAX_TERMS} terms",
                module="weights",
            )
    logger.debug("f_%d (N_b=%d, alpha=%s): %d terms", m, n_b, alpha, k + 1)
    return total


def bosonic_fourier_hypergeometric(m: int, n_b: int, alpha: Number) -> mpmath.mpf:
    """Closed form alpha^|m| C(N_b-1+|m|, |m|) 2F1(N_b, N_b+|m|; |m|+1; alpha^2)."""
    m = abs(int(m))
    if n_b == 0:
        return mpmath.mpf(1 if m == 0 else 0)
    a = to_mpf(alpha)
    return a ** m * comb(n_b - 1 + m, m) * mpmath.hyp2f1(n_b, n_b + m, m + 1, a * a)


def fermionic_fourier(m: int, n_f: int, alpha_f: Number) -> Number:
    """m-th Fourier coefficient of |1 - alpha_f e^{i theta}|^{2 N_f}, exact for exact alpha_f."""
    m = abs(int(m))
    if m > n_f:
        return 0
    return sum(
        comb(n_f, b + m) * comb(n_f, b) * (-alpha_f) ** (2 * b + m)
        for b in range(n_f - m + 1)
    )


def fourier_coeff(m: int, couplings: ModelCouplings, rel_tol=None) -> mpmath.mpf:
    """
    m-th Fourier coefficient of the mixed one-variable weight (f_{-m} = f_m).

    The fermionic factor is a Laurent polynomial, so the mixed coefficient
    is the finite convolution sum_j g_j b_{m-j}.
    """
    m = abs(int(m))
    key = ("fourier", m, couplings.key(), mpmath.mp.dps, str(rel_tol))
    cached = coefficient_cache.get(key)
    if cached is not None:
        return cached

    if couplings.is_wilson:
        kappa = mpmath.mpf(couplings.beta) / couplings.n_c
        value = mpmath.besseli(m, kappa)
    elif couplings.n_f == 0:
        value = bosonic_fourier(m, couplings.n_b, couplings.alpha_b, rel_tol)
    else:
        value = mpmath.mpf(0)
        for j in range(-couplings.n_f, couplings.n_f + 1):
            g = fermionic_fourier(j, couplings.n_f, couplings.alpha_f)
            if g == 0:
                continue
            value += to_mpf(g) * bosonic_fourier(m - j, couplings.n_b, couplings.alpha_b, rel_tol)

    coefficient_cache.set(key, value)
    return value


def one_plaquette_weight(theta: np.ndarray, couplings: ModelCouplings) -> np.ndarray:
    """w(theta) evaluated in double precision on an array of angles."""
    theta = np.asarray(theta, dtype=float)
    if couplings.is_wilson:
        return np.exp(couplings.beta / couplings.n_c * np.cos(theta))
    z = np.exp(1j * theta)
    weight = np.ones_like(theta)
    if couplings.n_f:
        weight = weight * np.abs(1 - float(couplings.alpha_f) * z) ** (2 * couplings.n_f)
    if couplings.n_b:
        alpha_b = float(couplings.alpha_b)
        if not abs(alpha_b) < 1:
            raise InvalidInput("|alpha_b| must be < 1", module="weights")
        weight = weight / np.abs(1 - alpha_b * z) ** (2 * couplings.n_b)
    return weight
