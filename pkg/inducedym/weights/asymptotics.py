"""
Limit diagnostics for c_lambda(alpha) as alpha -> 1-.

These turn the statements "c_lambda / c_0 -> d_lambda", "the deviation is
quadratic in (1 - alpha) with Casimir coefficient", "c_0 diverges with a
fixed power" and "the Cauchy regime has a linear cusp" into numbers that
can be compared against representation data.
"""

from dataclasses import dataclass

import mpmath
import numpy as np

from ..config import Config
from ..errors import InvalidInput
from ..logging import get_logger
from ..repn import IrrepSignature, casimir2, charge, weyl_dimension
from .coefficients import char_coefficient, coefficient_ratio
from .couplings import ModelCouplings

logger = get_logger(__name__)

TAYLOR_ALPHAS = (0.97, 0.985, 0.9925)
CUSP_ALPHAS = (0.98, 0.99, 0.995)
EXPONENT_ALPHAS = tuple(np.linspace(0.9, 0.99, 10))


def _bosonic(n_c: int, n_b: int, alpha) -> ModelCouplings:
    return ModelCouplings(n_c=n_c, n_b=n_b, alpha_b=alpha)


def richardson(values: list[float], steps: list[float]) -> float:
    """
    Extrapolate g(h) to h = 0 from samples at geometrically halving steps.

    Assumes g(h) = g(0) + a h + b h^2 + ...; each level eliminates one power.
    """
    if len(values) != len(steps) or not values:
        raise InvalidInput("values and steps must be non-empty and of equal length", module="weights")
    table = [float(v) for v in values]
    ratio = steps[0] / steps[1] if len(steps) > 1 else 2.0
    for level in range(1, len(values)):
        weight = ratio ** level
        table = [(weight * table[i + 1] - table[i]) / (weight - 1) for i in range(len(table) - 1)]
    return table[0]


def delta_limit_deviation(sig: IrrepSignature, couplings: ModelCouplings) -> float:
    """|c_lambda / c_0 - d_lambda| at the given couplings."""
    with mpmath.workdps(Config.PRECISION):
        ratio = coefficient_ratio(sig, couplings) * weyl_dimension(sig)
        return float(abs(ratio - weyl_dimension(sig)))


def taylor_law_prediction(sig: IrrepSignature, b1: float, b2: float) -> float:
    """1/2 (B1 q^2 + B2 Cas2), the limit of (1 - c/(d c_0)) / (1 - alpha)^2."""
    return 0.5 * (b1 * charge(sig) ** 2 + b2 * casimir2(sig))


def taylor_coefficient(
    sig: IrrepSignature,
    n_b: int,
    alphas: tuple[float, ...] = TAYLOR_ALPHAS,
) -> float:
    """Richardson-extrapolated limit of (1 - c_lambda/(d_lambda c_0)) / (1 - alpha)^2."""
    steps = [1.0 - a for a in alphas]
    values = []
    with mpmath.workdps(Config.PRECISION):
        for a in alphas:
            ratio = coefficient_ratio(sig, _bosonic(sig.n_c, n_b, a))
            h = mpmath.mpf(1) - mpmath.mpf(a)
            values.append(float((1 - ratio) / h ** 2))
    limit = richardson(values, steps)
    logger.debug("Taylor coefficient %s N_b=%d: samples %s -> %.8g", sig, n_b, values, limit)
    return limit


def cauchy_slope(
    sig: IrrepSignature,
    n_b: int,
    alphas: tuple[float, ...] = CUSP_ALPHAS,
) -> float:
    """
    Richardson-extrapolated one-sided slope of c_lambda/(d_lambda c_0) at alpha -> 1-.

    Uses s(h) = (1 - g(1 - h)) / h, since g(1) = 1 in the regime N_b >= N_c.
    """
    steps = [1.0 - a for a in alphas]
    values = []
    with mpmath.workdps(Config.PRECISION):
        for a in alphas:
            ratio = coefficient_ratio(sig, _bosonic(sig.n_c, n_b, a))
            h = mpmath.mpf(1) - mpmath.mpf(a)
            values.append(float((1 - ratio) / h))
    slope = richardson(values, steps)
    logger.debug("Cauchy slope %s N_b=%d: samples %s -> %.8g", sig, n_b, values, slope)
    return slope


@dataclass
class ExponentFit:
    """Least-squares fit of log c_0 = p (-log(1 - alpha)) + c + a (1 - alpha)."""
    exponent: float
    intercept: float
    correction: float
    residual: float
    expected: int

    @property
    def relative_error(self) -> float:
        return abs(self.exponent - self.expected) / abs(self.expected)

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "expected": self.expected,
            "intercept": self.intercept,
            "correction": self.correction,
            "residual": self.residual,
        }


def expected_exponent(n_c: int, n_b: int) -> int:
    """2 N_b N_c - N_c^2, the leading power of the c_0 singularity."""
    return 2 * n_b * n_c - n_c * n_c


def fit_log_series(alphas, log_values, expected: int) -> ExponentFit:
    """Fit log values against -log(1 - alpha) with a constant and a linear correction."""
    alphas = np.asarray(alphas, dtype=float)
    h = 1.0 - alphas
    design = np.column_stack([-np.log(h), np.ones_like(h), h])
    coef, residuals, _, _ = np.linalg.lstsq(design, np.asarray(log_values, dtype=float), rcond=None)
    residual = float(residuals[0]) if residuals.size else 0.0
    return ExponentFit(
        exponent=float(coef[0]),
        intercept=float(coef[1]),
        correction=float(coef[2]),
        residual=residual,
        expected=expected,
    )


def singularity_exponent(
    n_c: int,
    n_b: int,
    alphas: tuple[float, ...] = EXPONENT_ALPHAS,
) -> ExponentFit:
    """Fitted log-slope of c_0(alpha) against -log(1 - alpha)."""
    trivial = IrrepSignature.trivial(n_c)
    logs = []
    with mpmath.workdps(Config.PRECISION):
        for a in alphas:
            c0 = char_coefficient(trivial, _bosonic(n_c, n_b, float(a))).value
            logs.append(float(mpmath.log(c0)))
    fit = fit_log_series(alphas, logs, expected_exponent(n_c, n_b))
    logger.debug("c_0 exponent N_c=%d N_b=%d: %.6g (expected %d)", n_c, n_b, fit.exponent, fit.expected)
    return fit
