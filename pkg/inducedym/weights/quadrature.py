"""Independent quadrature engine for c_lambda via the Weyl integration formula."""

import math

import numpy as np

from ..config import Config
from ..errors import BudgetExceeded, InvalidInput, QuadratureError
from ..logging import get_logger
from ..repn import IrrepSignature
from ..repn.characters import alternant, torus_grid
from .couplings import ModelCouplings
from .fourier import one_plaquette_weight

logger = get_logger(__name__)

MAX_QUADRATURE_NC = 3


def _trapezoid_coefficient(sig: IrrepSignature, couplings: ModelCouplings, m: int) -> float:
    theta = torus_grid(sig.n_c, m)
    weight = np.prod(one_plaquette_weight(theta, couplings), axis=-1)
    z = np.exp(1j * theta)
    # chi_lambda(U^-1) |xi_rho|^2 = conj(xi_{lambda+rho}) xi_rho, no division needed
    kernel = np.conj(alternant(sig.shifted, z)) * alternant(sig.rho, z)
    value = np.mean(weight * kernel) / math.factorial(sig.n_c)
    return float(value.real)


def char_coefficient_quadrature(
    sig: IrrepSignature,
    couplings: ModelCouplings,
    grid: int = 64,
    tolerance: float | None = None,
) -> float:
    """
    c_lambda by tensor-product trapezoid quadrature on the maximal torus.

    The result at grid M is compared with grid M/2; a difference above the
    tolerance means the weight is too sharply peaked for this grid.

    Args:
        sig: Irrep signature
        couplings: Model couplings
        grid: Points per angle (power of two)
        tolerance: Aliasing tolerance (default Config.QUADRATURE_TOLERANCE)

    Raises:
        QuadratureError: if halving the grid changes the result beyond tolerance
    """
    if sig.n_c != couplings.n_c:
        raise InvalidInput(f"signature {sig} does not match N_c={couplings.n_c}", module="weights")
    if sig.n_c > MAX_QUADRATURE_NC:
        raise BudgetExceeded(
            f"torus quadrature costs grid^N_c; N_c={sig.n_c} exceeds {MAX_QUADRATURE_NC}",
            module="weights",
        )
    if grid < 4 or grid & (grid - 1):
        raise InvalidInput(f"grid must be a power of two >= 4, got {grid}", module="weights")
    tol = Config.QUADRATURE_TOLERANCE if tolerance is None else tolerance

    fine = _trapezoid_coefficient(sig, couplings, grid)
    coarse = _trapezoid_coefficient(sig, couplings, grid // 2)
    scale = max(abs(fine), 1.0)
    aliasing = abs(fine - coarse)
    logger.debug("quadrature c_%s: M=%d value=%.15g aliasing=%.3g", sig, grid, fine, aliasing)
    if aliasing > tol * scale:
        raise QuadratureError(
            f"grid {grid} is too coarse for alpha_b={couplings.alpha_b}: "
            f"halving changed c_{sig} by {aliasing:.3g}",
            module="weights",
        )
    return fine
