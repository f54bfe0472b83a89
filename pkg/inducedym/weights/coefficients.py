"""Character-expansion coefficients c_lambda(alpha) of the plaquette weight."""

from dataclasses import dataclass
from enum import Enum

import mpmath

from ..config import Config
from ..errors import InvalidInput
from ..logging import get_logger
from ..repn import IrrepSignature, weyl_dimension
from .couplings import ModelCouplings
from .fourier import fourier_coeff

logger = get_logger(__name__)


class Engine(Enum):
    """Which independent method produced a coefficient."""
    DETERMINANT = "determinant"
    QUADRATURE = "quadrature"
    RESIDUE = "residue-oracle"


@dataclass
class CharCoefficient:
    """Coefficient of chi_lambda in the expansion of the weight (Haar mass 1)."""
    signature: IrrepSignature
    couplings: ModelCouplings
    value: object
    engine: Engine

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.signature),
            "alpha_b": str(self.couplings.alpha_b),
            "alpha_f": str(self.couplings.alpha_f),
            "c_lambda": float(self.value),
            "engine": self.engine.value,
        }


def _series_tolerance():
    # Entries of the Heine matrix cancel near alpha -> 1; converge the
    # series to the working precision rather than double precision.
    return mpmath.mpf(10) ** (-(mpmath.mp.dps - 5))


def heine_matrix(sig: IrrepSignature, couplings: ModelCouplings) -> mpmath.matrix:
    """The matrix [f_{(lambda+rho)_l - rho_k}]_{k,l} of 1D Fourier coefficients."""
    shifted = sig.shifted
    rho = sig.rho
    n = sig.n_c
    tol = _series_tolerance()
    mat = mpmath.matrix(n, n)
    for k in range(n):
        for l in range(n):
            mat[k, l] = fourier_coeff(shifted[l] - rho[k], couplings, tol)
    return mat


def char_coefficient(sig: IrrepSignature, couplings: ModelCouplings) -> CharCoefficient:
    """
    c_lambda(alpha) by the Heine/Andreief determinant reduction.

    The Weyl-measure integral of prod_j w(theta_j) against the two
    alternants collapses to det[f_{(lambda+rho)_l - rho_k}]. f_0 is factored
    out of every row and reapplied as f_0^{N_c}, which keeps the matrix
    O(1) when the entries diverge together as alpha -> 1.

    Args:
        sig: Irrep signature (length must equal couplings.n_c)
        couplings: Model couplings

    Returns:
        CharCoefficient with an mpmath value at Config.PRECISION digits
    """
    if sig.n_c != couplings.n_c:
        raise InvalidInput(f"signature {sig} does not match N_c={couplings.n_c}", module="weights")
    with mpmath.workdps(Config.PRECISION):
        mat = heine_matrix(sig, couplings)
        f0 = fourier_coeff(0, couplings, _series_tolerance())
        if f0 != 0:
            scaled = mat / f0
            value = mpmath.det(scaled) * f0 ** sig.n_c
        else:
            value = mpmath.det(mat)
        logger.debug("c_%s(%s) = %s", sig, couplings.alpha_b, mpmath.nstr(value, 12))
        return CharCoefficient(signature=sig, couplings=couplings, value=+value, engine=Engine.DETERMINANT)


def char_coefficients(
    signatures: list[IrrepSignature],
    couplings: ModelCouplings,
) -> list[CharCoefficient]:
    """Batch evaluation; Fourier coefficients are shared through the memo cache."""
    return [char_coefficient(sig, couplings) for sig in signatures]


def coefficient_ratio(sig: IrrepSignature, couplings: ModelCouplings) -> mpmath.mpf:
    """c_lambda / (d_lambda c_0), the per-plaquette factor of lattice sums."""
    with mpmath.workdps(Config.PRECISION):
        c = char_coefficient(sig, couplings).value
        c0 = char_coefficient(IrrepSignature.trivial(sig.n_c), couplings).value
        return c / (weyl_dimension(sig) * c0)
