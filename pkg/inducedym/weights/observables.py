"""One-plaquette observables."""

import mpmath

from ..config import Config
from ..repn import IrrepSignature
from .coefficients import char_coefficient
from .couplings import ModelCouplings


def wilson_loop_one_plaquette(couplings: ModelCouplings) -> mpmath.mpf:
    """
    Expectation of Tr U for a single plaquette, W = c_fund / c_0.

    The weight is a class function invariant under U -> U^-1, so the
    fundamental and antifundamental coefficients coincide.
    """
    with mpmath.workdps(Config.PRECISION):
        c_fund = char_coefficient(IrrepSignature.fundamental(couplings.n_c), couplings).value
        c_0 = char_coefficient(IrrepSignature.trivial(couplings.n_c), couplings).value
        return c_fund / c_0
