"""
Exact torus integrals of the one-plaquette weight by contour contraction.

This is the slow, literal engine: every pole of the rational integrand is
summed with jet arithmetic, exactly when the couplings are rational. It
serves as the oracle for the determinant engine in ``weights``.
"""

from .contour import (
    STRATEGIES,
    TorusMoment,
    char_coefficient_oracle,
    torus_monomial_expectation,
    wilson_exact,
)
from .jets import TaylorJet

__all__ = [
    "TaylorJet",
    "TorusMoment",
    "STRATEGIES",
    "torus_monomial_expectation",
    "wilson_exact",
    "char_coefficient_oracle",
]
