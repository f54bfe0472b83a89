"""
Induced plaquette weights and their character expansion.

Fourier coefficients of the one-variable factor feed a Heine determinant
for c_lambda(alpha); an independent torus quadrature cross-checks it.
"""

from .asymptotics import (
    ExponentFit,
    cauchy_slope,
    delta_limit_deviation,
    expected_exponent,
    richardson,
    singularity_exponent,
    taylor_coefficient,
    taylor_law_prediction,
)
from .coefficients import (
    CharCoefficient,
    Engine,
    char_coefficient,
    char_coefficients,
    coefficient_ratio,
    heine_matrix,
)
from .couplings import ModelCouplings, is_exact, parse_number, wilson_equivalent_beta
from .fourier import (
    bosonic_fourier,
    bosonic_fourier_hypergeometric,
    fermionic_fourier,
    fourier_coeff,
    one_plaquette_weight,
    to_mpf,
)
from .heatkernel import heat_kernel_weight
from .moments import MomentReport, moments_B1B2
from .observables import wilson_loop_one_plaquette
from .quadrature import char_coefficient_quadrature

__all__ = [
    "ModelCouplings",
    "parse_number",
    "is_exact",
    "wilson_equivalent_beta",
    "fourier_coeff",
    "bosonic_fourier",
    "bosonic_fourier_hypergeometric",
    "fermionic_fourier",
    "one_plaquette_weight",
    "to_mpf",
    "Engine",
    "CharCoefficient",
    "char_coefficient",
    "char_coefficients",
    "coefficient_ratio",
    "heine_matrix",
    "char_coefficient_quadrature",
    "wilson_loop_one_plaquette",
    "MomentReport",
    "moments_B1B2",
    "heat_kernel_weight",
    "ExponentFit",
    "richardson",
    "delta_limit_deviation",
    "taylor_law_prediction",
    "taylor_coefficient",
    "cauchy_slope",
    "expected_exponent",
    "singularity_exponent",
]
