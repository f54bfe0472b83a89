"""
Two-dimensional engine: disk amplitudes, genus-g partition functions in the
quadratic and Cauchy regimes, gluing checks and lattice surfaces.
"""

from .continuum import (
    CasimirKind,
    ContinuumParams,
    SeriesValue,
    gamma_disk,
    shell_series,
    z_genus,
)
from .gluing import (
    GlueResult,
    commutator_identity_error,
    convolution_identity_error,
    glue_check,
    haar_quadrature,
    torus_double_integral,
)
from .lattice import (
    AreaMap,
    RefinementPoint,
    cauchy_area_map,
    lattice_partition_closed_surface,
    quadratic_area_map,
    refinement_series,
)

__all__ = [
    "CasimirKind",
    "ContinuumParams",
    "SeriesValue",
    "shell_series",
    "gamma_disk",
    "z_genus",
    "GlueResult",
    "glue_check",
    "haar_quadrature",
    "convolution_identity_error",
    "commutator_identity_error",
    "torus_double_integral",
    "AreaMap",
    "RefinementPoint",
    "quadratic_area_map",
    "cauchy_area_map",
    "lattice_partition_closed_surface",
    "refinement_series",
]
