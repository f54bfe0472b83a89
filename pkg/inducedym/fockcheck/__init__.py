"""
Fock-space checks: the determinant weight as a truncated Fock trace, and the
invariant-sector dimensions whose generating function is c_0.
"""

from .hilbert import HilbertSeries, hilbert_exponent, singlet_hilbert_series, singlet_series_exact
from .trace import (
    IdentityCheck,
    OneParticleMatrix,
    fock_determinant,
    symmetric_power_traces,
    truncated_fock_trace,
    verify_det_identity,
)

__all__ = [
    "OneParticleMatrix",
    "symmetric_power_traces",
    "truncated_fock_trace",
    "fock_determinant",
    "IdentityCheck",
    "verify_det_identity",
    "HilbertSeries",
    "singlet_hilbert_series",
    "singlet_series_exact",
    "hilbert_exponent",
]
