"""
Dual formulation of the U(1) induced model: certified sums over closed
integer 2-chains, Wegner-Wilson loops through dn = -C, and a gauge-fixed
quadrature oracle.
"""

from .dual import DualResult, DualWeightConfig, dual_partition, dual_wilson
from .oracle import OracleResult, direct_u1_oracle

__all__ = [
    "DualWeightConfig",
    "DualResult",
    "dual_partition",
    "dual_wilson",
    "OracleResult",
    "direct_u1_oracle",
]
