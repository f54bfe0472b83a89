"""
U(N_c) representation theory: signatures, dimensions, charges, Casimirs,
Gelfand-Tsetlin weight tables and characters.
"""

from .characters import (
    character_at_torus,
    character_from_weights,
    character_inner_product,
    character_of_matrices,
    torus_grid,
    weyl_density,
    weyl_integral,
)
from .signature import (
    IrrepSignature,
    casimir2,
    charge,
    enumerate_signatures,
    parse_signature,
    signature_shell,
    weyl_dimension,
)
from .weights import WeightTable, casimir1, expected_weight_sum, weight_multiplicities

__all__ = [
    "IrrepSignature",
    "WeightTable",
    "weyl_dimension",
    "charge",
    "casimir2",
    "casimir1",
    "weight_multiplicities",
    "expected_weight_sum",
    "enumerate_signatures",
    "signature_shell",
    "parse_signature",
    "character_at_torus",
    "character_from_weights",
    "character_of_matrices",
    "character_inner_product",
    "torus_grid",
    "weyl_density",
    "weyl_integral",
]
