"""
Oriented cell complexes and integer chain algebra.

Every other module consumes complexes through this package: the boundary
operator, plaquette boundary walks (holonomy ordering), spanning trees for
gauge fixing, and integer bases of closed 2-chains for the abelian dual.
"""

from .builders import build_closed_surface, build_hypercubic, build_polygon
from .complex import CellComplex, Contour, IntegerChain, SignedLink, boundary, coboundary
from .io import complex_from_dict, complex_to_dict, load_complex, parse_contour, save_complex
from .topology import (
    bounding_chain,
    boundary_rank,
    kernel_basis_2chains,
    spanning_tree,
)

__all__ = [
    "CellComplex",
    "Contour",
    "IntegerChain",
    "SignedLink",
    "boundary",
    "coboundary",
    "build_hypercubic",
    "build_polygon",
    "build_closed_surface",
    "spanning_tree",
    "kernel_basis_2chains",
    "bounding_chain",
    "boundary_rank",
    "load_complex",
    "save_complex",
    "complex_to_dict",
    "complex_from_dict",
    "parse_contour",
]
