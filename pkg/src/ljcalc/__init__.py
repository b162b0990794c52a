"""Exact symbolic calculus for Jacobi structures and their cohomology and homology."""

from .expoly import ExPoly
from .jacobi import JacobiStructure, modular_pair, verify_jacobi
from .liealg import LieAlgebra, ce_cohomology, nilmanifold_lj_dims
from .tensorcalc import Chart, DiffForm, MultiVector, schouten, wedge

__all__ = [
    "Chart",
    "DiffForm",
    "ExPoly",
    "JacobiStructure",
    "LieAlgebra",
    "MultiVector",
    "ce_cohomology",
    "modular_pair",
    "nilmanifold_lj_dims",
    "schouten",
    "verify_jacobi",
    "wedge",
]

__version__ = "0.1.0"
