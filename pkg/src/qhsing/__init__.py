"""Exact invariants of quasi-homogeneous isolated hypersurface singularities."""

__version__ = "0.1.0"

from .poly import Polynomial, ParseError, parse_polynomial
from .grading import Grading, NotQuasiHomogeneousError, find_weights, weighted_degree
from .groebner import MonomialOrder, buchberger, normal_form, standard_monomials
from .invariants import (
    InvariantReport,
    NonIsolatedSingularityError,
    SmoothAtOriginError,
    analyze,
)
from .hamiltonian import PolyForm, PolyVectorField, bracket, mf_generators, xi_field

__all__ = [
    "Polynomial",
    "ParseError",
    "parse_polynomial",
    "Grading",
    "NotQuasiHomogeneousError",
    "find_weights",
    "weighted_degree",
    "MonomialOrder",
    "buchberger",
    "normal_form",
    "standard_monomials",
    "InvariantReport",
    "NonIsolatedSingularityError",
    "SmoothAtOriginError",
    "analyze",
    "PolyForm",
    "PolyVectorField",
    "bracket",
    "mf_generators",
    "xi_field",
]
