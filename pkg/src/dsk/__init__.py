"""Exact computer algebra for Delta-Springer ideals, point loci and bases."""

from .grobner import Ideal, PointLocus, buchberger, ideal_equal, intersect, normal_form
from .ideals import ParameterTriple, equivariant_ideal, finite_locus, griffin_ideal
from .polynomials import GREVLEX, MonomialOrder, Poly, Ring
from .shapes import frame

__all__ = [
    "GREVLEX", "Ideal", "MonomialOrder", "ParameterTriple", "PointLocus", "Poly", "Ring",
    "buchberger", "equivariant_ideal", "finite_locus", "frame", "griffin_ideal",
    "ideal_equal", "intersect", "normal_form",
]
