"""
Graded ring module for k3-syzygy
"""

from k3_syzygy.ring.forms import (
    DEFAULT_VARIABLES,
    Form,
    form_to_text,
    monomial_forms,
    monomials_of_degree,
    pack,
    unpack,
)
from k3_syzygy.ring.examples import fermat, random_dense_hypersurface, random_hypersurface
from k3_syzygy.ring.graded import (
    GradedHypersurfaceRing,
    GradedPiece,
    build_graded_piece,
    graded_dim,
    hilbert_function,
    ideal_matrix,
    multiplication_matrix,
    normal_form,
    quotient_dim_by_elimination,
)
from k3_syzygy.ring.parser import parse_form

__all__ = [
    "DEFAULT_VARIABLES",
    "Form",
    "GradedHypersurfaceRing",
    "GradedPiece",
    "build_graded_piece",
    "fermat",
    "form_to_text",
    "graded_dim",
    "hilbert_function",
    "ideal_matrix",
    "monomial_forms",
    "monomials_of_degree",
    "multiplication_matrix",
    "normal_form",
    "pack",
    "parse_form",
    "quotient_dim_by_elimination",
    "random_dense_hypersurface",
    "random_hypersurface",
    "unpack",
]
