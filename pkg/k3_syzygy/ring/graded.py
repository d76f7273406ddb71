"""
Graded hypersurface ring

R = k[x0,x1,x2,x3]/(f). Because the ideal is principal, each graded piece is
R_t = S_t / f*S_{t-d}, computed with linear algebra. The rows f*m (m a monomial of
degree t-d) are in echelon form for the order in which the lexicographically smallest
monomial leads: the lead of f*m is lead(f)*m and these are pairwise distinct. The
monomials outside lead(f)*S_{t-d} are the first ones in graded-lex order not in the
row space; they form the complement basis of R_t.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from k3_syzygy.errors import InternalInconsistency, ZeroFormError
from k3_syzygy.linalg import SparseMatrix, fast_rank
from k3_syzygy.ring.forms import DEFAULT_VARIABLES, Form, form_to_text, monomials_of_degree
from k3_syzygy.ring.parser import parse_form

Vector = Dict[int, Fraction]


def _binom3(n: int) -> int:
    return comb(n, 3) if n >= 3 else 0


@dataclass(frozen=True)
class GradedPiece:
    """R_t with its complement monomial basis and the reduction of every other monomial."""

    degree: int
    ambient_basis: Tuple[int, ...]
    complement: Tuple[int, ...]
    index: Dict[int, int]
    reduction: Dict[int, Vector]

    @property
    def dim(self) -> int:
        return len(self.complement)

    def reduce(self, vector: Vector) -> Vector:
        """Normal form of an element of S_t, keyed by complement monomials."""
        out: Vector = {}
        for key, c in vector.items():
            if c == 0:
                continue
            if key in self.index:
                out[key] = out.get(key, 0) + c
            else:
                for k, r in self.reduction[key].items():
                    out[k] = out.get(k, 0) + c * r
        return {k: c for k, c in out.items() if c != 0}

    def coordinates(self, vector: Vector) -> Dict[int, Fraction]:
        """Normal form as {position in complement basis: coefficient}."""
        return {self.index[k]: c for k, c in self.reduce(vector).items()}


class GradedHypersurfaceRing:
    """Coordinate ring of a hypersurface in P^3 with construct-once graded pieces."""

    def __init__(self, hypersurface: Form, variable_names: Sequence[str] = DEFAULT_VARIABLES):
        if hypersurface.is_zero():
            raise ZeroFormError("the hypersurface equation must be nonzero")
        if hypersurface.degree < 1:
            raise ZeroFormError("the hypersurface must have degree at least 1")
        self.hypersurface = hypersurface
        self.variable_names = tuple(variable_names)
        self.lead_key = min(k for k, _ in hypersurface.terms)
        self.lead_coefficient = hypersurface.packed[self.lead_key]
        self._pieces: Dict[int, GradedPiece] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_text(cls, text: str, variable_names: Optional[Sequence[str]] = None) -> "GradedHypersurfaceRing":
        names = tuple(variable_names or DEFAULT_VARIABLES)
        return cls(parse_form(text, names), names)

    @property
    def degree(self) -> int:
        return self.hypersurface.degree

    @property
    def polarization_square(self) -> int:
        """L^2 = d for the hyperplane class on a degree-d surface."""
        return self.degree

    def describe(self) -> Dict[str, object]:
        return {
            "variables": list(self.variable_names),
            "hypersurface": form_to_text(self.hypersurface, self.variable_names),
            "degree": self.degree,
        }

    def piece(self, t: int) -> GradedPiece:
        piece = self._pieces.get(t)
        if piece is not None:
            return piece
        with self._lock:
            piece = self._pieces.get(t)
            if piece is None:
                piece = _build_piece(self, t)
                self._pieces[t] = piece
        return piece

    def __repr__(self) -> str:
        return f"GradedHypersurfaceRing({form_to_text(self.hypersurface, self.variable_names)!r})"


def graded_dim(ring: GradedHypersurfaceRing, t: int) -> int:
    """dim R_t = C(t+3,3) - C(t-d+3,3), zero in negative degree."""
    if t < 0:
        return 0
    return _binom3(t + 3) - _binom3(t - ring.degree + 3)


def hilbert_function(ring: GradedHypersurfaceRing, t_max: int) -> List[int]:
    return [graded_dim(ring, t) for t in range(t_max + 1)]


def _build_piece(ring: GradedHypersurfaceRing, t: int) -> GradedPiece:
    logger = logging.getLogger("graded_ring")
    if t < 0:
        raise ValueError("graded pieces exist only in non-negative degree")
    ambient = monomials_of_degree(t)
    lead = ring.lead_key
    tail = [(k, -c / ring.lead_coefficient) for k, c in ring.hypersurface.terms if k != lead]
    pivots = {lead + m for m in monomials_of_degree(t - ring.degree)}
    complement = tuple(k for k in ambient if k not in pivots)
    index = {k: i for i, k in enumerate(complement)}

    # lead*m == -(1/lc) * sum(c_s * s*m): every s*m is a larger key than lead*m, so
    # reducing pivots from the largest key down only uses already-known normal forms
    reduction: Dict[int, Vector] = {}
    for pivot in sorted(pivots, reverse=True):
        m = pivot - lead
        acc: Vector = {}
        for s, coeff in tail:
            key = s + m
            if key in index:
                acc[key] = acc.get(key, 0) + coeff
            else:
                for k, r in reduction[key].items():
                    acc[k] = acc.get(k, 0) + coeff * r
        reduction[pivot] = {k: c for k, c in acc.items() if c != 0}

    if len(complement) != graded_dim(ring, t):
        raise InternalInconsistency(
            f"complement basis in degree {t} has the wrong size",
            expected=graded_dim(ring, t),
            got=len(complement),
        )
    logger.info(f"Built R_{t}: {len(complement)} of {len(ambient)} monomials, {len(pivots)} reduced")
    return GradedPiece(t, ambient, complement, index, reduction)


def build_graded_piece(ring: GradedHypersurfaceRing, t: int) -> GradedPiece:
    return ring.piece(t)


def normal_form(ring: GradedHypersurfaceRing, g: Form) -> Form:
    """Canonical representative of g in the complement basis of R_deg(g)."""
    if g.is_zero():
        return g
    return Form.from_packed(g.degree, ring.piece(g.degree).reduce(g.packed))


def multiplication_matrix(ring: GradedHypersurfaceRing, g: Form, t: int) -> SparseMatrix:
    """Matrix of m -> normal_form(g*m) from R_t to R_{t+deg g} in the complement bases."""
    source = ring.piece(t)
    target = ring.piece(t + g.degree)
    columns = []
    g_terms = g.terms
    for m in source.complement:
        product: Vector = {}
        for k, c in g_terms:
            product[k + m] = product.get(k + m, 0) + c
        columns.append(target.coordinates(product))
    return SparseMatrix.from_columns(target.dim, columns)


def ideal_matrix(ring: GradedHypersurfaceRing, t: int) -> SparseMatrix:
    """Columns f*m for the monomials m of degree t-d, written in the monomial basis of S_t."""
    ambient = monomials_of_degree(t)
    position = {k: i for i, k in enumerate(ambient)}
    columns = []
    for m in monomials_of_degree(t - ring.degree):
        columns.append({position[k + m]: c for k, c in ring.hypersurface.terms})
    return SparseMatrix.from_columns(len(ambient), columns)


def quotient_dim_by_elimination(ring: GradedHypersurfaceRing, t: int, prime: Optional[int] = None) -> int:
    """
    dim S_t minus the rank of f*S_{t-d}, by explicit elimination (exact, or modular when
    a prime is given; a modular rank equal to the number of columns is exact as well).
    """
    matrix = ideal_matrix(ring, t)
    rank = fast_rank(matrix, prime)
    return matrix.nrows - rank
