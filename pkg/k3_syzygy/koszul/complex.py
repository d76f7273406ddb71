"""
Koszul differentials of a form space

For W = <g_1, ..., g_w> of degree a, the map

    wedge^q W (x) R_t  ->  wedge^(q-1) W (x) R_{t+a}
    e_I (x) m  ->  sum_j (-1)^(j-1) e_{I - i_j} (x) g_{i_j} m

restricts the sequence 0 -> wedge^q S -> wedge^q W (x) O_X -> wedge^(q-1) S(a) -> 0
to global sections. Since wedge^(q-1) S(a) sits inside wedge^(q-1) W (x) O_X(a),
H^0(wedge^q S(t)) is exactly the kernel on R_t.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from k3_syzygy.errors import FormSpaceError, TwistOutOfRange
from k3_syzygy.linalg import RankResult, SparseMatrix, compute_rank, echelon_pivots
from k3_syzygy.ring import (
    Form,
    GradedHypersurfaceRing,
    form_to_text,
    graded_dim,
    multiplication_matrix,
    parse_form,
)
from k3_syzygy.settings import DEFAULT_PRIME


@dataclass(frozen=True)
class FormSpace:
    """An ordered list of w >= 3 linearly independent forms of one degree a >= 1."""

    degree: int
    forms: Tuple[Form, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise FormSpaceError(f"form degree must be at least 1, got {self.degree}")
        if len(self.forms) < 3:
            raise FormSpaceError(f"a form space needs w >= 3 forms, got {len(self.forms)}")
        for i, g in enumerate(self.forms):
            if g.is_zero():
                raise FormSpaceError(f"form {i} is zero")
            if g.degree != self.degree:
                raise FormSpaceError(
                    f"form {i} has degree {g.degree}, expected {self.degree}", index=i
                )
        rank, _ = echelon_pivots(g.packed for g in self.forms)
        if rank < len(self.forms):
            raise FormSpaceError("the forms are linearly dependent", rank=rank, w=len(self.forms))

    @classmethod
    def from_forms(cls, forms: Sequence[Form]) -> "FormSpace":
        if not forms:
            raise FormSpaceError("empty form space")
        return cls(forms[0].degree, tuple(forms))

    @classmethod
    def from_text(cls, texts: Sequence[str], variables: Optional[Sequence[str]] = None) -> "FormSpace":
        return cls.from_forms([parse_form(text, variables) for text in texts])

    @property
    def w(self) -> int:
        return len(self.forms)

    def describe(self, variables: Sequence[str]) -> Dict[str, Any]:
        return {"degree": self.degree, "forms": [form_to_text(g, variables) for g in self.forms]}


def require_independent_in_ring(ring: GradedHypersurfaceRing, W: FormSpace):
    """W must inject into R_a, not only into the polynomial ring."""
    if W.degree < ring.degree:
        return
    piece = ring.piece(W.degree)
    rank, _ = echelon_pivots(piece.reduce(g.packed) for g in W.forms)
    if rank < W.w:
        raise FormSpaceError("the forms are linearly dependent modulo the hypersurface", rank=rank)


@dataclass(frozen=True)
class KoszulMap:
    q: int
    t: int
    matrix: SparseMatrix

    @property
    def source_dim(self) -> int:
        return self.matrix.ncols

    @property
    def target_dim(self) -> int:
        return self.matrix.nrows


def _check_qt(W: FormSpace, q: int, t: int):
    if not 1 <= q <= W.w:
        raise TwistOutOfRange(f"q={q} outside 1..{W.w}", q=q)
    if t < 0:
        raise TwistOutOfRange(f"twist t={t} must be non-negative", t=t)


def koszul_shapes(ring: GradedHypersurfaceRing, W: FormSpace, q: int, t: int) -> Tuple[int, int]:
    """(target_dim, source_dim) without assembling anything."""
    _check_qt(W, q, t)
    return comb(W.w, q - 1) * graded_dim(ring, t + W.degree), comb(W.w, q) * graded_dim(ring, t)


def koszul_matrix(ring: GradedHypersurfaceRing, W: FormSpace, q: int, t: int) -> KoszulMap:
    """Block matrix of the differential; subsets are ordered lexicographically."""
    logger = logging.getLogger("koszul")
    _check_qt(W, q, t)
    multiplications = [multiplication_matrix(ring, g, t) for g in W.forms]
    source_block = graded_dim(ring, t)
    target_block = graded_dim(ring, t + W.degree)
    target_index = {J: n for n, J in enumerate(combinations(range(W.w), q - 1))}

    columns: List[Dict[int, Any]] = []
    for I in combinations(range(W.w), q):
        placements = []
        for j, i in enumerate(I):
            J = I[:j] + I[j + 1 :]
            sign = 1 if j % 2 == 0 else -1
            placements.append((target_index[J] * target_block, sign, multiplications[i]))
        for b in range(source_block):
            column: Dict[int, Any] = {}
            for offset, sign, block in placements:
                for row, value in block.columns[b].items():
                    column[offset + row] = sign * value
            columns.append(column)
    matrix = SparseMatrix.from_columns(len(target_index) * target_block, columns)
    logger.debug(f"Koszul map q={q} t={t}: {matrix.nrows}x{matrix.ncols}, {matrix.nnz()} nonzeros")
    return KoszulMap(q, t, matrix)


def is_complex(ring: GradedHypersurfaceRing, W: FormSpace, q: int, t: int) -> bool:
    """The composite of consecutive differentials through degree (q, t) vanishes."""
    if q < 2:
        return True
    first = koszul_matrix(ring, W, q, t).matrix
    second = koszul_matrix(ring, W, q - 1, t + W.degree).matrix
    return (second @ first).is_zero()


def h0_wedge_syzygy_result(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    q: int,
    t: int,
    prime: Optional[int] = DEFAULT_PRIME,
    exact: bool = False,
) -> RankResult:
    logger = logging.getLogger("koszul")
    kmap = koszul_matrix(ring, W, q, t)
    result = compute_rank(kmap.matrix, prime, exact)
    logger.info(
        f"h0(wedge^{q} S({t})) = {result.kernel_dim} "
        f"[{kmap.target_dim}x{kmap.source_dim}, {result.provenance}]"
    )
    return result


def h0_wedge_syzygy(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    q: int,
    t: int,
    prime: Optional[int] = DEFAULT_PRIME,
    exact: bool = False,
) -> int:
    """Kernel dimension of the Koszul map on R_t; h^0(wedge^q S(t)) when W is base-point free."""
    return h0_wedge_syzygy_result(ring, W, q, t, prime, exact).kernel_dim


def h0_s_dual_linebundle(ring: GradedHypersurfaceRing, a: int, w: int, t: int) -> int:
    """h^0(S*(t)) = w*dim R_t - dim R_{t-a}, from 0 -> O(-a) -> W* (x) O -> S* -> 0."""
    if t < 0 or a < 1 or w < 3:
        raise TwistOutOfRange("need t >= 0, a >= 1 and w >= 3", t=t, a=a, w=w)
    return w * graded_dim(ring, t) - graded_dim(ring, t - a)
