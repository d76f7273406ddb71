"""
Exact rank over the rationals

Fraction-free elimination on sparse integer vectors. Each vector is first scaled to
integers; eliminating against a pivot vector cross-multiplies instead of dividing,
and the content (gcd of entries) is removed after every step to keep entries small.
"""

import logging
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List, Tuple

from k3_syzygy.linalg.matrix import SparseMatrix

IntVector = Dict[int, int]


def _integral(vector: Dict[int, object]) -> IntVector:
    scale = lcm(*(value.denominator for value in vector.values())) if vector else 1
    return {k: int(v * scale) for k, v in vector.items() if v != 0}


def _primitive(vector: IntVector) -> IntVector:
    content = reduce(gcd, vector.values(), 0)
    if content > 1:
        return {k: v // content for k, v in vector.items()}
    return vector


def echelon_pivots(vectors: Iterable[Dict[int, object]]) -> Tuple[int, Dict[int, IntVector]]:
    """
    Returns (rank, pivots) where pivots maps a leading index to a primitive integer
    vector whose smallest index is that leading index.
    """
    pivots: Dict[int, IntVector] = {}
    rank = 0
    for vector in vectors:
        v = _integral(vector)
        while v:
            lead = min(v)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _primitive(v)
                rank += 1
                break
            a, b = v[lead], pivot[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            combined = {k: b * x for k, x in v.items()}
            for k, x in pivot.items():
                value = combined.get(k, 0) - a * x
                if value:
                    combined[k] = value
                else:
                    combined.pop(k, None)
            v = _primitive(combined)
    return rank, pivots


def rank_exact(matrix: SparseMatrix) -> int:
    """Rank over Q, eliminating along whichever side has fewer vectors."""
    logger = logging.getLogger("rank_backend")
    vectors: List[Dict[int, object]]
    if matrix.ncols <= matrix.nrows:
        vectors = list(matrix.columns)
    else:
        vectors = matrix.rows()
    logger.debug(f"Exact elimination on {len(vectors)} vectors of a {matrix.nrows}x{matrix.ncols} matrix")
    rank, _ = echelon_pivots(vectors)
    return rank
