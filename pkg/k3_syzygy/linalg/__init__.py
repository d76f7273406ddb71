"""
Exact and modular linear algebra for k3-syzygy
"""

from k3_syzygy.linalg.backend import (
    PRIME_CERTIFIED,
    RATIONAL_CERTIFIED,
    RankResult,
    choose_prime,
    compute_rank,
    fast_rank,
    validate_prime,
)
from k3_syzygy.errors import PrimeError
from k3_syzygy.linalg.exact import echelon_pivots, rank_exact
from k3_syzygy.linalg.matrix import SparseMatrix
from k3_syzygy.linalg.modular import rank_mod_p

__all__ = [
    "PRIME_CERTIFIED",
    "RATIONAL_CERTIFIED",
    "PrimeError",
    "RankResult",
    "SparseMatrix",
    "choose_prime",
    "compute_rank",
    "echelon_pivots",
    "fast_rank",
    "rank_exact",
    "rank_mod_p",
    "validate_prime",
]
