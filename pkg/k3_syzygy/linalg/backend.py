"""
Rank backend selection

A single prime certifies vanishing kernels: the modular rank never exceeds the
rational rank, so a zero modular kernel means a zero rational kernel. A nonzero
modular kernel (or an explicit exact request) is recomputed over Q.
"""

import logging
import random
import time
from dataclasses import dataclass
from typing import Any, Dict, Optional

from sympy import isprime

from k3_syzygy.errors import InternalInconsistency, PrimeError
from k3_syzygy.linalg.exact import rank_exact
from k3_syzygy.linalg.matrix import SparseMatrix
from k3_syzygy.linalg.modular import INT64_SAFE_PRIME_BOUND, rank_mod_p

PRIME_CERTIFIED = "prime-certified"
RATIONAL_CERTIFIED = "rational-certified"


def validate_prime(p: int) -> int:
    if p < 2 or not isprime(p):
        raise PrimeError(f"{p} is not a prime", prime=p)
    return p


def choose_prime(rng: random.Random, low: int = 1 << 30, high: int = INT64_SAFE_PRIME_BOUND) -> int:
    """A random prime in [low, high) drawn from a seeded generator."""
    while True:
        candidate = rng.randrange(low, high) | 1
        if isprime(candidate):
            return candidate


@dataclass(frozen=True)
class RankResult:
    rank: int
    source_dim: int
    target_dim: int
    provenance: str
    prime: Optional[int]
    modular_rank: Optional[int]
    seconds: float

    @property
    def kernel_dim(self) -> int:
        return self.source_dim - self.rank

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "kernel_dim": self.kernel_dim,
            "rank": self.rank,
            "shape": [self.target_dim, self.source_dim],
            "provenance": self.provenance,
            "prime": self.prime,
            "modular_rank": self.modular_rank,
        }
        if timings:
            payload["seconds"] = round(self.seconds, 6)
        return payload


def fast_rank(matrix: SparseMatrix, prime: Optional[int]) -> int:
    """
    Modular rank when a prime is given, which never exceeds the rational rank; exact
    elimination without a prime or when the prime divides a denominator.
    """
    if prime is not None:
        try:
            return rank_mod_p(matrix, prime)
        except PrimeError:
            logging.getLogger("rank_backend").warning(
                f"Prime {prime} divides a denominator; using exact elimination"
            )
    return rank_exact(matrix)


def compute_rank(matrix: SparseMatrix, prime: Optional[int], exact: bool = False) -> RankResult:
    """
    Rank of a map given as a target x source matrix.

    With a prime: modular rank first; escalate to exact elimination when the modular
    kernel is nonzero or exact is requested. Without a prime: exact only.
    """
    logger = logging.getLogger("rank_backend")
    start = time.perf_counter()
    modular_rank = None
    if prime is not None:
        try:
            modular_rank = rank_mod_p(matrix, prime)
        except PrimeError:
            logger.warning(f"Prime {prime} divides a denominator; using exact elimination")
    if modular_rank is not None:
        if modular_rank == matrix.ncols and not exact:
            return RankResult(
                modular_rank, matrix.ncols, matrix.nrows, PRIME_CERTIFIED, prime, modular_rank,
                time.perf_counter() - start,
            )
        logger.info(
            f"Modular kernel {matrix.ncols - modular_rank} on {matrix.nrows}x{matrix.ncols}; "
            "recomputing over Q"
        )
    rank = rank_exact(matrix)
    if modular_rank is not None and modular_rank > rank:
        raise InternalInconsistency(
            "modular rank exceeds rational rank", expected=rank, got=modular_rank
        )
    return RankResult(
        rank, matrix.ncols, matrix.nrows, RATIONAL_CERTIFIED, prime, modular_rank,
        time.perf_counter() - start,
    )
