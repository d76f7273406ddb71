"""
Rank over a prime field

Dense Gaussian elimination with numpy. For primes below 2^31 the residues and their
pairwise products fit in int64, so row operations stay vectorised; larger primes fall
back to object arrays of Python integers.
"""

import logging

import numpy as np

from k3_syzygy.errors import PrimeError
from k3_syzygy.linalg.matrix import SparseMatrix

INT64_SAFE_PRIME_BOUND = 1 << 31


def reduce_mod_p(matrix: SparseMatrix, p: int) -> np.ndarray:
    """Dense residue matrix; raises PrimeError when p divides a denominator."""
    dtype = np.int64 if p < INT64_SAFE_PRIME_BOUND else object
    transpose = matrix.ncols > matrix.nrows
    shape = (matrix.ncols, matrix.nrows) if transpose else (matrix.nrows, matrix.ncols)
    dense = np.zeros(shape, dtype=dtype)
    for j, col in enumerate(matrix.columns):
        for i, value in col.items():
            den = value.denominator % p
            if den == 0:
                raise PrimeError(f"prime {p} divides a denominator of the matrix", prime=p)
            residue = value.numerator % p * pow(den, -1, p) % p
            if transpose:
                dense[j, i] = residue
            else:
                dense[i, j] = residue
    return dense


def _rank_dense_mod_p(A: np.ndarray, p: int) -> int:
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot], c:] = A[[pivot, r], c:]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.nonzero(A[r + 1 :, c])[0]
        if below.size:
            factors = A[below, c].reshape(-1, 1)
            A[np.ix_(below, np.arange(c, n))] = (A[below, c:] - factors * A[r, c:]) % p
        r += 1
    return r


def rank_mod_p(matrix: SparseMatrix, p: int) -> int:
    """Exact rank of the matrix reduced modulo p. Never exceeds the rational rank."""
    logger = logging.getLogger("rank_backend")
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    A = reduce_mod_p(matrix, p)
    logger.debug(f"Modular elimination on {A.shape[0]}x{A.shape[1]} (p={p})")
    return _rank_dense_mod_p(A, p)
