"""Tests for the modular and exact rank backends."""

import random
from fractions import Fraction

import pytest

from k3_syzygy.errors import PrimeError
from k3_syzygy.koszul import FormSpace, koszul_matrix
from k3_syzygy.linalg import (
    PRIME_CERTIFIED,
    RATIONAL_CERTIFIED,
    SparseMatrix,
    choose_prime,
    compute_rank,
    echelon_pivots,
    fast_rank,
    rank_exact,
    rank_mod_p,
    validate_prime,
)
from k3_syzygy.ring import monomial_forms, random_hypersurface

PRIME = 2147483647


def _planted_rank(rng: random.Random, nrows: int, ncols: int, rank: int) -> SparseMatrix:
    left = [[rng.randint(-4, 4) for _ in range(rank)] for _ in range(nrows)]
    right = [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(rank)]
    rows = [[sum(left[i][k] * right[k][j] for k in range(rank)) for j in range(ncols)] for i in range(nrows)]
    return SparseMatrix.from_rows(rows)


def test_small_known_ranks():
    assert rank_exact(SparseMatrix.identity(5)) == 5
    assert rank_exact(SparseMatrix.zeros(3, 4)) == 0
    m = SparseMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank_exact(m) == 2
    assert rank_mod_p(m, 7) == 2
    assert rank_mod_p(SparseMatrix.zeros(0, 3), 7) == 0


def test_modular_rank_can_drop():
    m = SparseMatrix.from_rows([[3, 0], [0, 1]])
    assert rank_exact(m) == 2
    assert rank_mod_p(m, 3) == 1


def test_rational_entries():
    m = SparseMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank_exact(m) == 1
    assert rank_mod_p(m, 101) == 1
    with pytest.raises(PrimeError):
        rank_mod_p(m, 3)


def test_prime_dividing_a_denominator_falls_back_to_exact():
    m = SparseMatrix.from_rows([[Fraction(1, 3), 1], [1, 0]])
    assert fast_rank(m, 3) == 2
    result = compute_rank(m, 3)
    assert result.rank == 2
    assert result.provenance == RATIONAL_CERTIFIED
    assert result.modular_rank is None
    assert result.prime == 3


def test_object_dtype_for_large_primes():
    m = SparseMatrix.from_rows([[1, 2], [3, 4], [5, 6]])
    assert rank_mod_p(m, (1 << 61) - 1) == 2


def test_echelon_pivots_leads():
    rank, pivots = echelon_pivots([{0: 2, 1: 4}, {0: 1, 1: 2}, {1: 3}])
    assert rank == 2
    assert pivots[0] == {0: 1, 1: 2}
    assert pivots[1] == {1: 1}


def test_matmul_and_shapes():
    a = SparseMatrix.from_rows([[1, 2], [0, 1], [1, 0]])
    b = SparseMatrix.from_rows([[1, 0, -1], [0, 1, 1]])
    assert (a @ b).to_dense() == [[1, 2, 1], [0, 1, 1], [1, 0, -1]]
    with pytest.raises(ValueError):
        a @ a


def test_row_index_validated():
    with pytest.raises(IndexError):
        SparseMatrix.from_columns(2, [{2: 1}])


def test_prime_validation():
    assert validate_prime(PRIME) == PRIME
    with pytest.raises(PrimeError):
        validate_prime(15)
    with pytest.raises(PrimeError):
        validate_prime(1)


def test_choose_prime_is_seeded():
    first = choose_prime(random.Random("7:prime"))
    assert first == choose_prime(random.Random("7:prime"))
    assert validate_prime(first) == first
    assert first < 1 << 31


def test_provenance():
    full = compute_rank(SparseMatrix.identity(4), PRIME)
    assert full.kernel_dim == 0 and full.provenance == PRIME_CERTIFIED
    deficient = compute_rank(SparseMatrix.from_rows([[1, 1], [1, 1]]), PRIME)
    assert deficient.kernel_dim == 1 and deficient.provenance == RATIONAL_CERTIFIED
    forced = compute_rank(SparseMatrix.identity(4), PRIME, exact=True)
    assert forced.provenance == RATIONAL_CERTIFIED and forced.modular_rank == 4
    exact_only = compute_rank(SparseMatrix.identity(4), None)
    assert exact_only.prime is None and exact_only.modular_rank is None
    assert "seconds" not in full.to_dict(timings=False)


def test_planted_ranks_agree():
    rng = random.Random(17)
    for _ in range(60):
        nrows, ncols = rng.randint(1, 25), rng.randint(1, 25)
        rank = rng.randint(0, min(nrows, ncols))
        m = _planted_rank(rng, nrows, ncols, rank) if rank else SparseMatrix.zeros(nrows, ncols)
        exact = rank_exact(m)
        assert exact <= rank
        assert rank_mod_p(m, PRIME) == exact


def test_koszul_ranks_agree():
    rng = random.Random(23)
    ring = random_hypersurface(rng)
    checked = 0
    while checked < 40:
        a = rng.randint(1, 2)
        pool = monomial_forms(a)
        w = rng.randint(3, min(5, len(pool)))
        W = FormSpace.from_forms([pool[i] for i in sorted(rng.sample(range(len(pool)), w))])
        q = rng.randint(1, w)
        t = rng.randint(0, 3)
        matrix = koszul_matrix(ring, W, q, t).matrix
        if matrix.ncols > 400:
            continue
        modular = rank_mod_p(matrix, PRIME)
        assert modular == rank_exact(matrix)
        result = compute_rank(matrix, PRIME)
        if result.provenance == PRIME_CERTIFIED:
            assert result.kernel_dim == 0
        checked += 1
