"""Shared fixtures for the k3-syzygy test suite."""

import random
from pathlib import Path

import pytest

from k3_syzygy.koszul import FormSpace
from k3_syzygy.lattice import IntersectionLattice
from k3_syzygy.ring import fermat, monomial_forms, random_hypersurface

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

W1_FORMS = ["x^7", "y^7", "z^7", "t^7", "x^6*y"]
W2_FORMS = ["x^7", "y^7", "z^7", "t^7", "x^2*y^2*z^2*t"]


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def quartic():
    """The Fermat quartic; session-scoped so graded pieces are built once."""
    return fermat(4)


@pytest.fixture(scope="session")
def random_quartic():
    return random_hypersurface(random.Random(20240531))


@pytest.fixture(scope="session")
def w1() -> FormSpace:
    return FormSpace.from_text(W1_FORMS)


@pytest.fixture(scope="session")
def w2() -> FormSpace:
    return FormSpace.from_text(W2_FORMS)


@pytest.fixture
def quartic_lattice() -> IntersectionLattice:
    return IntersectionLattice.rank_one(4)


@pytest.fixture
def monomial_space():
    """Factory: a random w-subset of the degree-a monomials."""

    def build(rng: random.Random, a: int, w: int) -> FormSpace:
        pool = monomial_forms(a)
        return FormSpace.from_forms([pool[i] for i in sorted(rng.sample(range(len(pool)), w))])

    return build
