"""
Hypersurfaces used by the worked examples and the randomized tests
"""

import random
from fractions import Fraction
from typing import Dict

from k3_syzygy.ring.forms import Form, monomials_of_degree, pack
from k3_syzygy.ring.graded import GradedHypersurfaceRing


def fermat(degree: int = 4) -> GradedHypersurfaceRing:
    """x^d + y^d + z^d + t^d."""
    coefficients: Dict[int, Fraction] = {}
    for i in range(4):
        exponents = [0, 0, 0, 0]
        exponents[i] = degree
        coefficients[pack(exponents)] = Fraction(1)
    return GradedHypersurfaceRing(Form.from_packed(degree, coefficients))


def random_hypersurface(
    rng: random.Random, degree: int = 4, extra_terms: int = 6, coefficient_bound: int = 5
) -> GradedHypersurfaceRing:
    """
    Fermat plus a few random integer terms. The coefficient of t^d stays 1, so every
    normal form has integer coefficients. Smoothness is not checked.
    """
    coefficients: Dict[int, Fraction] = dict(fermat(degree).hypersurface.terms)
    lead = pack((0, 0, 0, degree))
    candidates = [k for k in monomials_of_degree(degree) if k != lead]
    for key in rng.sample(candidates, min(extra_terms, len(candidates))):
        value = 0
        while value == 0:
            value = rng.randint(-coefficient_bound, coefficient_bound)
        coefficients[key] = coefficients.get(key, Fraction(0)) + value
    coefficients[lead] = Fraction(1)
    return GradedHypersurfaceRing(Form.from_packed(degree, coefficients))


def random_dense_hypersurface(
    rng: random.Random, degree: int = 4, coefficient_bound: int = 9
) -> GradedHypersurfaceRing:
    """Every monomial gets a random integer coefficient (possibly zero, never all zero)."""
    while True:
        coefficients = {
            k: Fraction(rng.randint(-coefficient_bound, coefficient_bound))
            for k in monomials_of_degree(degree)
        }
        form = Form.from_packed(degree, coefficients)
        if not form.is_zero():
            return GradedHypersurfaceRing(form)
