"""Tests for Koszul differentials, kernel dimensions and base-point certificates."""

import random
from fractions import Fraction

import pytest

from k3_syzygy.errors import FormSpaceError, TwistOutOfRange
from k3_syzygy.koszul import (
    CERTIFIED,
    UNDETERMINED,
    FormSpace,
    basepoint_check,
    generation_matrix,
    h0_s_dual_linebundle,
    h0_wedge_syzygy,
    h0_wedge_syzygy_result,
    is_complex,
    koszul_matrix,
    koszul_shapes,
    require_independent_in_ring,
)
from k3_syzygy.linalg import PRIME_CERTIFIED, RATIONAL_CERTIFIED
from k3_syzygy.ring import graded_dim, monomial_forms


class TestFormSpace:
    def test_needs_three_forms(self):
        with pytest.raises(FormSpaceError):
            FormSpace.from_text(["x^2", "y^2"])

    def test_mixed_degrees(self):
        with pytest.raises(FormSpaceError):
            FormSpace.from_text(["x^2", "y^2", "z^3"])

    def test_dependent_forms(self):
        with pytest.raises(FormSpaceError):
            FormSpace.from_text(["x^2", "y^2", "x^2 - 2*y^2"])

    def test_dependent_modulo_hypersurface(self, quartic):
        W = FormSpace.from_text(["x^4", "y^4", "z^4", "x^4 + y^4 + z^4 + t^4"])
        with pytest.raises(FormSpaceError):
            require_independent_in_ring(quartic, W)

    def test_describe(self, w2):
        assert w2.w == 5
        assert w2.describe(["x", "y", "z", "t"])["forms"][-1] == "x^2*y^2*z^2*t"


class TestKoszulMatrix:
    def test_linear_forms_q1(self, quartic):
        W = FormSpace.from_text(["x", "y", "z"])
        matrix = koszul_matrix(quartic, W, 1, 0).matrix
        assert matrix.shape == (4, 3)
        assert list(matrix.columns) == [{0: 1}, {1: 1}, {2: 1}]

    def test_lexicographic_subsets_and_signs(self, quartic):
        W = FormSpace.from_text(["x", "y", "z"])
        matrix = koszul_matrix(quartic, W, 2, 0).matrix
        assert matrix.shape == (12, 3)
        # e_{01} -> e_1 (x) x - e_0 (x) y
        assert matrix.columns[0] == {4: Fraction(1), 1: Fraction(-1)}
        # e_{12} -> e_2 (x) y - e_1 (x) z
        assert matrix.columns[2] == {9: Fraction(1), 6: Fraction(-1)}

    @pytest.mark.parametrize(
        "texts, column",
        [
            (["x", "y", "z"], {8: 1, 5: -1, 2: 1}),
            (["x^2", "y^2", "z^2"], {20: 1, 14: -1, 7: 1}),
        ],
    )
    def test_top_wedge_is_alternating_vector_of_forms(self, quartic, texts, column):
        # e_012 -> e_12 (x) g_0 - e_02 (x) g_1 + e_01 (x) g_2
        W = FormSpace.from_text(texts)
        matrix = koszul_matrix(quartic, W, 3, 0).matrix
        assert matrix.ncols == 1
        assert matrix.columns[0] == column

    def test_shapes_without_building(self, quartic, w2):
        assert koszul_shapes(quartic, w2, 3, 5) == (2900, 520)
        assert koszul_shapes(quartic, w2, 2, 3) == (1010, 200)
        assert koszul_shapes(quartic, w2, 1, 1) == (130, 20)

    def test_built_shape_matches_oracle(self, quartic, w2):
        kmap = koszul_matrix(quartic, w2, 2, 1)
        assert (kmap.target_dim, kmap.source_dim) == koszul_shapes(quartic, w2, 2, 1)

    @pytest.mark.parametrize("q, t", [(0, 1), (6, 1), (1, -1)])
    def test_out_of_range(self, quartic, w2, q, t):
        with pytest.raises(TwistOutOfRange):
            koszul_shapes(quartic, w2, q, t)

    def test_complex_property_quick(self, quartic, monomial_space):
        rng = random.Random(8)
        for _ in range(10):
            a = rng.randint(1, 2)
            W = monomial_space(rng, a, rng.randint(3, 4))
            for q in range(2, W.w + 1):
                for t in range(0, 4):
                    assert is_complex(quartic, W, q, t)

    @pytest.mark.slow
    def test_complex_property(self, random_quartic, monomial_space):
        rng = random.Random(9)
        for _ in range(50):
            a = rng.randint(1, 2)
            W = monomial_space(rng, a, rng.randint(3, 4))
            for q in range(2, W.w + 1):
                for t in range(0, 9):
                    assert is_complex(random_quartic, W, q, t)

    def test_complex_with_general_forms(self, random_quartic):
        W = FormSpace.from_text(["x^2 + y*z", "y^2 - 2*x*t", "z^2 + t^2", "x*y + 3*z*t"])
        for q in range(2, 5):
            assert is_complex(random_quartic, W, q, 2)


class TestKernels:
    def test_w2_no_sections_twisted_once(self, quartic, w2):
        assert h0_wedge_syzygy(quartic, w2, 1, 1) == 0

    def test_w1_linear_syzygy(self, quartic, w1):
        result = h0_wedge_syzygy_result(quartic, w1, 1, 1)
        assert result.kernel_dim >= 1
        assert result.provenance == RATIONAL_CERTIFIED

    def test_w2_second_exterior_power(self, quartic, w2):
        result = h0_wedge_syzygy_result(quartic, w2, 2, 3)
        assert result.kernel_dim == 0
        assert result.provenance == PRIME_CERTIFIED
        assert (result.target_dim, result.source_dim) == (1010, 200)

    @pytest.mark.slow
    def test_w2_third_exterior_power(self, quartic, w2):
        result = h0_wedge_syzygy_result(quartic, w2, 3, 5)
        assert (result.target_dim, result.source_dim) == (2900, 520)
        assert result.kernel_dim == 0

    def test_prime_certified_vanishing_holds_over_q(self, quartic):
        W = FormSpace.from_text(["x^2", "y^2", "z^2"])
        modular = h0_wedge_syzygy_result(quartic, W, 1, 1)
        exact = h0_wedge_syzygy_result(quartic, W, 1, 1, exact=True)
        assert modular.provenance == PRIME_CERTIFIED
        assert exact.provenance == RATIONAL_CERTIFIED
        assert modular.kernel_dim == exact.kernel_dim == 0

    def test_prime_dividing_a_coefficient(self, quartic):
        W = FormSpace.from_text(["1/7*x^2", "y^2", "z^2"])
        result = h0_wedge_syzygy_result(quartic, W, 1, 1, prime=7)
        assert result.kernel_dim == 0
        assert result.provenance == RATIONAL_CERTIFIED

    def test_exact_only_backend(self, quartic, w1):
        assert h0_wedge_syzygy(quartic, w1, 1, 1, prime=None) == h0_wedge_syzygy(quartic, w1, 1, 1)

    def test_simple_shadows(self, random_quartic, monomial_space):
        rng = random.Random(12)
        for _ in range(50):
            a = rng.randint(1, 3)
            W = monomial_space(rng, a, rng.randint(3, 6 if a > 1 else 4))
            assert h0_wedge_syzygy(random_quartic, W, 1, 0) == 0
            assert h0_s_dual_linebundle(random_quartic, W.degree, W.w, 0) == W.w

    def test_dual_twist_dimension(self, quartic):
        assert h0_s_dual_linebundle(quartic, 7, 5, 1) == 20
        assert h0_s_dual_linebundle(quartic, 2, 3, 2) == 3 * 10 - 1
        with pytest.raises(TwistOutOfRange):
            h0_s_dual_linebundle(quartic, 2, 3, -1)


class TestBasepoints:
    @pytest.mark.slow
    def test_w2_is_basepoint_free(self, quartic, w2):
        result = basepoint_check(quartic, w2)
        assert result.status == CERTIFIED
        assert result.certified
        assert result.max_degree == 35
        assert result.degree == 15

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_all_monomials_certified_in_their_degree(self, quartic, a):
        W = FormSpace.from_forms(monomial_forms(a))
        result = basepoint_check(quartic, W)
        assert result.status == CERTIFIED
        assert result.degree == a

    def test_squares_generate(self, quartic):
        W = FormSpace.from_text(["x^2", "y^2", "z^2"])
        result = basepoint_check(quartic, W)
        assert result.certified
        matrix = generation_matrix(quartic, W, result.degree)
        assert matrix.nrows == graded_dim(quartic, result.degree)

    def test_common_zero_is_undetermined(self, quartic):
        W = FormSpace.from_text(["x^2", "y^2", "x*y"])
        result = basepoint_check(quartic, W)
        assert result.status == UNDETERMINED
        assert result.degree is None
        assert result.to_dict() == {"status": UNDETERMINED, "degree": None, "max_degree": 7}

    def test_prime_dividing_a_coefficient(self, quartic):
        W = FormSpace.from_text(["1/7*x^2", "y^2", "z^2"])
        result = basepoint_check(quartic, W, prime=7)
        assert result.certified
        assert result == basepoint_check(quartic, W, prime=None)

    def test_exact_scan(self, quartic):
        W = FormSpace.from_text(["x^2", "y^2", "z^2"])
        assert basepoint_check(quartic, W, prime=None) == basepoint_check(quartic, W)
