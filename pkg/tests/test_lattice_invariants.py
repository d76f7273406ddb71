"""Tests for Euler characteristics, moduli dimensions and the doubling identities."""

import random
from fractions import Fraction

import pytest
import sympy

from k3_syzygy.errors import (
    InternalInconsistency,
    InvariantsError,
    LatticeError,
    UnsupportedRank,
    VNotInRange,
    WNotInRange,
)
from k3_syzygy.lattice import (
    IntersectionLattice,
    SheafInvariants,
    c1_squared,
    chi_end,
    doubling_check_extension,
    doubling_check_syzygy,
    dual_invariants,
    euler_characteristic,
    extension_fiber_dim,
    extension_transform,
    extension_u,
    hyperplane_line_bundle,
    lagrangian_report_line_bundle,
    rational_curve_lattice,
    slope,
    spl_dim,
    spl_dim_via_syzygy_sequence,
    syzygy_fiber_dim,
    syzygy_transform,
    syzygy_w_range,
    toy_example,
    twist_invariants,
)
from k3_syzygy.lattice import invariants as invariants_module


def _random_lattice(rng: random.Random) -> IntersectionLattice:
    n = rng.randint(1, 3)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * rng.randint(-3, 3)
        for j in range(i):
            gram[i][j] = gram[j][i] = rng.randint(-3, 3)
    gram[0][0] = 2 * rng.randint(1, 6)
    polarization = [1] + [0] * (n - 1)
    return IntersectionLattice.build(gram, polarization)


def _random_invariants(rng: random.Random, lat: IntersectionLattice) -> SheafInvariants:
    return SheafInvariants.build(
        rng.randint(1, 6), [rng.randint(-6, 6) for _ in range(lat.rank)], rng.randint(-30, 30)
    )


class TestLattice:
    def test_rank_one(self):
        lat = IntersectionLattice.rank_one(4)
        assert lat.polarization_square == 4
        assert lat.pair([7], [1]) == 28

    @pytest.mark.parametrize(
        "gram, polarization",
        [
            ([[3]], [1]),
            ([[2, 1], [0, 2]], [1, 0]),
            ([[-2]], [1]),
            ([[2, 0], [0, -2]], [0, 1]),
            ([[2, 0]], [1, 0]),
            ([[2]], [1, 0]),
        ],
    )
    def test_invalid_lattices(self, gram, polarization):
        with pytest.raises(LatticeError):
            IntersectionLattice.build(gram, polarization)

    def test_rank_must_be_positive(self):
        with pytest.raises(InvariantsError):
            SheafInvariants.build(0, [1], 0)

    def test_vector_length_checked(self, quartic_lattice):
        with pytest.raises(InvariantsError):
            quartic_lattice.pair([1, 2], [1])


class TestToyExample:
    def test_euler_characteristic(self):
        lat, inv = toy_example()
        assert c1_squared(inv, lat) == 4
        assert euler_characteristic(inv, lat) == 4
        assert spl_dim(inv, lat) == 0

    def test_syzygy_bundle_invariants(self):
        lat, inv = toy_example()
        syz = syzygy_transform(inv, lat, 3)
        assert syz == SheafInvariants(2, (-1,), 4)
        assert spl_dim(syz, lat) == 6

    def test_doubling_report(self):
        lat, inv = toy_example()
        report = doubling_check_syzygy(inv, lat, 3)
        assert report.to_dict() == {"base_dim": 0, "fiber_dim": 3, "target_dim": 6, "holds": True}

    def test_ext1_via_dual_sequence(self):
        lat, inv = toy_example()
        assert spl_dim_via_syzygy_sequence(inv, lat, 3) == 6

    def test_lagrangian_report(self):
        lat, inv = toy_example()
        report = lagrangian_report_line_bundle(inv, lat, 3)
        assert report.base_dim == 0
        assert report.target_dim == 2 * report.fiber_dim
        assert report.holds

    def test_w_range(self):
        lat, inv = toy_example()
        assert syzygy_w_range(inv, lat) == (3, 4)
        with pytest.raises(WNotInRange) as info:
            syzygy_transform(inv, lat, 5)
        assert info.value.details["valid"] == [3, 4]
        with pytest.raises(WNotInRange):
            syzygy_fiber_dim(inv, lat, 2, formal=True)

    def test_formal_lifts_upper_bound(self):
        lat, inv = toy_example()
        report = doubling_check_syzygy(inv, lat, 6, formal=True)
        assert report.fiber_dim == 6 * (4 - 6)
        assert report.holds


class TestDegreeSevenQuartic:
    def test_slope_of_syzygy_bundle(self):
        lat, inv = hyperplane_line_bundle(4, 7)
        syz = syzygy_transform(inv, lat, 5)
        assert syz.rank == 4
        assert slope(syz, lat) == Fraction(-7)

    def test_doubling(self):
        lat, inv = hyperplane_line_bundle(4, 7)
        report = doubling_check_syzygy(inv, lat, 5)
        assert (report.base_dim, report.fiber_dim, report.target_dim) == (0, 475, 950)


class TestRationalCurves:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_extension_example(self, n):
        lat, inv = rational_curve_lattice(n)
        assert c1_squared(inv, lat) == -4 * n * n
        assert extension_u(inv, lat) == 2 * n * n - 2
        report = doubling_check_extension(inv, lat, 1)
        assert report.base_dim == 0
        assert report.fiber_dim == 2 * n * n - 3
        assert report.target_dim == 4 * n * n - 6
        assert report.holds

    def test_extension_keeps_c1(self):
        lat, inv = rational_curve_lattice(2)
        ext = extension_transform(inv, lat, 3)
        assert ext.c1 == inv.c1 and ext.c2 == inv.c2 and ext.rank == 4

    def test_v_range(self):
        lat, inv = rational_curve_lattice(2)
        with pytest.raises(VNotInRange):
            extension_fiber_dim(inv, lat, 7)
        with pytest.raises(VNotInRange):
            extension_fiber_dim(inv, lat, 0, formal=True)
        assert extension_fiber_dim(inv, lat, 7, formal=True) == 7 * (6 - 7)

    def test_n_must_be_positive(self):
        with pytest.raises(InvariantsError):
            rational_curve_lattice(0)


class TestTwistAndDual:
    def test_riemann_roch_under_twist(self):
        rng = random.Random(7)
        for _ in range(200):
            lat = _random_lattice(rng)
            inv = _random_invariants(rng, lat)
            D = [rng.randint(-3, 3) for _ in range(lat.rank)]
            twisted = twist_invariants(inv, lat, D)
            expected = (
                euler_characteristic(inv, lat)
                + lat.pair(inv.c1, D)
                + Fraction(inv.rank * lat.square(D), 2)
            )
            assert euler_characteristic(twisted, lat) == expected
            assert spl_dim(twisted, lat) == spl_dim(inv, lat)

    def test_serre_duality(self):
        rng = random.Random(11)
        for _ in range(200):
            lat = _random_lattice(rng)
            inv = _random_invariants(rng, lat)
            assert euler_characteristic(dual_invariants(inv), lat) == euler_characteristic(inv, lat)

    def test_transforms_move_chi_and_c1(self):
        rng = random.Random(13)
        for _ in range(300):
            lat = _random_lattice(rng)
            inv = _random_invariants(rng, lat)
            chi = euler_characteristic(inv, lat)
            w = inv.rank + 2 + rng.randint(0, 10)
            v = rng.randint(1, 10)
            syz = syzygy_transform(inv, lat, w, formal=True)
            ext = extension_transform(inv, lat, v, formal=True)
            assert euler_characteristic(syz, lat) == 2 * w - chi
            assert euler_characteristic(ext, lat) == 2 * v + chi
            assert syz.c1 == tuple(-c for c in inv.c1)
            assert ext.c1 == inv.c1

    def test_sequence_route_needs_line_bundle(self):
        lat = IntersectionLattice.rank_one(4)
        with pytest.raises(UnsupportedRank):
            spl_dim_via_syzygy_sequence(SheafInvariants(2, (1,), 0), lat, 5, formal=True)


def test_spl_dim_cross_check_raises(monkeypatch):
    lat, inv = toy_example()
    monkeypatch.setattr(invariants_module, "chi_end", lambda inv, lat: 0)
    with pytest.raises(InternalInconsistency):
        invariants_module.spl_dim(inv, lat)


def test_spl_dim_matches_chi_end():
    rng = random.Random(3)
    for _ in range(300):
        lat = _random_lattice(rng)
        inv = _random_invariants(rng, lat)
        assert spl_dim(inv, lat) == 2 - chi_end(inv, lat)


def test_doubling_identities_random():
    rng = random.Random(20240101)
    checked = 0
    for _ in range(1000):
        lat = _random_lattice(rng)
        inv = _random_invariants(rng, lat)
        w = inv.rank + 2 + rng.randint(0, 15)
        v = rng.randint(1, 15)
        assert doubling_check_syzygy(inv, lat, w, formal=True).holds
        assert doubling_check_extension(inv, lat, v, formal=True).holds
        low, high = syzygy_w_range(inv, lat)
        if low <= high:
            assert doubling_check_syzygy(inv, lat, rng.randint(low, high)).holds
            checked += 1
        if extension_u(inv, lat) >= 1:
            assert doubling_check_extension(inv, lat, rng.randint(1, extension_u(inv, lat))).holds
            checked += 1
    assert checked > 100


def test_doubling_identities_symbolic():
    r, c1sq, c2, w, v = sympy.symbols("r c1sq c2 w v")

    def chi(rank, square, second):
        return 2 * rank + square / 2 - second

    def spl(rank, square, second):
        return square - 2 * rank * chi(rank, square, second) + 2 * rank**2 + 2

    base = spl(r, c1sq, c2)
    chi_f = chi(r, c1sq, c2)
    syzygy_target = spl(w - r, c1sq, c1sq - c2)
    extension_target = spl(r + v, c1sq, c2)
    assert sympy.expand(syzygy_target - base - 2 * w * (chi_f - w)) == 0
    assert sympy.expand(extension_target - base - 2 * v * (-chi_f - v)) == 0
    closed_form = -2 * r**2 + (1 - r) * c1sq + 2 * r * c2 + 2
    assert sympy.expand(closed_form - base) == 0
