"""
Lattice invariants module for k3-syzygy
"""

from k3_syzygy.lattice.examples import hyperplane_line_bundle, rational_curve_lattice, toy_example
from k3_syzygy.lattice.invariants import (
    DoublingReport,
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
    lagrangian_report_line_bundle,
    slope,
    spl_dim,
    spl_dim_via_syzygy_sequence,
    syzygy_fiber_dim,
    syzygy_transform,
    syzygy_w_range,
    twist_invariants,
)

__all__ = [
    "DoublingReport",
    "IntersectionLattice",
    "SheafInvariants",
    "c1_squared",
    "chi_end",
    "doubling_check_extension",
    "doubling_check_syzygy",
    "dual_invariants",
    "euler_characteristic",
    "extension_fiber_dim",
    "extension_transform",
    "extension_u",
    "hyperplane_line_bundle",
    "lagrangian_report_line_bundle",
    "rational_curve_lattice",
    "slope",
    "spl_dim",
    "spl_dim_via_syzygy_sequence",
    "syzygy_fiber_dim",
    "syzygy_transform",
    "syzygy_w_range",
    "toy_example",
    "twist_invariants",
]
