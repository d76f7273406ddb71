"""
Lattices and invariants of the worked examples
"""

from typing import Tuple

from k3_syzygy.errors import InvariantsError
from k3_syzygy.lattice.invariants import IntersectionLattice, SheafInvariants


def hyperplane_line_bundle(degree: int, twist: int = 1) -> Tuple[IntersectionLattice, SheafInvariants]:
    """O_X(twist) on a degree-d surface with Picard lattice <L>, L^2 = d."""
    return IntersectionLattice.rank_one(degree), SheafInvariants(rank=1, c1=(twist,), c2=0)


def toy_example() -> Tuple[IntersectionLattice, SheafInvariants]:
    """O_X(1) on a quartic; its w = 3 syzygy bundle has (r, c1, c2) = (2, -L, 4)."""
    return hyperplane_line_bundle(4, 1)


def rational_curve_lattice(n: int) -> Tuple[IntersectionLattice, SheafInvariants]:
    """
    L_n = O_X(nC1 - nC2) for two disjoint smooth rational curves C1, C2.

    The curves span [[-2, 0], [0, -2]]; a polarization class H with H^2 = 2 orthogonal
    to both is added so the lattice carries an ample class.
    """
    if n < 1:
        raise InvariantsError("n must be at least 1", n=n)
    lattice = IntersectionLattice.build([[2, 0, 0], [0, -2, 0], [0, 0, -2]], [1, 0, 0])
    return lattice, SheafInvariants(rank=1, c1=(0, n, -n), c2=0)
