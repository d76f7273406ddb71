"""
Koszul module for k3-syzygy
"""

from k3_syzygy.koszul.basepoints import (
    CERTIFIED,
    UNDETERMINED,
    BasepointResult,
    basepoint_check,
    default_max_degree,
    generation_matrix,
)
from k3_syzygy.koszul.complex import (
    FormSpace,
    KoszulMap,
    h0_s_dual_linebundle,
    h0_wedge_syzygy,
    h0_wedge_syzygy_result,
    is_complex,
    koszul_matrix,
    koszul_shapes,
    require_independent_in_ring,
)

__all__ = [
    "CERTIFIED",
    "UNDETERMINED",
    "BasepointResult",
    "FormSpace",
    "KoszulMap",
    "basepoint_check",
    "default_max_degree",
    "generation_matrix",
    "h0_s_dual_linebundle",
    "h0_wedge_syzygy",
    "h0_wedge_syzygy_result",
    "is_complex",
    "koszul_matrix",
    "koszul_shapes",
    "require_independent_in_ring",
]
