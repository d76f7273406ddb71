"""
Base-point certificate

If the forms of W generate R_D for some D, they have no common zero on X and the
evaluation map W (x) O_X -> O_X(a) is onto. Surjectivity in degree D persists in
every higher degree, so the scan stops at the first certified D.

If W has no base point, three general members of W and f form a regular sequence, and
their ideal contains S_D for D >= 3a + d - 3. Scanning at least that far makes the
certificate complete for base-point-free W.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from k3_syzygy.koszul.complex import FormSpace
from k3_syzygy.linalg import SparseMatrix, fast_rank
from k3_syzygy.ring import GradedHypersurfaceRing, graded_dim, multiplication_matrix
from k3_syzygy.settings import DEFAULT_PRIME

CERTIFIED = "Certified"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class BasepointResult:
    status: str
    degree: Optional[int]
    max_degree: int

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status, "degree": self.degree, "max_degree": self.max_degree}


def generation_matrix(ring: GradedHypersurfaceRing, W: FormSpace, D: int) -> SparseMatrix:
    """[mult(g_1) | ... | mult(g_w)] from (R_{D-a})^w to R_D."""
    columns = []
    for g in W.forms:
        columns.extend(multiplication_matrix(ring, g, D - W.degree).columns)
    return SparseMatrix.from_columns(graded_dim(ring, D), columns)


def default_max_degree(ring: GradedHypersurfaceRing, W: FormSpace) -> int:
    return max(W.w * W.degree, 3 * W.degree + ring.degree - 3)


def basepoint_check(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    max_degree: Optional[int] = None,
    prime: Optional[int] = DEFAULT_PRIME,
) -> BasepointResult:
    """
    Certified at the least D <= max_degree where W generates R_D, else Undetermined.
    A full modular rank is a full rational rank, so a prime is enough to certify.
    """
    logger = logging.getLogger("koszul")
    if max_degree is None:
        max_degree = default_max_degree(ring, W)
    for D in range(W.degree, max_degree + 1):
        target = graded_dim(ring, D)
        if W.w * graded_dim(ring, D - W.degree) < target:
            continue
        matrix = generation_matrix(ring, W, D)
        rank = fast_rank(matrix, prime)
        logger.debug(f"Base-point scan D={D}: rank {rank} of {target}")
        if rank == target:
            logger.info(f"W generates R_{D}: base-point free")
            return BasepointResult(CERTIFIED, D, max_degree)
    logger.info(f"No generation certificate up to degree {max_degree}")
    return BasepointResult(UNDETERMINED, None, max_degree)
