"""
Cohomological stability checker

Decides the sufficient criterion for syzygy bundles S = ker(W (x) O_X -> O_X(a)) on a
hypersurface with the hyperplane polarization: all scheduled H^0(wedge^q S(t)) vanish.
When some kernel survives, a search for sections of S(m) looks for a destabilizing
line subbundle O_X(-m).
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from k3_syzygy.koszul import (
    BasepointResult,
    FormSpace,
    basepoint_check,
    h0_wedge_syzygy_result,
    require_independent_in_ring,
)
from k3_syzygy.linalg import RankResult
from k3_syzygy.ring import GradedHypersurfaceRing
from k3_syzygy.settings import DEFAULT_PRIME, DEFAULT_WORKERS
from k3_syzygy.stability.schedule import TwistSchedule, twist_schedule

COHOMOLOGICALLY_STABLE = "CohomologicallyStable"
NOT_COHOMOLOGICALLY_STABLE = "NotCohomologicallyStable"
UNSTABLE = "Unstable"
STRICTLY_SEMISTABLE_CANDIDATE = "StrictlySemistableCandidate"

BASEPOINT_UNDETERMINED = "BasepointUndetermined"

PICARD_ASSUMPTION_NOTE = (
    "Kernel vanishings hold for the given equation unconditionally. The L-stability "
    "conclusion assumes Picard rank 1, i.e. every line bundle on X is a multiple of "
    "the hyperplane class O_X(1). Smoothness of the equation is not checked."
)


def rational_to_dict(value: Fraction) -> Dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


@dataclass(frozen=True)
class DestabilizerReport:
    m: int
    h0: int
    sub_slope: Fraction
    mu: Fraction

    @property
    def verdict(self) -> str:
        return UNSTABLE if self.sub_slope > self.mu else STRICTLY_SEMISTABLE_CANDIDATE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "h0": self.h0,
            "sub_slope": rational_to_dict(self.sub_slope),
            "mu": rational_to_dict(self.mu),
            "verdict": self.verdict,
        }


@dataclass
class StabilityCertificate:
    surface: Dict[str, Any]
    form_space: Dict[str, Any]
    mu: Fraction
    schedule: TwistSchedule
    results: List[RankResult]
    verdict: Optional[str]
    basepoints: BasepointResult
    destabilizer: Optional[DestabilizerReport] = None
    picard_assumption_note: str = PICARD_ASSUMPTION_NOTE
    warnings: List[str] = field(default_factory=list)
    provisional_verdict: Optional[str] = None

    @property
    def kernel_dims(self) -> List[int]:
        return [r.kernel_dim for r in self.results]

    @property
    def backend_provenance(self) -> List[str]:
        return [r.provenance for r in self.results]

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        checks = []
        for (q, twist), result in zip(self.schedule.checks(), self.results):
            entry = {"q": q, "twist": twist}
            entry.update(result.to_dict(timings))
            checks.append(entry)
        return {
            "surface": self.surface,
            "form_space": self.form_space,
            "mu": rational_to_dict(self.mu),
            "schedule": self.schedule.to_dict(),
            "kernel_dims": self.kernel_dims,
            "backend_provenance": self.backend_provenance,
            "checks": checks,
            "verdict": self.verdict,
            "provisional_verdict": self.provisional_verdict,
            "basepoints": self.basepoints.to_dict(),
            "destabilizer": self.destabilizer.to_dict() if self.destabilizer else None,
            "picard_assumption_note": self.picard_assumption_note,
            "warnings": list(self.warnings),
        }


def destabilizing_search(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    prime: Optional[int] = DEFAULT_PRIME,
    exact: bool = False,
) -> Optional[DestabilizerReport]:
    """
    Looks for the smallest m with H^0(S(m)) != 0 among 1 <= m <= a/(w-1); a section gives
    O_X(-m) inside S with slope -m*d >= mu. Finding nothing proves nothing.
    """
    logger = logging.getLogger("stability_checker")
    d = ring.degree
    mu = Fraction(-W.degree * d, W.w - 1)
    for m in range(1, W.degree // (W.w - 1) + 1):
        # sections are confirmed over Q by the backend before being reported
        h0 = h0_wedge_syzygy_result(ring, W, 1, m, prime, exact).kernel_dim
        if h0 > 0:
            report = DestabilizerReport(m=m, h0=h0, sub_slope=Fraction(-m * d), mu=mu)
            logger.info(f"Destabilizing section found: O_X(-{m}) in S, slope {-m * d} vs mu {mu}")
            return report
    return None


def _run_checks(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    schedule: TwistSchedule,
    prime: Optional[int],
    exact: bool,
    workers: int,
) -> List[RankResult]:
    checks = schedule.checks()
    # build the graded pieces up front so worker threads only read the cache
    for _, twist in checks:
        ring.piece(twist)
        ring.piece(twist + W.degree)
    if workers <= 1 or len(checks) <= 1:
        return [h0_wedge_syzygy_result(ring, W, q, t, prime, exact) for q, t in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(h0_wedge_syzygy_result, ring, W, q, t, prime, exact) for q, t in checks]
        return [f.result() for f in futures]


def check_cohomological_stability(
    ring: GradedHypersurfaceRing,
    W: FormSpace,
    prime: Optional[int] = DEFAULT_PRIME,
    exact: bool = False,
    max_degree: Optional[int] = None,
    workers: int = DEFAULT_WORKERS,
) -> StabilityCertificate:
    logger = logging.getLogger("stability_checker")
    require_independent_in_ring(ring, W)
    start = time.perf_counter()
    basepoints = basepoint_check(ring, W, max_degree, prime)
    schedule = twist_schedule(W.degree, W.w, ring.degree)
    logger.info(f"Twist schedule for a={W.degree}, w={W.w}, d={ring.degree}: {schedule.checks()}")
    results = _run_checks(ring, W, schedule, prime, exact, workers)

    destabilizer = None
    if all(r.kernel_dim == 0 for r in results):
        verdict = COHOMOLOGICALLY_STABLE
    else:
        destabilizer = destabilizing_search(ring, W, prime, exact)
        verdict = destabilizer.verdict if destabilizer else NOT_COHOMOLOGICALLY_STABLE

    certificate = StabilityCertificate(
        surface=ring.describe(),
        form_space=W.describe(ring.variable_names),
        mu=schedule.mu,
        schedule=schedule,
        results=results,
        verdict=verdict,
        basepoints=basepoints,
        destabilizer=destabilizer,
    )
    if not basepoints.certified:
        certificate.warnings.append(BASEPOINT_UNDETERMINED)
        certificate.provisional_verdict = verdict
        certificate.verdict = None
        logger.warning("Base-point freeness not certified; verdict withheld")
    logger.info(f"Verdict {certificate.verdict} in {time.perf_counter() - start:.2f}s")
    return certificate
