"""
Experiment mode: sample random monomial form spaces and tally stability verdicts
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from k3_syzygy.errors import FormSpaceError
from k3_syzygy.koszul import FormSpace
from k3_syzygy.ring import GradedHypersurfaceRing, form_to_text, monomial_forms
from k3_syzygy.settings import DEFAULT_PRIME, DEFAULT_WORKERS
from k3_syzygy.stability.checker import (
    COHOMOLOGICALLY_STABLE,
    StabilityCertificate,
    check_cohomological_stability,
)

DEPENDENT = "Dependent"
BASEPOINT_UNDETERMINED = "BasepointUndetermined"


@dataclass
class ExperimentReport:
    a: int
    w: int
    attempts: int
    trials: pd.DataFrame
    first_stable: Optional[StabilityCertificate] = None
    notes: List[str] = field(default_factory=list)

    @property
    def verdict_counts(self) -> Dict[str, int]:
        if self.trials.empty:
            return {}
        counts = self.trials["verdict"].value_counts().sort_index()
        return {str(k): int(v) for k, v in counts.items()}

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        return {
            "a": self.a,
            "w": self.w,
            "attempts": self.attempts,
            "verdict_counts": self.verdict_counts,
            "trials": self.trials.to_dict(orient="records"),
            "first_stable": self.first_stable.to_dict(timings) if self.first_stable else None,
        }


def search_stable_subspace(
    ring: GradedHypersurfaceRing,
    a: int,
    w: int,
    attempts: int,
    rng: random.Random,
    prime: Optional[int] = DEFAULT_PRIME,
    max_degree: Optional[int] = None,
    workers: int = DEFAULT_WORKERS,
    stop_at_first: bool = False,
) -> ExperimentReport:
    """
    Draws `attempts` random w-subsets of degree-a monomials and runs the stability
    checker on each base-point-free one. Reports what it finds; asserts nothing.
    """
    logger = logging.getLogger("experiment")
    pool = monomial_forms(a)
    if w < 3 or w > len(pool):
        raise FormSpaceError(f"w must lie in [3, {len(pool)}] for degree {a}", w=w, a=a)

    records = []
    first_stable = None
    for trial in range(attempts):
        picks = sorted(rng.sample(range(len(pool)), w))
        forms = [pool[i] for i in picks]
        record = {
            "trial": trial,
            "forms": ", ".join(form_to_text(g, ring.variable_names) for g in forms),
            "verdict": None,
            "kernel_dims": None,
        }
        try:
            W = FormSpace.from_forms(forms)
            certificate = check_cohomological_stability(
                ring, W, prime=prime, max_degree=max_degree, workers=workers
            )
        except FormSpaceError:
            record["verdict"] = DEPENDENT
            records.append(record)
            continue
        record["kernel_dims"] = certificate.kernel_dims
        if not certificate.basepoints.certified:
            record["verdict"] = BASEPOINT_UNDETERMINED
        else:
            record["verdict"] = certificate.verdict
            if certificate.verdict == COHOMOLOGICALLY_STABLE and first_stable is None:
                first_stable = certificate
        records.append(record)
        logger.info(f"Trial {trial}: {record['forms']} -> {record['verdict']}")
        if stop_at_first and first_stable is not None:
            break

    trials = pd.DataFrame.from_records(records, columns=["trial", "forms", "verdict", "kernel_dims"])
    report = ExperimentReport(a=a, w=w, attempts=attempts, trials=trials, first_stable=first_stable)
    logger.info(f"Experiment a={a} w={w}: {report.verdict_counts}")
    return report
