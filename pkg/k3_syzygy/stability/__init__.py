"""
Stability checker module for k3-syzygy
"""

from k3_syzygy.stability.checker import (
    BASEPOINT_UNDETERMINED,
    COHOMOLOGICALLY_STABLE,
    NOT_COHOMOLOGICALLY_STABLE,
    PICARD_ASSUMPTION_NOTE,
    STRICTLY_SEMISTABLE_CANDIDATE,
    UNSTABLE,
    DestabilizerReport,
    StabilityCertificate,
    check_cohomological_stability,
    destabilizing_search,
    rational_to_dict,
)
from k3_syzygy.stability.experiment import ExperimentReport, search_stable_subspace
from k3_syzygy.stability.schedule import TwistEntry, TwistSchedule, twist_schedule

__all__ = [
    "BASEPOINT_UNDETERMINED",
    "COHOMOLOGICALLY_STABLE",
    "NOT_COHOMOLOGICALLY_STABLE",
    "PICARD_ASSUMPTION_NOTE",
    "STRICTLY_SEMISTABLE_CANDIDATE",
    "UNSTABLE",
    "DestabilizerReport",
    "ExperimentReport",
    "StabilityCertificate",
    "TwistEntry",
    "TwistSchedule",
    "check_cohomological_stability",
    "destabilizing_search",
    "rational_to_dict",
    "search_stable_subspace",
    "twist_schedule",
]
