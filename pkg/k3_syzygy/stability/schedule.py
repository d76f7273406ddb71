"""
Twist schedule for the cohomological stability criterion

For S = ker(W (x) O_X -> O_X(a)) of rank w-1 on a surface with L^2 = d, the slope is
mu = -a*d/(w-1). For each 0 < q < w-1 the line bundles to test are O_X(m) with
m*d >= q*mu; the smallest such m is m_q = ceil(q*mu/d) = -floor(q*a/(w-1)), and larger
m inject into it, so one vanishing H^0(wedge^q S(-m_q)) = 0 per q suffices.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from k3_syzygy.errors import TwistOutOfRange


@dataclass(frozen=True)
class TwistEntry:
    q: int
    m_q: int

    @property
    def twist_checked(self) -> int:
        return -self.m_q

    def to_dict(self) -> Dict[str, Any]:
        return {"q": self.q, "m_q": self.m_q, "twist_checked": self.twist_checked}


@dataclass(frozen=True)
class TwistSchedule:
    a: int
    w: int
    d: int
    entries: Tuple[TwistEntry, ...]

    @property
    def rank(self) -> int:
        return self.w - 1

    @property
    def mu(self) -> Fraction:
        return Fraction(-self.a * self.d, self.w - 1)

    def checks(self) -> List[Tuple[int, int]]:
        """(q, twist) pairs, in q order."""
        return [(e.q, e.twist_checked) for e in self.entries]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "w": self.w,
            "d": self.d,
            "rank": self.rank,
            "entries": [e.to_dict() for e in self.entries],
        }


def twist_schedule(a: int, w: int, d: int) -> TwistSchedule:
    if w < 3 or a < 1 or d < 1:
        raise TwistOutOfRange("need w >= 3, a >= 1 and d >= 1", a=a, w=w, d=d)
    entries = tuple(TwistEntry(q, -((q * a) // (w - 1))) for q in range(1, w - 1))
    return TwistSchedule(a, w, d, entries)
