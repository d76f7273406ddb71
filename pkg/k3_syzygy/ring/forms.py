"""
Homogeneous forms in four variables

A monomial x0^a x1^b x2^c x3^d is packed into one integer with 16 bits per
exponent. Packed keys multiply by addition, and within one degree the numeric
order of keys is the lexicographic order of exponent vectors.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from k3_syzygy.errors import InhomogeneousError

NUM_VARIABLES = 4
DEFAULT_VARIABLES = ("x", "y", "z", "t")
MONOMIAL_BITS = 16
_MASK = (1 << MONOMIAL_BITS) - 1

Exponents = Tuple[int, ...]


def pack(exponents: Sequence[int]) -> int:
    key = 0
    for e in exponents:
        key = (key << MONOMIAL_BITS) | e
    return key


def unpack(key: int) -> Exponents:
    out = []
    for _ in range(NUM_VARIABLES):
        out.append(key & _MASK)
        key >>= MONOMIAL_BITS
    return tuple(reversed(out))


def _compositions(total: int, parts: int) -> Iterator[Exponents]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials_of_degree(degree: int) -> Tuple[int, ...]:
    """Packed monomials of the given degree in graded-lex order (x0^d first, x3^d last)."""
    if degree < 0:
        return ()
    return tuple(pack(e) for e in _compositions(degree, NUM_VARIABLES))


def _coerce(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Form:
    """A homogeneous polynomial with exact rational coefficients and no zero terms."""

    degree: int
    terms: Tuple[Tuple[int, Fraction], ...]

    @classmethod
    def from_packed(cls, degree: int, coefficients: Dict[int, Fraction]) -> "Form":
        for key in coefficients:
            if sum(unpack(key)) != degree:
                raise InhomogeneousError(
                    f"monomial {unpack(key)} does not have degree {degree}", degree=degree
                )
        items = tuple(
            sorted(
                ((k, _coerce(c)) for k, c in coefficients.items() if c != 0),
                key=lambda kc: -kc[0],
            )
        )
        return cls(degree, items)

    @classmethod
    def from_exponents(cls, degree: int, coefficients: Dict[Exponents, object]) -> "Form":
        return cls.from_packed(degree, {pack(e): _coerce(c) for e, c in coefficients.items()})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient=1) -> "Form":
        return cls.from_exponents(sum(exponents), {tuple(exponents): coefficient})

    @classmethod
    def one(cls) -> "Form":
        return cls.monomial((0,) * NUM_VARIABLES)

    @property
    def coefficients(self) -> Dict[Exponents, Fraction]:
        return {unpack(k): c for k, c in self.terms}

    @property
    def packed(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "Form") -> "Form":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise InhomogeneousError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return Form.from_packed(self.degree, acc)

    def __neg__(self) -> "Form":
        return Form(self.degree, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other) -> "Form":
        if not isinstance(other, Form):
            scalar = _coerce(other)
            return Form.from_packed(self.degree, {k: c * scalar for k, c in self.terms})
        acc: Dict[int, Fraction] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                key = k1 + k2
                acc[key] = acc.get(key, 0) + c1 * c2
        return Form.from_packed(self.degree + other.degree, acc)

    __rmul__ = __mul__


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(exponents: Exponents, variables: Sequence[str]) -> str:
    factors = []
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def form_to_text(form: Form, variables: Sequence[str] = DEFAULT_VARIABLES) -> str:
    """Canonical text for a form; parse_form(form_to_text(f)) == f."""
    if form.is_zero():
        return "0"
    pieces: List[str] = []
    for i, (key, c) in enumerate(form.terms):
        monomial = _format_monomial(unpack(key), variables)
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"
        if i == 0:
            pieces.append(f"-{body}" if sign == "-" else body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def monomial_forms(degree: int) -> List[Form]:
    return [Form.from_packed(degree, {k: Fraction(1)}) for k in monomials_of_degree(degree)]
