"""
Form parser

Grammar (whitespace is insignificant):

    form    := [sign] term (sign term)*
    term    := factor ('*' factor)*
    factor  := integer ['/' integer] | variable ['^' integer]
    sign    := '+' | '-'
"""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from k3_syzygy.errors import FormSyntaxError, InhomogeneousError, UnknownVariable, ZeroFormError
from k3_syzygy.ring.forms import DEFAULT_VARIABLES, MONOMIAL_BITS, NUM_VARIABLES, Form, pack

MAX_EXPONENT = (1 << MONOMIAL_BITS) - 1

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")

Token = Tuple[str, str, int]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _FormParser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = list(variables)
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token[0] != kind:
            raise FormSyntaxError(f"expected {what}", self.text, token[2])
        return self.advance()

    def parse(self) -> List[Tuple[Tuple[int, ...], Fraction, int]]:
        terms = []
        sign = 1
        token = self.peek()
        if token[0] == "op" and token[1] in "+-":
            sign = -1 if token[1] == "-" else 1
            self.advance()
        terms.append(self.term(sign))
        while True:
            token = self.peek()
            if token[0] == "end":
                break
            if token[0] == "op" and token[1] in "+-":
                self.advance()
                terms.append(self.term(-1 if token[1] == "-" else 1))
            else:
                raise FormSyntaxError("expected '+', '-' or end of input", self.text, token[2])
        return terms

    def term(self, sign: int) -> Tuple[Tuple[int, ...], Fraction, int]:
        start = self.peek()[2]
        exponents = [0] * NUM_VARIABLES
        coefficient_box = [Fraction(sign)]
        self.factor(exponents, coefficient_box)
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.advance()
            self.factor(exponents, coefficient_box)
        return tuple(exponents), coefficient_box[0], start

    def factor(self, exponents: List[int], coefficient_box: List[Fraction]):
        token = self.peek()
        if token[0] == "int":
            self.advance()
            numerator = int(token[1])
            denominator = 1
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.advance()
                den_token = self.expect("int", "an integer denominator")
                denominator = int(den_token[1])
                if denominator == 0:
                    raise FormSyntaxError("zero denominator", self.text, den_token[2])
            coefficient_box[0] *= Fraction(numerator, denominator)
        elif token[0] == "name":
            self.advance()
            if token[1] not in self.variables:
                raise UnknownVariable(
                    f"unknown variable {token[1]!r}", variable=token[1], position=token[2]
                )
            power, position = 1, token[2]
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.advance()
                exp_token = self.expect("int", "an integer exponent")
                power, position = int(exp_token[1]), exp_token[2]
            index = self.variables.index(token[1])
            if exponents[index] + power > MAX_EXPONENT:
                raise FormSyntaxError(f"exponent exceeds {MAX_EXPONENT}", self.text, position)
            exponents[index] += power
        else:
            raise FormSyntaxError("expected a number or a variable", self.text, token[2])


def parse_form(text: str, variables: Optional[Sequence[str]] = None) -> Form:
    """Parse a homogeneous form. The zero form is rejected."""
    variables = list(variables or DEFAULT_VARIABLES)
    if len(variables) != NUM_VARIABLES or len(set(variables)) != NUM_VARIABLES:
        raise UnknownVariable(f"exactly {NUM_VARIABLES} distinct variable names are required")
    terms = _FormParser(text, variables).parse()
    degree: Optional[int] = None
    coefficients: Dict[int, Fraction] = {}
    for exponents, coefficient, position in terms:
        if coefficient == 0:
            continue
        term_degree = sum(exponents)
        if degree is None:
            degree = term_degree
        elif term_degree != degree:
            raise InhomogeneousError(
                f"term of degree {term_degree} in a form of degree {degree}",
                text=text,
                position=position,
            )
        key = pack(exponents)
        coefficients[key] = coefficients.get(key, 0) + coefficient
    form = Form.from_packed(degree or 0, coefficients)
    if form.is_zero():
        raise ZeroFormError("the zero form is not allowed", text=text)
    return form
