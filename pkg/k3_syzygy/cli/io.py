"""
JSON input and output

Inputs are UTF-8 JSON objects; outputs are written with sorted keys so identical
computations print identical bytes. Non-integral rationals are encoded as
{"num": p, "den": q}.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from k3_syzygy.errors import FormSpaceError, InputError, InvariantsError, UnsupportedRank
from k3_syzygy.koszul import FormSpace
from k3_syzygy.lattice import IntersectionLattice, SheafInvariants
from k3_syzygy.linalg import SparseMatrix
from k3_syzygy.ring import DEFAULT_VARIABLES, GradedHypersurfaceRing, parse_form


def read_json(path: str) -> Dict[str, Any]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"input file not found: {path}", path=path)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg}", path=path, line=exc.lineno)
    if not isinstance(payload, dict):
        raise InputError(f"{path} must contain a JSON object", path=path)
    return payload


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def encode_rational(value: Fraction) -> Any:
    """Integers stay integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return {"num": value.numerator, "den": value.denominator}


def _integer(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvariantsError(f"{name} must be an integer, got {value!r}")
    return value


def _integer_list(value: Any, name: str) -> List[int]:
    if not isinstance(value, list):
        raise InvariantsError(f"{name} must be a list of integers")
    return [_integer(x, name) for x in value]


def _require(payload: Dict[str, Any], key: str, error=InvariantsError) -> Any:
    if key not in payload:
        raise error(f"missing key {key!r}", key=key)
    return payload[key]


def load_invariants(payload: Dict[str, Any]) -> Tuple[IntersectionLattice, SheafInvariants]:
    """{"gram": [[4]], "polarization": [1], "rank": 1, "c1": [7], "c2": 0}"""
    gram = _require(payload, "gram")
    if not isinstance(gram, list) or not gram:
        raise InvariantsError("gram must be a non-empty list of rows")
    lattice = IntersectionLattice.build(
        [_integer_list(row, "gram") for row in gram],
        _integer_list(_require(payload, "polarization"), "polarization"),
    )
    c1 = _integer_list(_require(payload, "c1"), "c1")
    if len(c1) != lattice.rank:
        raise InvariantsError(f"c1 has length {len(c1)}, lattice has rank {lattice.rank}")
    invariants = SheafInvariants.build(
        _integer(_require(payload, "rank"), "rank"), c1, _integer(_require(payload, "c2"), "c2")
    )
    return lattice, invariants


def load_surface(payload: Dict[str, Any]) -> GradedHypersurfaceRing:
    """{"variables": ["x","y","z","t"], "hypersurface": "x^4+y^4+z^4+t^4"}"""
    variables = payload.get("variables", list(DEFAULT_VARIABLES))
    if (
        not isinstance(variables, list)
        or len(variables) != len(DEFAULT_VARIABLES)
        or not all(isinstance(v, str) for v in variables)
    ):
        raise InputError(
            f"variables must be a list of {len(DEFAULT_VARIABLES)} names", variables=variables
        )
    text = _require(payload, "hypersurface", InputError)
    if not isinstance(text, str):
        raise InputError("hypersurface must be a string")
    return GradedHypersurfaceRing(parse_form(text, variables), variables)


def load_form_space(payload: Dict[str, Any], variables: Sequence[str]) -> FormSpace:
    """{"degree": 7, "forms": ["x^7", ...]}; an optional "rank" of F must be 1."""
    rank = payload.get("rank", 1)
    if rank != 1:
        raise UnsupportedRank("only line bundles F = O_X(a) are supported", rank=rank)
    degree = _require(payload, "degree", FormSpaceError)
    texts = _require(payload, "forms", FormSpaceError)
    if not isinstance(texts, list) or not all(isinstance(s, str) for s in texts):
        raise FormSpaceError("forms must be a list of strings")
    forms = [parse_form(text, variables) for text in texts]
    for i, g in enumerate(forms):
        if g.degree != degree:
            raise FormSpaceError(f"form {i} has degree {g.degree}, declared {degree}", index=i)
    return FormSpace.from_forms(forms)


def export_matrix(matrix: SparseMatrix, prime: Optional[int] = None) -> Dict[str, Any]:
    """Dense rows; with a prime the entries are reduced to 0..p-1."""
    rows = [[0] * matrix.ncols for _ in range(matrix.nrows)]
    for j, column in enumerate(matrix.columns):
        for i, value in column.items():
            if prime is None:
                rows[i][j] = encode_rational(value)
            else:
                value = Fraction(value)
                rows[i][j] = value.numerator * pow(value.denominator, -1, prime) % prime
    return {"shape": [matrix.nrows, matrix.ncols], "prime": prime, "rows": rows}


def write_json(path: str, payload: Any):
    Path(path).write_text(dump_json(payload), encoding="utf-8")
