"""
Exception hierarchy for k3-syzygy

Every error carries the exit code the CLI uses for it and a JSON-friendly
description, so the command layer can report failures on stderr in the same
machine-readable form it uses for results.
"""

from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4
EXIT_UNSTABLE = 10
EXIT_NOT_COHOMOLOGICALLY_STABLE = 11


class K3SyzygyError(Exception):
    """Base class for all errors raised by the toolkit."""

    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        payload.update(self.details)
        return payload


# --- malformed input (exit 2) ---

class InputError(K3SyzygyError):
    exit_code = EXIT_INPUT


class FormSyntaxError(InputError):
    """A form string does not match the polynomial grammar."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}", text=text, position=position)
        self.text = text
        self.position = position


class InhomogeneousError(InputError):
    pass


class UnknownVariable(InputError):
    pass


class ZeroFormError(InputError):
    pass


class LatticeError(InputError):
    pass


class InvariantsError(InputError):
    pass


class FormSpaceError(InputError):
    pass


class UnsupportedRank(InputError):
    pass


class PrimeError(InputError):
    """The chosen prime is not prime or divides a denominator."""


# --- violated preconditions (exit 3) ---

class PreconditionError(K3SyzygyError):
    exit_code = EXIT_PRECONDITION


class WNotInRange(PreconditionError):
    def __init__(self, w: int, low: int, high: int):
        super().__init__(
            f"w={w} outside the valid interval [{low}, {high}]", w=w, valid=[low, high]
        )


class VNotInRange(PreconditionError):
    def __init__(self, v: int, low: int, high: int):
        super().__init__(
            f"v={v} outside the valid interval [{low}, {high}]", v=v, valid=[low, high]
        )


class TwistOutOfRange(PreconditionError):
    pass


# --- bugs (exit 4) ---

class InternalInconsistency(K3SyzygyError):
    """Two independent routes to the same number disagree."""

    def __init__(self, message: str, expected: Optional[Any] = None, got: Optional[Any] = None):
        super().__init__(message, expected=expected, got=got)
