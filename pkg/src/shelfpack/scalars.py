"""Numeric backends for all geometry.

Every quantity in this package is a ``Scalar``: either an exact rational
(:class:`fractions.Fraction`) or a 64-bit binary float.  The two backends
are never mixed inside one computation; entry points tag their data with a
:class:`Backend` and :func:`unified_backend` rejects mixtures up front.
Plain ``int`` values are accepted wherever a scalar is expected and are
promoted to the exact backend.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import BackendMismatchError, DomainError, ParseError

Scalar = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"^[+-]?\d+/\d+$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


class Backend(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def coerce(value: Scalar | int) -> Scalar:
    """Normalize a raw number: ints become exact rationals, floats must be finite."""
    if isinstance(value, bool):
        raise DomainError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"float scalar must be finite, got {value!r}")
        return value
    raise DomainError(f"unsupported scalar type {type(value).__name__}")


def backend_of(value: Scalar) -> Backend:
    if isinstance(value, Fraction):
        return Backend.EXACT
    if isinstance(value, float):
        return Backend.FLOAT
    raise DomainError(f"unsupported scalar type {type(value).__name__}")


def unified_backend(values: Iterable[Scalar]) -> Backend:
    """Return the common backend of ``values``, rejecting mixtures."""
    backend: Backend | None = None
    for value in values:
        b = backend_of(value)
        if backend is None:
            backend = b
        elif b is not backend:
            raise BackendMismatchError(
                "exact and float scalars mixed in one computation"
            )
    if backend is None:
        raise DomainError("no scalars given")
    return backend


def zero(backend: Backend) -> Scalar:
    return Fraction(0) if backend is Backend.EXACT else 0.0


def parse_scalar(text: str) -> Scalar:
    """Parse a size/coordinate literal: ``p/q`` is exact, a decimal is float."""
    if _RATIONAL_RE.match(text):
        num, _, den = text.partition("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in rational literal {text!r}")
        return Fraction(int(num), int(den))
    if _DECIMAL_RE.match(text):
        return float(text)
    raise ParseError(f"not a rational or decimal literal: {text!r}")


def is_rational_literal(text: str) -> bool:
    return bool(_RATIONAL_RE.match(text))


def format_scalar(value: Scalar) -> str:
    """Round-trippable file form: exact values always keep the slash."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return repr(value)


def display_scalar(value: Scalar) -> str:
    """Human form for summaries: integral rationals print without the slash."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return repr(value)
