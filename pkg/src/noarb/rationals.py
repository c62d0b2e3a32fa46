"""Exact rational scalars: parsing, formatting, and the solver's fast backend.

The public scalar type everywhere in this library is ``fractions.Fraction``
(arbitrary precision, always lowest terms, positive denominator).  The
simplex hot loop optionally runs on ``gmpy2.mpq``, which has identical
semantics and is several times faster; results are converted back to
``Fraction`` at the boundary.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import StructureError

try:
    from gmpy2 import mpq as fast_rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    fast_rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str, where: str = "") -> Fraction:
    """Parse an exact rational string ``"p"`` or ``"p/q"``.

    Decimal notation is rejected on purpose: floats are never exact and this
    library never rounds.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        ctx = f" at {where}" if where else ""
        raise StructureError(
            f"not an exact rational{ctx}: {text!r} (expected 'p' or 'p/q', no decimals)"
        )
    return Fraction(text.strip())


def format_rational(value) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``, the inverse of parse_rational."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and rational strings to Fraction; reject floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise StructureError(f"floats are not exact: {value!r}")
    try:
        return Fraction(value.numerator, value.denominator)
    except AttributeError:
        raise StructureError(f"not a rational value: {value!r}") from None
