"""Small rendering helpers shared by the report types and the CLI."""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction


def rational(value: Fraction) -> dict:
    """JSON form of an exact rational: numerator, denominator, decimal."""
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": str(float(value)),
    }


def percent(value: Fraction) -> str:
    """Integer percent with half-up rounding, e.g. Fraction(48, 50) -> '96%'."""
    scaled = Decimal(value.numerator * 100) / Decimal(value.denominator)
    return f"{scaled.quantize(Decimal('1'), rounding=ROUND_HALF_UP)}%"


def rows_1based(rows) -> list[int]:
    """Ascending 1-based row list for reports."""
    return [i + 1 for i in sorted(rows)]
