from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, List, Optional

from django.conf import settings


def decimal_string(value: Fraction, digits: Optional[int] = None) -> str:
    """Render a rational as a decimal string with the configured precision."""
    digits = digits or settings.BILLIARDS_DECIMAL_DIGITS
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    text = format(quotient, 'f')
    if '.' in text:
        text = text.rstrip('0').rstrip('.')
    return '0' if text in ('-0', '') else text


def rational_string(value: Fraction) -> str:
    """Render a rational as 'p/q', or 'p' when integral."""
    return str(Fraction(value))


def rational_strings(values: Iterable[Fraction]) -> List[str]:
    return [rational_string(v) for v in values]


def decimal_strings(values: Iterable[Fraction]) -> List[str]:
    return [decimal_string(v) for v in values]


def parse_rationals(text: str) -> List[Fraction]:
    """Parse a comma-separated list such as '0,1/2,1/2'."""
    return [Fraction(part.strip()) for part in text.split(',') if part.strip()]
