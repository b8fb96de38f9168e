from fractions import Fraction
from typing import List, Sequence

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


def validate_dimension(n: int, minimum: int = 2):
    """Validate a simplex dimension."""
    if n < minimum:
        raise ValidationError(
            _('Dimension must be at least %(minimum)s, got %(n)s.'),
            code='invalid_dimension',
            params={'minimum': minimum, 'n': n},
        )


def validate_labels(labels: Sequence[int], n: int):
    """Validate that every face label lies in 0..n."""
    if not labels:
        raise ValidationError(_('Word must not be empty.'), code='empty_word')
    bad = [label for label in labels if label < 0 or label > n]
    if bad:
        raise ValidationError(
            _('Labels %(bad)s are outside 0..%(n)s.'),
            code='invalid_label',
            params={'bad': bad, 'n': n},
        )


def validate_rational_list(values: List[str]):
    """Validate a list of 'p/q' strings."""
    for value in values:
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(
                _('%(value)s is not a rational number.'),
                code='invalid_rational',
                params={'value': value},
            )
