from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings

from .exceptions import BilliardError, DegenerateHullError, NotPeriodicError, SingularOrbitError
from .utils import decimal_string, parse_rationals, rational_string, rational_strings
from .validators import validate_dimension, validate_labels, validate_rational_list


class ExceptionTests(SimpleTestCase):

    def test_step_suffix(self):
        self.assertEqual(str(SingularOrbitError('faces 1 and 2 together', step=3)), 'faces 1 and 2 together (step 3)')
        self.assertEqual(str(DegenerateHullError('all points coincide')), 'all points coincide')

    def test_hierarchy(self):
        for cls in (SingularOrbitError, NotPeriodicError, DegenerateHullError):
            self.assertTrue(issubclass(cls, BilliardError))


class FormattingTests(SimpleTestCase):

    def test_decimal_string(self):
        self.assertEqual(decimal_string(Fraction(1, 3)), '0.333333333333')
        self.assertEqual(decimal_string(Fraction(5, 2)), '2.5')
        self.assertEqual(decimal_string(Fraction(-1)), '-1')
        self.assertEqual(decimal_string(Fraction(0)), '0')
        self.assertEqual(decimal_string(Fraction(2, 3), digits=3), '0.667')

    @override_settings(BILLIARDS_DECIMAL_DIGITS=4)
    def test_digits_come_from_settings(self):
        self.assertEqual(decimal_string(Fraction(1, 7)), '0.1429')

    def test_rational_string(self):
        self.assertEqual(rational_string(Fraction(6, 4)), '3/2')
        self.assertEqual(rational_strings([3, Fraction(-1, 2)]), ['3', '-1/2'])

    def test_parse_rationals(self):
        self.assertEqual(parse_rationals('0, 1/2,1/2,'), [0, Fraction(1, 2), Fraction(1, 2)])


class ValidatorTests(SimpleTestCase):

    def test_dimension(self):
        validate_dimension(2)
        with self.assertRaises(ValidationError) as ctx:
            validate_dimension(1)
        self.assertEqual(ctx.exception.code, 'invalid_dimension')

    def test_labels(self):
        validate_labels([0, 1, 2, 3], 3)
        with self.assertRaises(ValidationError) as ctx:
            validate_labels([], 3)
        self.assertEqual(ctx.exception.code, 'empty_word')
        with self.assertRaises(ValidationError) as ctx:
            validate_labels([0, 4], 3)
        self.assertEqual(ctx.exception.code, 'invalid_label')

    def test_rational_list(self):
        validate_rational_list(['1', '-1/2', '3/4'])
        for bad in (['1/0'], ['a']):
            with self.assertRaises(ValidationError):
                validate_rational_list(bad)
