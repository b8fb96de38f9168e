from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from apps.core.exceptions import InvalidDirectionError, InvalidLabelError, NotPeriodicError, SingularOrbitError
from apps.families.generators import FamilyKind, family, m_point, p_point
from apps.simplex.geometry import BaryPoint, CartVector, RegularSimplex, bary_to_cart, inward_normal
from .flow import certify_periodic, family_state, reverse_state, step, trace
from .shadow import float_trace, max_deviation
from .states import BilliardState, BilliardWord


def word_of(kind, n):
    return BilliardWord(family(kind, n).word)


class BilliardWordTests(SimpleTestCase):

    def test_parse(self):
        self.assertEqual(BilliardWord.parse('0123').labels, (0, 1, 2, 3))
        self.assertEqual(BilliardWord.parse('0,1,0,10').labels, (0, 1, 0, 10))
        self.assertEqual(str(BilliardWord.parse('0,1,0,10')), '0,1,0,10')
        self.assertEqual(str(BilliardWord((0, 1, 0, 2))), '0102')

    def test_parse_rejects_garbage(self):
        with self.assertRaises(InvalidLabelError):
            BilliardWord.parse('01a')

    def test_check(self):
        with self.assertRaises(InvalidLabelError):
            BilliardWord.parse('0124').check(3)

    def test_repeated_positions(self):
        self.assertEqual(BilliardWord.parse('00').repeated_positions(), [0, 1])
        self.assertEqual(BilliardWord.parse('0120').repeated_positions(), [3])
        self.assertEqual(BilliardWord.parse('0102').repeated_positions(), [])

    def test_rotations_and_reversal(self):
        word = BilliardWord.parse('0123')
        self.assertEqual([str(w) for w in word.rotations()], ['0123', '1230', '2301', '3012'])
        self.assertEqual(str(word.reversed()), '0321')
        self.assertEqual(str(BilliardWord.parse('010203').reversed()), '030201')


class BilliardStateTests(SimpleTestCase):

    def test_point_is_canonical(self):
        s = RegularSimplex(2)
        state = BilliardState(BaryPoint.of(0, 4, 4), 0, -inward_normal(s, 1))
        self.assertEqual(state.point.coords, (0, 1, 1))

    def test_point_must_be_inside_the_face(self):
        s = RegularSimplex(2)
        with self.assertRaises(SingularOrbitError):
            BilliardState(BaryPoint.of(0, 0, 1), 0, inward_normal(s, 0))
        with self.assertRaises(SingularOrbitError):
            BilliardState(BaryPoint.of(1, 1, 1), 0, inward_normal(s, 0))

    def test_direction_must_enter(self):
        s = RegularSimplex(2)
        with self.assertRaises(InvalidDirectionError):
            BilliardState(BaryPoint.of(0, 1, 1), 0, inward_normal(s, 1))

    def test_same_as_ignores_positive_scale(self):
        s = RegularSimplex(3)
        a = family_state(FamilyKind.FIRST, 3)
        b = BilliardState(a.point, 0, a.direction.scaled(3))
        c = BilliardState(a.point, 0, reverse_state(s, a).direction)
        self.assertTrue(a.same_as(b))
        self.assertFalse(a.same_as(c))


class StepTests(SimpleTestCase):

    def test_plane_edge_midpoint(self):
        s = RegularSimplex(2)
        here, there = BaryPoint.of(0, 1, 1), BaryPoint.of(1, 0, 1)
        start = BilliardState(here, 0, bary_to_cart(s, there) - bary_to_cart(s, here))
        nxt = step(s, start)
        self.assertEqual(nxt.face, 1)
        self.assertEqual(nxt.point.coords, (1, 0, 1))

    def test_normal_incidence(self):
        s = RegularSimplex(2)
        nxt = step(s, BilliardState(BaryPoint.of(0, 1, 1), 0, -inward_normal(s, 1)))
        self.assertEqual(nxt.face, 1)
        self.assertEqual(nxt.point.coords, (1, 0, 3))
        self.assertEqual(nxt.direction, inward_normal(s, 1))

    def test_first_family_in_three_dimensions(self):
        s = RegularSimplex(3)
        nxt = step(s, family_state(FamilyKind.FIRST, 3))
        self.assertEqual(nxt.face, 1)
        self.assertEqual(nxt.point, m_point(3, 1))
        self.assertEqual(nxt.point.coords, (3, 0, 3, 4))

    def test_vertex_hit_is_singular(self):
        s = RegularSimplex(2)
        towards_vertex = CartVector((Fraction(1), Fraction(-1, 2), Fraction(-1, 2)))
        start = BilliardState(BaryPoint.of(0, 1, 1), 0, towards_vertex)
        with self.assertRaises(SingularOrbitError) as ctx:
            trace(s, start, 3)
        self.assertEqual(ctx.exception.step, 1)
        self.assertIn('(step 1)', str(ctx.exception))

    def test_singular_hit_keeps_the_states_reached(self):
        s = RegularSimplex(2)
        start = BilliardState(BaryPoint.of(1, 0, 1), 1, CartVector((Fraction(-3), Fraction(2), Fraction(1))))
        with self.assertRaises(SingularOrbitError) as ctx:
            trace(s, start, 3)
        self.assertEqual(ctx.exception.step, 2)
        self.assertEqual([state.face for state in ctx.exception.states], [1, 0])
        self.assertEqual(ctx.exception.states[1].point, BaryPoint.of(0, 1, 2))


class TraceTests(SimpleTestCase):

    def test_first_family_closes(self):
        result = trace(RegularSimplex(3), family_state(FamilyKind.FIRST, 3), 4)
        self.assertTrue(result.closed)
        self.assertEqual(str(result.word), '0123')
        self.assertEqual(len(result.states), len(result.word))

    def test_second_family_closes(self):
        result = trace(RegularSimplex(4), family_state(FamilyKind.SECOND, 4), 8)
        self.assertTrue(result.closed)
        self.assertEqual(str(result.word), '01020304')

    def test_sub_period_is_open(self):
        self.assertFalse(trace(RegularSimplex(3), family_state(FamilyKind.FIRST, 3), 3).closed)
        self.assertFalse(trace(RegularSimplex(3), family_state(FamilyKind.FIRST, 3), 5).closed)

    def test_multiple_periods(self):
        result = trace(RegularSimplex(3), family_state(FamilyKind.FIRST, 3), 12)
        self.assertTrue(result.closed)
        self.assertEqual(result.returns, (4, 8, 12))

    def test_exact_closure_for_both_families(self):
        for n in range(2, 11):
            s = RegularSimplex(n)
            for kind in FamilyKind:
                word = word_of(kind, n)
                result = trace(s, family_state(kind, n), len(word))
                self.assertTrue(result.closed, (kind, n))
                self.assertEqual(result.word, word)
                self.assertEqual(result.points, family(kind, n).points)

    def test_direction_norm_is_invariant(self):
        for n in (2, 3, 6):
            for kind in FamilyKind:
                start = family_state(kind, n)
                result = trace(RegularSimplex(n), start, 3 * n)
                norms = {state.direction.norm2() for state in result.states + (result.final,)}
                self.assertEqual(norms, {start.direction.norm2()})

    def test_steps_must_be_positive(self):
        with self.assertRaises(ValueError):
            trace(RegularSimplex(2), family_state(FamilyKind.FIRST, 2), 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 7), st.sampled_from(list(FamilyKind)), st.data())
    def test_reversing_traces_the_reversed_word(self, n, kind, data):
        s = RegularSimplex(n)
        word = word_of(kind, n)
        result = trace(s, family_state(kind, n), len(word))
        k = data.draw(st.integers(0, len(word) - 1))
        backwards = trace(s, reverse_state(s, result.states[k]), len(word))
        self.assertTrue(backwards.closed)
        self.assertEqual(backwards.word, word.rotated(k).reversed())


class CertifyTests(SimpleTestCase):

    def test_plane_first_family(self):
        certificate = certify_periodic(RegularSimplex(2), BilliardWord.parse('012'), family_state(FamilyKind.FIRST, 2))
        self.assertEqual(len(certificate.points), 3)
        self.assertEqual(certificate.period, 3)
        self.assertEqual(certificate.points[0].coords, (0, 1, 1))

    def test_plane_second_family_is_a_segment_of_orbits(self):
        s = RegularSimplex(2)
        word = BilliardWord.parse('0102')
        for point in (p_point(2, 1), BaryPoint.of(0, 1, 2), BaryPoint.of(0, 5, 1)):
            certificate = certify_periodic(s, word, BilliardState(point, 0, -inward_normal(s, 1)))
            self.assertEqual(certificate.period, 4)

    def test_both_families(self):
        for n in range(2, 9):
            for kind in FamilyKind:
                certificate = certify_periodic(RegularSimplex(n), word_of(kind, n), family_state(kind, n))
                self.assertEqual(certificate.points, family(kind, n).points)

    def test_repeated_label(self):
        with self.assertRaises(NotPeriodicError):
            certify_periodic(RegularSimplex(2), BilliardWord.parse('00'), family_state(FamilyKind.FIRST, 2))

    def test_wrong_coding(self):
        with self.assertRaises(NotPeriodicError) as ctx:
            certify_periodic(RegularSimplex(3), BilliardWord.parse('0132'), family_state(FamilyKind.FIRST, 3))
        self.assertEqual(ctx.exception.step, 2)

    def test_start_on_other_face(self):
        with self.assertRaises(NotPeriodicError):
            certify_periodic(RegularSimplex(3), BilliardWord.parse('1230'), family_state(FamilyKind.FIRST, 3))

    def test_not_minimal(self):
        with self.assertRaises(NotPeriodicError):
            certify_periodic(RegularSimplex(2), BilliardWord.parse('012012'), family_state(FamilyKind.FIRST, 2))

    def test_singular_trajectory(self):
        s = RegularSimplex(2)
        towards_vertex = CartVector((Fraction(1), Fraction(-1, 2), Fraction(-1, 2)))
        with self.assertRaises(NotPeriodicError) as ctx:
            certify_periodic(s, BilliardWord.parse('01'), BilliardState(BaryPoint.of(0, 1, 1), 0, towards_vertex))
        self.assertIsInstance(ctx.exception.__cause__, SingularOrbitError)


class ShadowTests(SimpleTestCase):

    def test_first_family_closes_in_floats(self):
        shadow = float_trace(RegularSimplex(3), family_state(FamilyKind.FIRST, 3), 4)
        self.assertLess(shadow.closure_error, 1e-9)
        self.assertEqual(str(shadow.word), '0123')

    def test_agrees_with_exact_tracer(self):
        for n in range(2, 9):
            s = RegularSimplex(n)
            for kind in FamilyKind:
                start = family_state(kind, n)
                steps = len(word_of(kind, n))
                self.assertLess(max_deviation(trace(s, start, steps), float_trace(s, start, steps)), 1e-9)

    def test_second_family_word(self):
        s = RegularSimplex(5)
        start = family_state(FamilyKind.SECOND, 5)
        self.assertEqual(float_trace(s, start, 10).word, trace(s, start, 10).word)

    def test_normal_incidence_bounces_back(self):
        s = RegularSimplex(2)
        shadow = float_trace(s, BilliardState(BaryPoint.of(1, 0, 3), 1, inward_normal(s, 1)), 4)
        self.assertEqual(str(shadow.word), '1020')
        self.assertLess(abs(shadow.positions[1] - shadow.positions[3]).max(), 1e-12)
        self.assertLess(shadow.closure_error, 1e-12)

    @override_settings(BILLIARDS_FLOAT_TIE_TOLERANCE=1e-3)
    def test_tolerance_comes_from_settings(self):
        s = RegularSimplex(2)
        eps = Fraction(1, 10 ** 6)
        nearly_vertex = CartVector((Fraction(1), Fraction(-1, 2) - eps, Fraction(-1, 2) + eps))
        with self.assertRaises(SingularOrbitError):
            float_trace(s, BilliardState(BaryPoint.of(0, 1, 1), 0, nearly_vertex), 1)
        trace(s, BilliardState(BaryPoint.of(0, 1, 1), 0, nearly_vertex), 1)
