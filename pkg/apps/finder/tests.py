from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import assume, given, settings, strategies as st

from apps.core.exceptions import DimensionTooHighError, InfeasibleWordError, RepeatedLabelError
from apps.exactla.matrices import RatMatrix, mat_mul, proportional
from apps.exactla.solvers import solve_affine
from apps.families.generators import FamilyKind, family, m_point, p_point
from apps.simplex.geometry import BaryPoint, RegularSimplex, bary_to_cart, inward_normal, reflect_point
from apps.tracer.flow import certify_periodic
from apps.tracer.states import BilliardState, BilliardWord
from .reflections import (
    compose, fixed_directions, restricted, rotation_determinant, stability_check, zero_sum_gram,
)
from .search import admissible_direction, remark_counts, solve_periodic, symmetry_orbit_count


@st.composite
def billiard_words(draw, max_n: int = 5, max_length: int = 8):
    n = draw(st.integers(2, max_n))
    labels = [draw(st.integers(0, n))]
    for _ in range(draw(st.integers(0, max_length - 1))):
        labels.append(draw(st.integers(0, n).filter(lambda j, last=labels[-1]: j != last)))
    return RegularSimplex(n), BilliardWord(tuple(labels))


def first_word(n):
    return BilliardWord(family(FamilyKind.FIRST, n).word)


def second_word(n):
    return BilliardWord(family(FamilyKind.SECOND, n).word)


class ComposeTests(SimpleTestCase):

    def test_single_reflection_is_an_involution(self):
        s = RegularSimplex(3)
        composed = compose(s, BilliardWord.parse('0'))
        self.assertTrue(mat_mul(composed.linear, composed.linear).is_identity())
        on_face = bary_to_cart(s, BaryPoint.of(0, 1, 2, 3))
        self.assertEqual(composed.affine(on_face), on_face)

    def test_repeated_label(self):
        with self.assertRaises(RepeatedLabelError):
            compose(RegularSimplex(2), BilliardWord.parse('0110'))

    def test_plane_rotation(self):
        s = RegularSimplex(2)
        self.assertEqual(rotation_determinant(s, BilliardWord.parse('01')), 1)
        self.assertEqual(rotation_determinant(s, BilliardWord.parse('012')), -1)
        self.assertFalse(restricted(s, compose(s, BilliardWord.parse('01')).linear).is_identity())

    @settings(max_examples=1000, deadline=None)
    @given(billiard_words())
    def test_preserves_the_zero_sum_gram_form(self, case):
        s, v = case
        m = restricted(s, compose(s, v).linear)
        g = zero_sum_gram(s.n)
        self.assertEqual(mat_mul(mat_mul(m.transpose(), g), m), g)

    @settings(max_examples=300, deadline=None)
    @given(billiard_words(), st.lists(st.integers(1, 9), min_size=6, max_size=6))
    def test_affine_part_matches_stepwise_mirrors(self, case, weights):
        s, v = case
        p = BaryPoint(tuple(weights[:s.size]))
        mirrored = p
        for j in v:
            mirrored = reflect_point(s, j, mirrored)
        self.assertEqual(compose(s, v).affine(bary_to_cart(s, p)), bary_to_cart(s, mirrored))

    @settings(max_examples=300, deadline=None)
    @given(billiard_words(), st.data())
    def test_stability_is_invariant_under_rotation(self, case, data):
        s, v = case
        assume(v[0] != v[-1] or len(v) == 1)
        k = data.draw(st.integers(0, len(v) - 1))
        self.assertEqual(stability_check(s, v), stability_check(s, v.rotated(k)))


class FixedDirectionTests(SimpleTestCase):

    def test_first_family_word(self):
        s = RegularSimplex(3)
        arriving = bary_to_cart(s, m_point(3, 0)) - bary_to_cart(s, m_point(3, 3))
        directions = fixed_directions(s, first_word(3))
        self.assertTrue(any(proportional(u.comps, arriving.comps) for u in directions))

    def test_plane_second_family_word(self):
        s = RegularSimplex(2)
        directions = fixed_directions(s, second_word(2))
        self.assertEqual(len(directions), 2)
        columns = RatMatrix.from_columns([u.comps for u in directions])
        self.assertIsNotNone(solve_affine(columns, inward_normal(s, 1).comps))

    def test_rotation_has_none(self):
        self.assertEqual(fixed_directions(RegularSimplex(2), BilliardWord.parse('01')), [])

    def test_plane_first_family_word(self):
        self.assertEqual(len(fixed_directions(RegularSimplex(2), BilliardWord.parse('012'))), 1)

    def test_directions_are_tangent(self):
        for u in fixed_directions(RegularSimplex(4), second_word(4)):
            self.assertEqual(sum(u.comps), 0)


class StabilityTests(SimpleTestCase):

    def test_three_dimensional_families(self):
        s = RegularSimplex(3)
        self.assertTrue(stability_check(s, BilliardWord.parse('0123')))
        self.assertTrue(stability_check(s, BilliardWord.parse('010203')))

    def test_plane_words(self):
        s = RegularSimplex(2)
        self.assertTrue(stability_check(s, BilliardWord.parse('01')))
        self.assertFalse(stability_check(s, BilliardWord.parse('0102')))


class SolvePeriodicTests(SimpleTestCase):

    def test_rediscovers_first_family(self):
        for n in range(3, 9):
            result = solve_periodic(RegularSimplex(n), first_word(n))
            self.assertEqual(result.family_dim, 0, n)
            self.assertEqual(result.base, m_point(n, 0))
            self.assertIsNotNone(result.admissible_sample)
            self.assertEqual(result.admissible_sample.points, family(FamilyKind.FIRST, n).points)

    def test_plane_second_family_is_one_dimensional(self):
        result = solve_periodic(RegularSimplex(2), second_word(2))
        self.assertEqual(result.family_dim, 1)
        self.assertEqual(result.base, p_point(2, 1))
        self.assertEqual(result.sample, result.base)
        self.assertIsNotNone(result.admissible_sample)
        self.assertTrue(result.contains(BaryPoint.of(0, 1, 3)))
        self.assertTrue(result.contains(BaryPoint.of(0, 7, 2)))
        self.assertFalse(result.contains(BaryPoint.of(1, 1, 3)))

    def test_second_family_base(self):
        self.assertEqual(solve_periodic(RegularSimplex(3), second_word(3)).base, p_point(3, 1))
        result = solve_periodic(RegularSimplex(4), second_word(4))
        self.assertEqual(result.base, BaryPoint.of(0, 16, 36, 36, 16))
        self.assertTrue(result.contains(result.base))
        self.assertIsNotNone(result.admissible_sample)

    def test_solution_sets_contain_the_families(self):
        for n in range(2, 9):
            s = RegularSimplex(n)
            self.assertTrue(solve_periodic(s, first_word(n)).contains(m_point(n, 0)), n)
            self.assertTrue(solve_periodic(s, second_word(n)).contains(p_point(n, 1)), n)

    def test_certified_state_lies_in_the_solution_set(self):
        s = RegularSimplex(2)
        word = BilliardWord.parse('0102')
        start = BilliardState(BaryPoint.of(0, 2, 7), 0, -inward_normal(s, 1))
        certify_periodic(s, word, start)
        self.assertTrue(solve_periodic(s, word).contains(start.point))

    def test_rotation_is_infeasible(self):
        with self.assertRaises(InfeasibleWordError):
            solve_periodic(RegularSimplex(2), BilliardWord.parse('01'))

    def test_admissible_direction_of_first_family(self):
        s = RegularSimplex(3)
        outgoing = bary_to_cart(s, m_point(3, 1)) - bary_to_cart(s, m_point(3, 0))
        direction = admissible_direction(s, first_word(3), m_point(3, 0))
        self.assertTrue(proportional(direction.comps, outgoing.comps, positive=True))


class SymmetryCountTests(SimpleTestCase):

    def test_brute_force_counts(self):
        self.assertEqual(symmetry_orbit_count(BilliardWord.parse('012'), 2), 1)
        self.assertEqual(symmetry_orbit_count(BilliardWord.parse('0123'), 3), 3)
        self.assertEqual(symmetry_orbit_count(BilliardWord.parse('0102'), 2), 3)

    @override_settings(BILLIARDS_SYMMETRY_MAX_DIM=3)
    def test_dimension_limit(self):
        with self.assertRaises(DimensionTooHighError):
            symmetry_orbit_count(first_word(4), 4)

    def test_remark_counts(self):
        counts = remark_counts(3)
        self.assertEqual(counts['first_family_classes'], 3)
        self.assertEqual(counts['printed_first'], Fraction(1))
        self.assertEqual(counts['second_family_classes'], symmetry_orbit_count(second_word(3), 3))
