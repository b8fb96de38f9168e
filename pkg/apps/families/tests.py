from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from apps.core.exceptions import InvalidLabelError
from apps.simplex.geometry import BaryPoint
from .generators import (
    PROOF_FORMS, FamilyKind, family, first_family, m_point, p_point, permuted_family, proof_point, r_point,
    second_family,
)
from .verification import (
    corollary_predicate, corollary_report, is_regular_simplex, plane_orthogonality, segment_lengths,
    relabelings, verify_first_family, verify_points, verify_second_family,
)


class CoordinateFixtureTests(SimpleTestCase):
    """Boundary point tables for small dimensions."""

    def test_first_family_base(self):
        self.assertEqual(m_point(2, 0), BaryPoint.of(0, 2, 2))
        self.assertEqual(m_point(3, 0).key(), (0, 3, 4, 3))
        self.assertEqual(m_point(4, 0).key(), (0, 2, 3, 3, 2))

    def test_second_family_face_point(self):
        self.assertEqual(p_point(2, 1), BaryPoint.of(0, 4, 4))
        self.assertEqual(p_point(3, 1).key(), (0, 9, 17, 9))
        self.assertEqual(p_point(4, 1), BaryPoint.of(0, 16, 36, 36, 16))
        self.assertEqual(p_point(5, 1).key(), (0, 25, 61, 73, 61, 25))

    def test_second_family_side_point(self):
        self.assertEqual(r_point(2, 1), BaryPoint.of(2, 0, 6))
        self.assertEqual(r_point(3, 1).key(), (3, 0, 16, 16))
        self.assertEqual(r_point(4, 1), BaryPoint.of(4, 0, 30, 40, 30))
        self.assertEqual(r_point(4, 1).key(), (2, 0, 15, 20, 15))
        self.assertEqual(r_point(5, 1).key(), (5, 0, 48, 72, 72, 48))

    def test_shifted_points(self):
        self.assertEqual(m_point(3, 1).key(), (3, 0, 3, 4))
        for n in range(3, 9):
            coords = PROOF_FORMS['m_1'](n).coords
            self.assertEqual(coords[:3], (n, 0, n))
            self.assertEqual(coords[-1], 2 * n - 2)
            self.assertEqual(m_point(n, 1), proof_point('m_1', n))

    def test_second_shift_of_face_point(self):
        for n in range(3, 9):
            raw = PROOF_FORMS['p_2'](n).coords
            self.assertEqual(raw[:4], (0, n * n, n * n, 3 * n * n - 2 * n - 4))
            self.assertEqual(p_point(n, 2), proof_point('p_2', n))

    def test_index_out_of_range(self):
        with self.assertRaises(InvalidLabelError):
            p_point(3, 0)
        with self.assertRaises(InvalidLabelError):
            m_point(3, 4)


class StructureTests(SimpleTestCase):

    def test_zero_coordinates(self):
        for n in range(2, 13):
            for i in range(n + 1):
                coords = m_point(n, i).key()
                self.assertEqual([k for k, c in enumerate(coords) if c == 0], [i])
            for i in range(1, n + 1):
                self.assertEqual(p_point(n, i).key()[0], 0)
                self.assertEqual(r_point(n, i).key()[i], 0)

    def test_palindromes(self):
        for n in range(2, 13):
            for point in (m_point(n, 0), p_point(n, 1)):
                tail = point.key()[1:]
                self.assertEqual(tail, tail[::-1])
            tail = r_point(n, 1).key()[2:]
            self.assertEqual(tail, tail[::-1])

    def test_family_shapes(self):
        orbit = second_family(3)
        self.assertEqual(orbit.word, (0, 1, 0, 2, 0, 3))
        self.assertEqual(orbit.points[1], r_point(3, 1))
        self.assertEqual(first_family(4).word, (0, 1, 2, 3, 4))
        self.assertEqual(family(FamilyKind.SECOND, 4).period, 8)


class FirstFamilyTests(SimpleTestCase):

    def test_dimension_three(self):
        report = verify_first_family(3)
        self.assertTrue(report.passed, report.failures())
        self.assertEqual(len([c for c in report.checks if c.name == 'midpoint']), 4)

    def test_plane_case_is_edge_midpoint(self):
        report = verify_first_family(2)
        self.assertTrue(report.passed)
        self.assertEqual(m_point(2, 0).key(), (0, 1, 1))

    def test_all_small_dimensions(self):
        for n in range(2, 13):
            report = verify_first_family(n)
            self.assertTrue(report.passed, (n, report.failures()))

    def test_equal_segments_but_not_regular(self):
        orbit = first_family(3)
        self.assertEqual(len(set(segment_lengths(orbit))), 1)
        self.assertFalse(is_regular_simplex(orbit.points))
        self.assertTrue(is_regular_simplex(first_family(2).points))

    def test_closed_forms_match_construction(self):
        self.assertEqual(proof_point('m_1', 5), m_point(5, 1))
        self.assertEqual(proof_point('m_n', 5), m_point(5, 5))


class SecondFamilyTests(SimpleTestCase):

    def test_dimension_three(self):
        report = verify_second_family(3)
        self.assertTrue(report.passed, report.failures())

    def test_plane_orthogonality(self):
        report = verify_second_family(2)
        self.assertTrue(report.passed, report.failures())
        self.assertEqual(plane_orthogonality(second_family(2)), [(1, True), (2, True)])

    def test_all_small_dimensions(self):
        for n in range(2, 13):
            report = verify_second_family(n)
            self.assertTrue(report.passed, (n, report.failures()))

    def test_base_identities_hold_under_relabeling(self):
        checks = [c for c in verify_second_family(4).checks if c.name.endswith('relabeled')]
        self.assertEqual([c.index for c in checks], [0, 1])
        self.assertTrue(all(c.passed for c in checks))
        self.assertEqual(checks[0].detail, 'all 24 relabelings of 1..n')

    @override_settings(BILLIARDS_RELABEL_CHECK_MAX_DIM=3)
    def test_large_dimensions_use_generators(self):
        sigmas, scope = relabelings(5)
        self.assertEqual(sigmas, [(0, 1, 2, 3, 4, 5), (0, 2, 1, 3, 4, 5), (0, 2, 3, 4, 5, 1)])
        self.assertTrue(scope.startswith('identity'))
        self.assertTrue(verify_second_family(5).passed)

    def test_relabelings_fix_face_zero(self):
        sigmas, _ = relabelings(3)
        self.assertEqual(len(set(sigmas)), 6)
        self.assertTrue(all(sigma[0] == 0 for sigma in sigmas))

    def test_details_are_plain_rationals(self):
        for n in (2, 3, 5):
            for report in (verify_first_family(n), verify_second_family(n)):
                for check in report.checks:
                    self.assertNotIn('Fraction(', check.detail)
        equal = [c for c in verify_first_family(2).checks if c.name == 'equal segments']
        self.assertEqual(equal[0].detail, 'squared lengths 1/2')


class CorollaryTests(SimpleTestCase):

    def test_dimension_three_first_family(self):
        self.assertEqual(corollary_predicate(m_point(3, 0), 3), [(1, 3)])
        report = corollary_report(m_point(3, 0), 3)
        self.assertEqual(report.expected_count, 2)
        self.assertTrue(report.is_matching)

    def test_dimension_five(self):
        self.assertEqual(m_point(5, 0).key(), (0, 5, 8, 9, 8, 5))
        self.assertEqual(corollary_predicate(m_point(5, 0), 5), [(1, 5), (2, 4)])
        self.assertEqual(corollary_predicate(p_point(5, 1), 5), [(1, 5), (2, 4)])

    def test_even_dimension_reports_collinearity(self):
        report = corollary_report(m_point(4, 0), 4)
        self.assertEqual(report.pairs, ((1, 4), (2, 3)))
        self.assertIsNone(report.expected_count)
        self.assertIsInstance(report.collinear, bool)


class EquivarianceTests(SimpleTestCase):

    @settings(max_examples=1000, deadline=None)
    @given(st.integers(2, 6).flatmap(lambda n: st.tuples(
        st.just(n), st.permutations(range(n + 1)), st.sampled_from(list(FamilyKind)),
    )))
    def test_relabeled_family_still_verifies(self, case):
        n, sigma, kind = case
        word, points = permuted_family(sigma, family(kind, n))
        report = verify_points(kind, n, word, points)
        self.assertTrue(report.passed, report.failures())
