import random
from fractions import Fraction
from itertools import combinations

from django.test import SimpleTestCase, override_settings
from hypothesis import assume, given, settings, strategies as st

from apps.core.exceptions import DegenerateHullError, DimensionTooHighError
from apps.exactla.matrices import dot, sub
from .enumeration import (
    affine_dimension, euler_characteristic, facet_vertex_counts, hull_report, is_regular, parallel_facet_pairs,
)
from .off import facet_cycle, write_off, write_vertices_off
from .points import PointSet, multiset_points, qn_points, second_family_points
from .similarity import similarity_check, similarity_ratio

CUBE = PointSet(tuple((x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)), label='cube')


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


class PointSetTests(SimpleTestCase):

    def test_q3(self):
        self.assertEqual(qn_points(3).points, ((3, 3, 4), (3, 4, 3), (4, 3, 3)))

    def test_q4(self):
        points = qn_points(4)
        self.assertEqual(len(points), 6)
        self.assertIn((2, 3, 3, 2), points.points)

    def test_q5(self):
        points = qn_points(5)
        self.assertEqual(len(points), 30)
        self.assertIn((5, 8, 9, 8, 5), points.points)
        self.assertEqual(sorted(points.points[0]), [5, 5, 8, 8, 9])

    def test_q2_is_one_point(self):
        self.assertEqual(qn_points(2).points, ((1, 1),))

    def test_distinct_points_required(self):
        with self.assertRaises(ValueError):
            PointSet(((1, 2), (1, 2)))

    def test_second_family_points(self):
        self.assertEqual(len(second_family_points(3)), 3)
        self.assertIn((9, 17, 9), second_family_points(3).points)
        self.assertEqual(len(second_family_points(4, closure=True)), 6)


class HullReportTests(SimpleTestCase):

    def test_q2_is_degenerate(self):
        with self.assertRaises(DegenerateHullError):
            hull_report(qn_points(2))

    def test_q3_is_a_regular_triangle(self):
        report = hull_report(qn_points(3))
        self.assertEqual(report.affine_dim, 2)
        self.assertEqual(report.f_vector, (3, 3))
        self.assertEqual(set(report.squared_edge_lengths), {2})
        self.assertTrue(is_regular(report))
        self.assertEqual(parallel_facet_pairs(report), [])

    def test_q4_is_a_regular_octahedron(self):
        report = hull_report(qn_points(4))
        self.assertEqual(report.affine_dim, 3)
        self.assertEqual(report.f_vector, (6, 12, 8))
        self.assertEqual(facet_vertex_counts(report), {3: 8})
        self.assertEqual(set(report.squared_edge_lengths), {2})
        self.assertTrue(is_regular(report))
        self.assertEqual(len(parallel_facet_pairs(report)), 4)
        self.assertEqual(euler_characteristic(report), 2)

    def test_q5(self):
        report = hull_report(qn_points(5))
        self.assertEqual(report.affine_dim, 4)
        self.assertEqual(report.f_vector[0], 30)
        self.assertEqual(len(report.facets), 20)
        self.assertEqual(report.f_vector[3], 20)
        self.assertEqual(euler_characteristic(report), 0)
        self.assertFalse(is_regular(report))

    def test_octahedral_section(self):
        report = hull_report(multiset_points((5, 5, 8, 8)))
        self.assertEqual(report.f_vector, (6, 12, 8))
        self.assertTrue(is_regular(report))

    def test_cuboctahedral_section(self):
        report = hull_report(multiset_points((5, 8, 8, 9)))
        self.assertEqual(report.f_vector, (12, 24, 14))
        self.assertEqual(facet_vertex_counts(report), {3: 8, 4: 6})

    def test_triangles_and_hexagons(self):
        report = hull_report(multiset_points((5, 5, 8, 9)))
        self.assertEqual(facet_vertex_counts(report), {3: 4, 6: 4})
        self.assertEqual(report.f_vector, (12, 18, 8))

    def test_cube(self):
        report = hull_report(CUBE)
        self.assertEqual(report.f_vector, (8, 12, 6))
        self.assertEqual(len(parallel_facet_pairs(report)), 3)
        self.assertTrue(is_regular(report))

    def test_segment(self):
        report = hull_report(PointSet(((0, 0), (1, 1), (3, 3))))
        self.assertEqual(report.affine_dim, 1)
        self.assertEqual(report.f_vector, (2,))
        self.assertEqual(report.squared_edge_lengths, (18,))

    def test_interior_points_are_not_vertices(self):
        square = PointSet(((0, 0), (2, 0), (0, 2), (2, 2), (1, 1)))
        report = hull_report(square)
        self.assertEqual(report.f_vector, (4, 4))
        self.assertNotIn(4, report.vertices)

    def test_dimension_limit(self):
        with self.assertRaises(DimensionTooHighError):
            hull_report(qn_points(6))

    def test_dimension_limit_is_checked_before_permuting(self):
        with self.assertRaises(DimensionTooHighError):
            qn_points(11)

    @override_settings(BILLIARDS_HULL_MAX_DIM=2)
    def test_dimension_limit_comes_from_settings(self):
        with self.assertRaises(DimensionTooHighError):
            hull_report(qn_points(4))

    def test_facets_are_supported(self):
        square = PointSet(((0, 0), (2, 0), (0, 2), (2, 2), (1, 1)))
        for ps in (square, CUBE):
            report = hull_report(ps)
            for facet, normal in zip(report.facets, report.normals):
                anchor = min(facet)
                values = [dot(normal, sub(p, ps.points[anchor])) for p in ps.points]
                self.assertTrue(all(v <= 0 for v in values))

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(range(4)), st.randoms(use_true_random=False))
    def test_relabeling_invariance(self, sigma, rnd):
        base = multiset_points((5, 8, 8, 9))
        expected = hull_report(base)
        shuffled = list(base.points)
        rnd.shuffle(shuffled)
        report = hull_report(PointSet(tuple(shuffled)).permuted(sigma))
        self.assertEqual(report.f_vector, expected.f_vector)
        self.assertEqual(facet_vertex_counts(report), facet_vertex_counts(expected))
        self.assertEqual(report.squared_edge_lengths, expected.squared_edge_lengths)


class BruteForceOracleTests(SimpleTestCase):

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.tuples(*[st.integers(0, 5)] * 3), min_size=10, max_size=10, unique=True))
    def test_facets_agree_with_half_space_check(self, raw):
        points = [tuple(Fraction(c) for c in p) for p in raw]
        assume(affine_dimension(points) == 3)
        report = hull_report(PointSet(tuple(points)))
        facets = set(report.facets)
        for a, b, c in combinations(range(len(points)), 3):
            normal = cross(sub(points[b], points[a]), sub(points[c], points[a]))
            if not any(normal):
                continue
            values = [dot(normal, sub(p, points[a])) for p in points]
            on_plane = frozenset(i for i, v in enumerate(values) if v == 0)
            one_sided = all(v >= 0 for v in values) or all(v <= 0 for v in values)
            self.assertEqual(on_plane in facets, one_sided)
        self.assertEqual(euler_characteristic(report), 2)


class SimilarityTests(SimpleTestCase):

    def test_scaled_copy(self):
        q3 = qn_points(3)
        doubled = PointSet(tuple(tuple(2 * c for c in p) for p in q3.points))
        self.assertTrue(similarity_check(q3, doubled))
        self.assertEqual(similarity_ratio(q3, doubled), 4)

    def test_different_sizes(self):
        self.assertFalse(similarity_check(qn_points(3), qn_points(4)))

    def test_relabeled_copy(self):
        q4 = qn_points(4)
        self.assertTrue(similarity_check(q4, q4.permuted((2, 0, 3, 1))))

    def test_not_similar(self):
        square = PointSet(((0, 0), (1, 0), (0, 1), (1, 1)))
        kite = PointSet(((0, 0), (2, 0), (0, 1), (2, 1)))
        self.assertFalse(similarity_check(square, kite))

    def test_second_family_points_are_reported(self):
        self.assertIsInstance(similarity_check(second_family_points(3), qn_points(3)), bool)


class OffTests(SimpleTestCase):

    def test_cube(self):
        report = hull_report(CUBE)
        lines = write_off(report).splitlines()
        self.assertEqual(lines[0], 'OFF')
        self.assertEqual(lines[1], '8 6 12')
        self.assertEqual(lines[2], '-1 -1 -1')
        edges = set(report.edges)
        for line in lines[10:]:
            count, *cycle = [int(v) for v in line.split()]
            self.assertEqual(count, 4)
            for i, j in zip(cycle, cycle[1:] + cycle[:1]):
                self.assertIn(frozenset((i, j)), edges)

    def assertFacetsAreCycles(self, report, lines):
        edges = set(report.edges)
        for line in lines:
            count, *cycle = [int(v) for v in line.split()]
            self.assertEqual(count, len(cycle))
            for i, j in zip(cycle, cycle[1:] + cycle[:1]):
                self.assertIn(frozenset((i, j)), edges)

    def test_octahedron_in_four_coordinates(self):
        report = hull_report(qn_points(4))
        lines = write_off(report).splitlines()
        self.assertEqual(lines[:2], ['OFF', '6 8 12'])
        self.assertEqual(len(lines), 2 + 6 + 8)
        self.assertTrue(all(len(line.split()) == 3 for line in lines[2:8]))
        self.assertFacetsAreCycles(report, lines[8:])

    def test_square_and_hexagon_facets_are_cycles(self):
        for values, sizes in (((5, 8, 8, 9), {3, 4}), ((5, 5, 8, 9), {3, 6})):
            report = hull_report(multiset_points(values))
            lines = write_off(report).splitlines()
            self.assertEqual(lines[0], 'OFF')
            facet_lines = lines[2 + len(report.points):]
            self.assertEqual({int(line.split()[0]) for line in facet_lines}, sizes)
            self.assertFacetsAreCycles(report, facet_lines)

    def test_higher_dimension(self):
        square = PointSet(((0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)))
        lines = write_off(hull_report(square)).splitlines()
        self.assertEqual(lines[:2], ['nOFF', '4'])
        self.assertEqual(lines[2].split()[:2], ['4', '4'])
        self.assertEqual(len(lines), 3 + 4 + 4)

    def test_single_point(self):
        self.assertEqual(write_vertices_off(qn_points(2)), 'nOFF\n2\n1 0 0\n1 1\n')

    def test_facet_cycle(self):
        square = frozenset({0, 1, 2, 3})
        edges = [frozenset(e) for e in ((0, 1), (1, 3), (3, 2), (2, 0))]
        self.assertEqual(facet_cycle(square, edges), [0, 1, 3, 2])

    def test_vertex_order_does_not_change_counts(self):
        rnd = random.Random(0)
        points = list(CUBE.points)
        rnd.shuffle(points)
        self.assertTrue(write_off(hull_report(PointSet(tuple(points)))).startswith('OFF\n8 6 12\n'))
