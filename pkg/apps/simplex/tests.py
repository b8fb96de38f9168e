from fractions import Fraction
from itertools import permutations

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st

from apps.core.exceptions import PointAtInfinityError
from apps.exactla.matrices import mat_mul, vector
from .geometry import (
    BaryPoint, CartPoint, CartVector, RegularSimplex, apply_permutation, bary_to_cart, canonicalize,
    cart_reflect_point, cart_to_bary, cyclic_shift, face_interior_test, inward_normal, reflect_point,
    reflect_vector, reflected_vertex, reflection_matrix,
)


@st.composite
def simplex_points(draw, min_n: int = 2, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    coords = draw(st.lists(
        st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=n + 1, max_size=n + 1,
    ))
    assume(sum(coords) != 0)
    return RegularSimplex(n), BaryPoint(tuple(coords))


@st.composite
def simplex_directions(draw, min_n: int = 2, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    comps = draw(st.lists(
        st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=n, max_size=n,
    ))
    return RegularSimplex(n), CartVector(tuple(comps) + (-sum(comps),))


class CanonicalizeTests(SimpleTestCase):

    def test_divides_by_content(self):
        self.assertEqual(canonicalize(BaryPoint.of(0, 4, 4)).coords, vector([0, 1, 1]))

    def test_mirror_representative(self):
        self.assertEqual(canonicalize(BaryPoint.of(-9, 18, 15, 6)).coords, vector([-3, 6, 5, 2]))

    def test_clears_denominators(self):
        self.assertEqual(canonicalize(BaryPoint.of(0, Fraction(1, 2), Fraction(1, 2))).coords, vector([0, 1, 1]))

    def test_negative_sum_flips_sign(self):
        self.assertEqual(canonicalize(BaryPoint.of(0, -2, -4)).coords, vector([0, 1, 2]))

    def test_zero_sum_is_point_at_infinity(self):
        with self.assertRaises(PointAtInfinityError):
            BaryPoint.of(1, -1, 0)

    @given(simplex_points())
    def test_idempotent(self, case):
        _, p = case
        once = canonicalize(p)
        self.assertEqual(canonicalize(once).coords, once.coords)


class CoordinateTests(SimpleTestCase):

    def test_vertex(self):
        self.assertEqual(bary_to_cart(RegularSimplex(2), BaryPoint.of(1, 0, 0)).comps, vector([1, 0, 0]))

    def test_edge_midpoint(self):
        self.assertEqual(
            bary_to_cart(RegularSimplex(2), BaryPoint.of(0, 2, 2)).comps,
            vector([0, Fraction(1, 2), Fraction(1, 2)]),
        )

    def test_normalizes_by_sum(self):
        self.assertEqual(
            bary_to_cart(RegularSimplex(3), BaryPoint.of(3, 0, 3, 4)).comps,
            vector([Fraction(3, 10), 0, Fraction(3, 10), Fraction(2, 5)]),
        )

    def test_cart_to_bary(self):
        s = RegularSimplex(2)
        self.assertEqual(cart_to_bary(s, CartPoint(vector([1, 0, 0]))).coords, vector([1, 0, 0]))
        self.assertEqual(
            cart_to_bary(s, CartPoint(vector([Fraction(1, 2), Fraction(1, 2), 0]))).coords, vector([1, 1, 0]),
        )

    def test_round_trip(self):
        s = RegularSimplex(3)
        p = BaryPoint.of(0, 3, 4, 3)
        self.assertEqual(cart_to_bary(s, bary_to_cart(s, p)).coords, vector([0, 3, 4, 3]))

    def test_off_hyperplane_rejected(self):
        with self.assertRaises(ValueError):
            cart_to_bary(RegularSimplex(2), CartPoint(vector([1, 1, 0])))

    def test_vertices_are_equidistant(self):
        s = RegularSimplex(4)
        for a in s.vertices:
            for b in s.vertices:
                if a != b:
                    self.assertEqual((a - b).norm2(), 2)


class ReflectionTests(SimpleTestCase):

    def test_reflected_vertex_zero(self):
        self.assertEqual(
            reflected_vertex(RegularSimplex(3), 0),
            BaryPoint.of(-1, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)),
        )
        self.assertEqual(reflected_vertex(RegularSimplex(3), 0).coords, vector([-3, 2, 2, 2]))

    def test_reflected_vertex_one(self):
        for n in range(2, 7):
            expected = [Fraction(2, n)] * (n + 1)
            expected[1] = Fraction(-1)
            self.assertEqual(reflected_vertex(RegularSimplex(n), 1), BaryPoint(tuple(expected)))

    def test_reflected_vertex_plane(self):
        self.assertEqual(reflected_vertex(RegularSimplex(2), 0).coords, vector([-1, 1, 1]))

    def test_face_points_are_fixed(self):
        p = BaryPoint.of(0, 2, 5, 1)
        self.assertEqual(reflect_point(RegularSimplex(3), 0, p), p)

    def test_mirror_of_last_first_family_point(self):
        s = RegularSimplex(3)
        self.assertEqual(reflect_point(s, 0, BaryPoint.of(3, 4, 3, 0)).coords, vector([-3, 6, 5, 2]))

    def test_mirror_of_second_family_point(self):
        s = RegularSimplex(3)
        self.assertEqual(reflect_point(s, 1, BaryPoint.of(0, 9, 17, 9)).coords, vector([6, -9, 23, 15]))

    def test_tangent_vector_is_fixed(self):
        s = RegularSimplex(3)
        u = CartVector(vector([0, 1, -1, 0]))
        self.assertEqual(reflect_vector(s, 0, u), u)

    def test_normal_is_negated(self):
        s = RegularSimplex(4)
        for j in s.labels:
            self.assertEqual(reflect_vector(s, j, inward_normal(s, j)), -inward_normal(s, j))

    def test_plane_norm(self):
        s = RegularSimplex(2)
        image = reflect_vector(s, 1, CartVector(vector([1, -1, 0])))
        self.assertEqual(image.comps, vector([Fraction(0), Fraction(1), Fraction(-1)]))
        self.assertEqual(image.norm2(), 2)

    def test_reflection_matrix_squares_to_identity(self):
        s = RegularSimplex(2)
        for j in s.labels:
            self.assertTrue(mat_mul(reflection_matrix(s, j), reflection_matrix(s, j)).is_identity())

    def test_matrix_matches_vector_form(self):
        s = RegularSimplex(3)
        u = CartVector(vector([2, -1, Fraction(1, 3), Fraction(-4, 3)]))
        for j in s.labels:
            self.assertEqual(reflection_matrix(s, j).apply(u.comps), reflect_vector(s, j, u).comps)

    @settings(max_examples=1000, deadline=None)
    @given(simplex_points(), st.data())
    def test_point_reflection_is_involution(self, case, data):
        s, p = case
        j = data.draw(st.integers(0, s.n))
        self.assertEqual(reflect_point(s, j, reflect_point(s, j, p)), p)

    @settings(max_examples=300, deadline=None)
    @given(simplex_points(), st.data())
    def test_barycentric_and_cartesian_mirrors_agree(self, case, data):
        s, p = case
        j = data.draw(st.integers(0, s.n))
        self.assertEqual(
            bary_to_cart(s, reflect_point(s, j, p)),
            cart_reflect_point(s, j, bary_to_cart(s, p)),
        )

    @settings(max_examples=300, deadline=None)
    @given(simplex_points(), st.data())
    def test_reflection_commutes_with_canonicalize(self, case, data):
        s, p = case
        j = data.draw(st.integers(0, s.n))
        self.assertEqual(reflect_point(s, j, canonicalize(p)).coords, reflect_point(s, j, p).coords)

    @settings(max_examples=300, deadline=None)
    @given(simplex_directions(), st.data())
    def test_vector_reflection_is_isometric_involution(self, case, data):
        s, u = case
        j = data.draw(st.integers(0, s.n))
        image = reflect_vector(s, j, u)
        self.assertEqual(sum(image.comps), 0)
        self.assertEqual(image.norm2(), u.norm2())
        self.assertEqual(reflect_vector(s, j, image), u)


class PermutationTests(SimpleTestCase):

    def test_identity(self):
        p = BaryPoint.of(0, 3, 4, 3)
        self.assertEqual(apply_permutation((0, 1, 2, 3), p), p)

    def test_cyclic_shift(self):
        self.assertEqual(apply_permutation(cyclic_shift(4), BaryPoint.of(0, 3, 4, 3)).coords, vector([3, 0, 3, 4]))

    def test_transposition(self):
        self.assertEqual(apply_permutation((0, 2, 1, 3), BaryPoint.of(0, 3, 4, 3)).coords, vector([0, 4, 3, 3]))

    def test_group_action(self):
        p = BaryPoint.of(1, 2, 3, 5)
        for sigma in permutations(range(4)):
            for tau in [(1, 0, 3, 2), (3, 0, 1, 2)]:
                composed = tuple(sigma[tau[i]] for i in range(4))
                self.assertEqual(
                    apply_permutation(sigma, apply_permutation(tau, p)).coords,
                    apply_permutation(composed, p).coords,
                )


class FaceInteriorTests(SimpleTestCase):

    def test_edge_midpoint(self):
        self.assertTrue(face_interior_test(BaryPoint.of(0, 2, 2), 0))

    def test_vertex_is_not_interior(self):
        self.assertFalse(face_interior_test(BaryPoint.of(1, 0, 0), 1))

    def test_second_family_point(self):
        self.assertTrue(face_interior_test(BaryPoint.of(2, 0, 6), 1))

    def test_wrong_face(self):
        self.assertFalse(face_interior_test(BaryPoint.of(2, 0, 6), 0))

    def test_outside_point(self):
        self.assertFalse(face_interior_test(BaryPoint.of(-3, 0, 6, 1), 1))
