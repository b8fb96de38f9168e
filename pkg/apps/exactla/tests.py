from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from apps.core.exceptions import DimensionMismatchError
from .matrices import RatMatrix, mat_mul, vector
from .solvers import determinant, kernel_basis, rank, rref, solve_affine


def matrices(max_rows: int = 5, max_cols: int = 5):
    """Strategy for small integer matrices with rational entries."""
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=c, max_size=c),
                min_size=r, max_size=r,
            ).map(RatMatrix.from_rows)
        )
    )


class MatMulTests(SimpleTestCase):

    def test_identity_is_neutral(self):
        m = RatMatrix.from_rows([[1, 2, 3], [Fraction(1, 2), 0, -1], [4, 5, 6]])
        self.assertEqual(mat_mul(RatMatrix.identity(3), m), m)

    def test_swap_is_involution(self):
        swap = RatMatrix.from_rows([[0, 1], [1, 0]])
        self.assertTrue(mat_mul(swap, swap).is_identity())

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            mat_mul(RatMatrix.identity(2), RatMatrix.identity(3))

    def test_entries_stay_reduced(self):
        m = RatMatrix.from_rows([[Fraction(1, 3), Fraction(1, 6)]])
        product = mat_mul(m, RatMatrix.from_rows([[3], [6]]))
        self.assertEqual(product[0, 0], Fraction(2))
        self.assertEqual(product[0, 0].denominator, 1)


class KernelTests(SimpleTestCase):

    def test_zero_matrix_has_full_kernel(self):
        self.assertEqual(len(kernel_basis(RatMatrix.zeros(2, 2))), 2)

    def test_identity_has_empty_kernel(self):
        self.assertEqual(kernel_basis(RatMatrix.identity(2)), [])

    def test_canonical_scaling(self):
        m = RatMatrix.from_rows([[2, 4, 6]])
        for k in kernel_basis(m):
            first = next(v for v in k if v != 0)
            self.assertEqual(first, 1)

    def test_rank_of_rank_one(self):
        self.assertEqual(rank(RatMatrix.from_rows([[1, 1], [2, 2]])), 1)

    @settings(max_examples=1000, deadline=None)
    @given(matrices())
    def test_kernel_vectors_are_annihilated(self, m):
        basis = kernel_basis(m)
        for k in basis:
            self.assertTrue(all(v == 0 for v in m.apply(k)))
        self.assertEqual(rank(m) + len(basis), m.cols)

    @settings(max_examples=200, deadline=None)
    @given(matrices())
    def test_rank_matches_transpose(self, m):
        self.assertEqual(rank(m), rank(m.transpose()))


class SolveAffineTests(SimpleTestCase):

    def test_identity_system(self):
        solution = solve_affine(RatMatrix.identity(2), vector([1, 2]))
        self.assertEqual(solution.particular, vector([1, 2]))
        self.assertEqual(solution.kernel, ())

    def test_inconsistent_system(self):
        self.assertIsNone(solve_affine(RatMatrix.zeros(1, 1), vector([1])))

    def test_rank_one_family(self):
        solution = solve_affine(RatMatrix.from_rows([[1, 1], [2, 2]]), vector([3, 6]))
        self.assertEqual(solution.particular, vector([3, 0]))
        self.assertEqual(solution.kernel, (vector([1, -1]),))

    def test_length_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            solve_affine(RatMatrix.identity(2), vector([1]))

    @settings(max_examples=1000, deadline=None)
    @given(matrices(), st.data())
    def test_every_solution_satisfies_system(self, m, data):
        b = data.draw(st.lists(st.integers(-4, 4), min_size=m.rows, max_size=m.rows))
        solution = solve_affine(m, vector(b))
        if solution is None:
            # infeasible exactly when b leaves the column space
            augmented = RatMatrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)])
            self.assertEqual(rank(augmented), rank(m) + 1)
            return
        self.assertEqual(m.apply(solution.particular), vector(b))
        for k in solution.kernel:
            shifted = tuple(x + 3 * y for x, y in zip(solution.particular, k))
            self.assertEqual(m.apply(shifted), vector(b))


class DeterminantTests(SimpleTestCase):

    def test_swap_has_negative_determinant(self):
        self.assertEqual(determinant(RatMatrix.from_rows([[0, 1], [1, 0]])), -1)

    def test_singular(self):
        self.assertEqual(determinant(RatMatrix.from_rows([[1, 2], [2, 4]])), 0)

    def test_rref_pivots(self):
        rows, pivots, _ = rref(RatMatrix.from_rows([[0, 2, 4], [0, 1, 2], [1, 0, 0]]))
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(rows[1], [0, 1, 2])
