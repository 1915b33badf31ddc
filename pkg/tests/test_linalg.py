import numpy as np
import pytest

from src.linalg import full_gradient, least_squares, nullspace_residual, objective, row_norm_sq, row_norms_sq, \
    sigma_min_sq
from src.utils.exceptions import ConvergenceError, RankDeficiencyError


class TestRowNorms:

    def test_examples(self):
        assert row_norm_sq(np.array([[3.0, 4.0]]), 0) == 25.0
        assert row_norm_sq(np.eye(2), 1) == 1.0
        assert row_norm_sq(np.array([[1.0, 2.0], [-2.0, 1.0]]), 0) == 5.0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            row_norm_sq(np.eye(2), 2)
        with pytest.raises(IndexError):
            row_norm_sq(np.eye(2), -1)

    def test_all_rows(self, rng):
        A = rng.standard_normal((7, 3))
        np.testing.assert_allclose(row_norms_sq(A), [row_norm_sq(A, i) for i in range(7)], rtol=1e-14)


class TestSigmaMinSq:

    def test_identity(self):
        assert sigma_min_sq(np.eye(3)) == pytest.approx(1.0, rel=1e-12)

    def test_stacked_diagonal(self):
        A = np.vstack([np.diag([2.0, 5.0]), np.zeros((2, 2))])
        assert sigma_min_sq(A) == pytest.approx(4.0, rel=1e-10)

    def test_two_by_two_eigenvalue(self):
        A = np.array([[1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
        assert sigma_min_sq(A) == pytest.approx(1.0, rel=1e-10)

    def test_characteristic_polynomial_oracle(self, rng):
        for n in (1, 2, 3):
            for _ in range(5):
                A = rng.standard_normal((n + 3, n))
                roots = np.roots(np.poly(A.T @ A))
                assert sigma_min_sq(A) == pytest.approx(np.min(roots.real), rel=1e-8)

    @pytest.mark.parametrize("second", [1.01, 1.0001])
    def test_close_eigenvalues(self, second):
        rotation, _ = np.linalg.qr(np.random.default_rng(5).standard_normal((3, 3)))
        A = np.vstack([np.diag([1.0, np.sqrt(second), 2.0]) @ rotation, np.zeros((2, 3))])
        assert sigma_min_sq(A) == pytest.approx(1.0, rel=1e-12)

    def test_gaussian_matches_singular_values(self, rng):
        A = rng.standard_normal((200, 20))
        assert sigma_min_sq(A) == pytest.approx(np.linalg.svd(A, compute_uv=False)[-1] ** 2, rel=1e-12)

    def test_spectral_sanity_bound(self, rng):
        A = rng.standard_normal((12, 4))
        assert sigma_min_sq(A) <= A.shape[0] * row_norms_sq(A).max()

    def test_iteration_cap(self):
        A = np.vstack([np.diag([2.0, 5.0]), np.zeros((2, 2))])
        with pytest.raises(ConvergenceError) as error:
            sigma_min_sq(A, max_iter=1)
        assert error.value.iterations == 1

    def test_rank_deficient(self):
        with pytest.raises(RankDeficiencyError):
            sigma_min_sq(np.array([[1.0, 1.0], [1.0, 1.0], [2.0, 2.0]]))


class TestLeastSquares:

    def test_identity(self):
        solution = least_squares(np.eye(2), [1.0, 2.0])
        np.testing.assert_allclose(solution.x_star, [1.0, 2.0])
        np.testing.assert_allclose(solution.residual, [0.0, 0.0], atol=1e-15)
        assert solution.consistent

    def test_mean_minimizes(self):
        solution = least_squares(np.array([[1.0], [1.0]]), [0.0, 2.0])
        np.testing.assert_allclose(solution.x_star, [1.0])
        np.testing.assert_allclose(solution.residual, [1.0, -1.0])
        assert not solution.consistent

    def test_round_trip(self, rng):
        A = rng.standard_normal((40, 6))
        x0 = rng.standard_normal(6)
        solution = least_squares(A, A @ x0)
        np.testing.assert_allclose(solution.x_star, x0, atol=1e-10)
        assert solution.consistent

    def test_normal_equations_optimality(self, rng):
        A = rng.standard_normal((20, 3))
        solution = least_squares(A, rng.standard_normal(20))
        assert np.linalg.norm(A.T @ solution.residual) <= 1e-10 * np.linalg.norm(solution.residual)

    def test_rank_deficiency(self):
        with pytest.raises(RankDeficiencyError):
            least_squares(np.array([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]]), [1.0, 2.0, 3.0])

    def test_underdetermined(self):
        with pytest.raises(RankDeficiencyError):
            least_squares(np.ones((1, 2)), [1.0])


class TestNullspaceResidual:

    def test_complement_of_first_axis(self):
        np.testing.assert_allclose(nullspace_residual(np.array([[1.0], [0.0]]), [5.0, 7.0]), [0.0, 7.0])

    def test_square_matrix_gives_zero(self, rng):
        np.testing.assert_array_equal(nullspace_residual(np.eye(2), rng.standard_normal(2)), np.zeros(2))

    def test_orthogonal_to_columns(self, rng):
        A = rng.standard_normal((4, 2))
        w = nullspace_residual(A, rng.standard_normal(4))
        np.testing.assert_allclose(A.T @ w, np.zeros(2), atol=1e-10)
        assert np.linalg.norm(w) > 0

    def test_scale(self, rng):
        A = rng.standard_normal((6, 2))
        z = rng.standard_normal(6)
        np.testing.assert_allclose(nullspace_residual(A, z, scale=3.0), 3.0 * nullspace_residual(A, z))

    def test_relative_orthogonality(self, rng):
        A = rng.standard_normal((50, 10))
        w = nullspace_residual(A, 100.0 * rng.standard_normal(50))
        assert np.linalg.norm(A.T @ w) <= 1e-8 * np.linalg.norm(w)


class TestObjective:

    def test_gradient_matches_finite_differences(self, rng):
        A = rng.standard_normal((10, 3))
        b = rng.standard_normal(10)
        x = rng.standard_normal(3)
        h = 1e-6
        numerical = [(objective(A, b, x + h * e) - objective(A, b, x - h * e)) / (2 * h) for e in np.eye(3)]
        np.testing.assert_allclose(full_gradient(A, b, x), numerical, rtol=1e-6, atol=1e-8)

    def test_gradient_vanishes_at_solution(self, rng):
        A = rng.standard_normal((10, 3))
        b = rng.standard_normal(10)
        np.testing.assert_allclose(full_gradient(A, b, least_squares(A, b).x_star), np.zeros(3), atol=1e-12)
