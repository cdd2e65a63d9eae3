import numpy as np
import pytest
import scipy.linalg

from src.spectral.projections import (
    coeffs_from_matrix,
    frobenius_norm,
    project_ball,
    toeplitz_from_coeffs,
)


def test_coefficient_round_trip(rng):
    h = rng.normal(size=4) + 1j * rng.normal(size=4)
    np.testing.assert_allclose(coeffs_from_matrix(toeplitz_from_coeffs(h)), h, atol=1e-14)


def test_toeplitz_from_coeffs_matches_scipy(rng):
    h = rng.normal(size=5) + 1j * rng.normal(size=5)
    column = np.concatenate([[0.0], h])
    np.testing.assert_allclose(toeplitz_from_coeffs(h), scipy.linalg.toeplitz(column, np.conj(column)))


def test_toeplitz_from_coeffs_is_hermitian_with_zero_diagonal(rng):
    M = toeplitz_from_coeffs(rng.normal(size=3) + 1j * rng.normal(size=3))
    np.testing.assert_allclose(M, M.conj().T)
    np.testing.assert_allclose(np.diag(M), 0)


def test_subspace_projection_averages_diagonals(rng):
    n = 6
    M = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = coeffs_from_matrix(M)
    for k in range(1, n):
        expected = 0.5 * (np.diagonal(M, -k).mean() + np.conj(np.diagonal(M, k).mean()))
        assert h[k - 1] == pytest.approx(expected)


def test_subspace_projection_is_orthogonal(rng):
    n = 5
    M = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    residual = M - toeplitz_from_coeffs(coeffs_from_matrix(M))
    direction = toeplitz_from_coeffs(rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1))
    assert np.real(np.vdot(direction, residual)) == pytest.approx(0.0, abs=1e-12)


def test_frobenius_norm_from_coefficients(rng):
    h = rng.normal(size=6) + 1j * rng.normal(size=6)
    assert frobenius_norm(h) == pytest.approx(np.linalg.norm(toeplitz_from_coeffs(h)))


def test_ball_projection_clips_spectrum(rng):
    A = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    P = project_ball(A + A.conj().T, radius=1.0)
    assert np.max(np.abs(np.linalg.eigvalsh(P))) <= 1.0 + 1e-12


def test_ball_projection_keeps_interior_points(rng):
    M = toeplitz_from_coeffs(0.05 * (rng.normal(size=3) + 1j * rng.normal(size=3)))
    np.testing.assert_allclose(project_ball(M), M, atol=1e-14)
