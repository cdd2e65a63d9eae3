import numpy as np
import pytest

from src.fourier.trig_poly import TrigPoly, evaluate, multiply
from src.utils.error_handler import DomainError

ONE_MINUS_COS = {-1: -0.5, 0: 1.0, 1: -0.5}
ONE_PLUS_COS = {-1: 0.5, 0: 1.0, 1: 0.5}


def test_constant_evaluates_to_one():
    assert evaluate(TrigPoly.constant(1.0), 1.234) == pytest.approx(1.0)


@pytest.mark.parametrize("t, expected", [(0.0, 0.0), (np.pi, 2.0), (np.pi / 2, 1.0)])
def test_one_minus_cos_values(t, expected):
    f = TrigPoly.from_dict(ONE_MINUS_COS, real=True)
    assert f(t) == pytest.approx(expected, abs=1e-14)


def test_evaluate_vectorized_matches_closed_form():
    f = TrigPoly.from_dict(ONE_MINUS_COS, real=True)
    t = np.linspace(0, 2 * np.pi, 17)
    np.testing.assert_allclose(f(t), 1 - np.cos(t), atol=1e-14)


def test_multiply_by_one_is_identity():
    f = TrigPoly.from_dict(ONE_MINUS_COS, real=True)
    assert multiply(f, TrigPoly.constant(1.0)).allclose(f)


def test_multiply_one_minus_cos_by_one_plus_cos():
    product = multiply(TrigPoly.from_dict(ONE_MINUS_COS, real=True), TrigPoly.from_dict(ONE_PLUS_COS, real=True))
    expected = TrigPoly.from_dict({-2: -0.25, 0: 0.5, 2: -0.25}, real=True)
    assert product.allclose(expected, atol=1e-15)


def test_basis_functions_add_exponents():
    assert multiply(TrigPoly.basis(1), TrigPoly.basis(1)).trimmed().allclose(TrigPoly.basis(2))


def test_real_flag_requires_conjugate_symmetry():
    with pytest.raises(DomainError):
        TrigPoly.from_dict({-1: 1.0, 1: 2.0}, real=True)


def test_density_flag_rejects_negative_values():
    # 1 + 2cos t dips to -1
    with pytest.raises(DomainError):
        TrigPoly.from_dict({-1: 1.0, 0: 1.0, 1: 1.0}, density=True)


def test_density_flag_requires_unit_mass():
    with pytest.raises(DomainError):
        TrigPoly.from_dict({0: 2.0}, density=True)


def test_even_length_coefficients_rejected():
    with pytest.raises(DomainError):
        TrigPoly(np.ones(4))


def test_cumulative_mass_closed_form():
    f = TrigPoly.from_dict(ONE_PLUS_COS, density=True)
    t = np.array([0.0, 0.5, np.pi, 5.0, 2 * np.pi])
    np.testing.assert_allclose(f.cumulative_mass(t), (t + np.sin(t)) / (2 * np.pi), atol=1e-14)


def test_rotate_shifts_argument():
    f = TrigPoly.from_dict({-2: 0.1 - 0.2j, -1: 0.3, 0: 1.0, 1: 0.3, 2: 0.1 + 0.2j}, real=True)
    t = np.linspace(0, 2 * np.pi, 11)
    np.testing.assert_allclose(f.rotate(0.7)(t), f(t - 0.7), atol=1e-13)


def test_to_grid_matches_direct_evaluation(rng):
    coeffs = rng.normal(size=7) + 1j * rng.normal(size=7)
    f = TrigPoly(coeffs)
    grid = 2 * np.pi * np.arange(32) / 32
    np.testing.assert_allclose(f.to_grid(32), f(grid), atol=1e-12)


def test_power_matches_repeated_multiplication():
    f = TrigPoly.from_dict(ONE_MINUS_COS, real=True)
    assert f.power(3).allclose(f.multiply(f).multiply(f), atol=1e-14)


def test_nonnegativity_certificate():
    assert TrigPoly.from_dict(ONE_MINUS_COS, real=True).is_nonnegative()
    assert not TrigPoly.from_dict({-1: 1.0, 0: 1.0, 1: 1.0}, real=True).is_nonnegative()


def test_normalized_sets_unit_mass():
    f = TrigPoly.from_dict({-1: -1.0, 0: 2.0, 1: -1.0}, real=True).normalized()
    assert f.density
    assert f.mass == pytest.approx(1.0)
