import numpy as np
import pytest

from src.fourier.kernels import (
    bump_density,
    fejer_density,
    kernel_maxima,
    kernel_zeros,
    power_kernel,
    root_form_density,
)
from src.fourier.trig_poly import TrigPoly
from src.utils.error_handler import DomainError


def test_root_form_single_angle():
    assert root_form_density([0.0]).allclose(TrigPoly.from_dict({-1: -0.5, 0: 1.0, 1: -0.5}))


def test_root_form_empty_is_uniform():
    assert root_form_density([]).allclose(TrigPoly.constant(1.0))


def test_root_form_antipodal_angles():
    expected = TrigPoly.from_dict({-2: -0.5, 0: 1.0, 2: -0.5})
    assert root_form_density([0.0, np.pi]).allclose(expected, atol=1e-14)


def test_root_form_matches_quadrature(rng):
    angles = rng.uniform(0, 2 * np.pi, 4)
    f = root_form_density(angles)
    t = 2 * np.pi * np.arange(4096) / 4096
    raw = np.prod(1 - np.cos(t[:, None] - angles[None, :]), axis=1)
    np.testing.assert_allclose(f(t), raw / raw.mean(), atol=1e-10)
    np.testing.assert_allclose(f(angles), 0.0, atol=1e-12)


def test_fejer_order_one_is_uniform():
    assert fejer_density(1, 0.4).allclose(TrigPoly.constant(1.0))


def test_fejer_order_two():
    assert fejer_density(2, 0.0).allclose(TrigPoly.from_dict({-1: 0.5, 0: 1.0, 1: 0.5}))


def test_fejer_peak_value():
    assert fejer_density(3, 0.0)(0.0) == pytest.approx(3.0)
    assert fejer_density(5, 1.1)(1.1) == pytest.approx(5.0)


def test_fejer_invalid_order():
    with pytest.raises(DomainError):
        fejer_density(0)


@pytest.mark.parametrize("m", [1, 2])
def test_power_kernel_first_power(m):
    expected = TrigPoly.from_dict({-m: -0.5, 0: 1.0, m: -0.5})
    assert power_kernel(m, 1).allclose(expected, atol=1e-15)


def test_power_kernel_square():
    expected = TrigPoly.from_dict({-2: 1 / 6, -1: -2 / 3, 0: 1.0, 1: -2 / 3, 2: 1 / 6})
    assert power_kernel(1, 2).allclose(expected, atol=1e-14)


def test_kernel_zeros_and_maxima():
    f = power_kernel(3, 2, rotation=0.3)
    np.testing.assert_allclose(f(kernel_zeros(3, 0.3)), 0.0, atol=1e-12)
    peak = f(kernel_maxima(3, 0.3))
    np.testing.assert_allclose(peak, peak.max())
    assert peak.max() == pytest.approx(np.max(f.to_grid(4096)), rel=1e-5)


def test_kernel_maxima_with_half_turn_rotation():
    np.testing.assert_allclose(np.sort(np.cos(kernel_maxima(2, np.pi / 2))), [-1.0, 1.0], atol=1e-12)


def test_bump_density_concentrates():
    base = TrigPoly.from_dict({-1: 0.5, 0: 1.0, 1: 0.5}, real=True)
    near = [bump_density(base, p).cumulative_mass(0.5) * 2 for p in (1, 4, 16)]
    assert near[0] < near[1] < near[2]


def test_bump_density_needs_nonnegative_base():
    with pytest.raises(DomainError):
        bump_density(TrigPoly.basis(0).add(TrigPoly.from_dict({-1: 1.0, 1: 1.0}, real=True)), 2)
