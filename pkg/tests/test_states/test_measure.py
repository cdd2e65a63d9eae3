import numpy as np
import pytest

from src.fourier.trig_poly import TrigPoly
from src.states.measure import CircleMeasure
from src.utils.error_handler import DomainError

ONE_PLUS_COS = TrigPoly.from_dict({-1: 0.5, 0: 1.0, 1: 0.5}, density=True)


def test_atoms_reduced_to_circle():
    mu = CircleMeasure.dirac(2 * np.pi + 0.5)
    assert mu.angles[0] == pytest.approx(0.5)


def test_negative_weight_rejected():
    with pytest.raises(DomainError):
        CircleMeasure(np.array([0.0, 1.0]), np.array([1.5, -0.5]))


def test_negative_density_rejected():
    with pytest.raises(DomainError):
        CircleMeasure.from_density(TrigPoly.from_dict({-1: 1.0, 0: 1.0, 1: 1.0}, real=True))


def test_mass_and_state_check():
    mu = CircleMeasure.mixture([0.25, 0.75], [CircleMeasure.dirac(1.0), CircleMeasure.from_density(ONE_PLUS_COS)])
    assert mu.atom_mass == pytest.approx(0.25)
    assert mu.density_mass == pytest.approx(0.75)
    assert mu.is_state()


def test_moments_of_atom():
    mu = CircleMeasure.dirac(0.7)
    assert mu.moment(3) == pytest.approx(np.exp(3j * 0.7))


def test_moments_of_density():
    mu = CircleMeasure.from_density(ONE_PLUS_COS.rotate(0.4))
    assert mu.moment(1) == pytest.approx(0.5 * np.exp(1j * 0.4))


def test_integrate_matches_quadrature():
    f = TrigPoly.from_dict({-2: 0.3, -1: 0.1j, 0: 0.5, 1: -0.1j, 2: 0.3}, real=True)
    mu = CircleMeasure.mixture([0.5, 0.5], [CircleMeasure.dirac(1.2), CircleMeasure.from_density(ONE_PLUS_COS)])
    t = 2 * np.pi * np.arange(2048) / 2048
    expected = 0.5 * f(1.2) + 0.5 * np.mean(f(t) * ONE_PLUS_COS(t))
    assert mu.integrate(f) == pytest.approx(expected, abs=1e-12)


def test_mass_between_arcs():
    mu = CircleMeasure.from_density(ONE_PLUS_COS)
    assert mu.mass_between(0.0, 2 * np.pi) == pytest.approx(1.0)
    assert mu.mass_between(0.0, np.pi) == pytest.approx(0.5)
    atoms = CircleMeasure.atomic([(0.1, 0.5), (6.0, 0.5)])
    assert atoms.mass_between(5.5, 5.5 + 1.0) == pytest.approx(1.0)


def test_rotation_moves_atoms_and_density():
    mu = CircleMeasure.mixture([0.5, 0.5], [CircleMeasure.dirac(0.0), CircleMeasure.from_density(ONE_PLUS_COS)])
    rotated = mu.rotate(1.0)
    assert rotated.angles[0] == pytest.approx(1.0)
    assert rotated.density(1.0) == pytest.approx(mu.density(0.0))


def test_merged_combines_coincident_atoms():
    mu = CircleMeasure.atomic([(0.5, 0.25), (0.5, 0.25), (2 * np.pi - 1e-14, 0.25), (0.0, 0.25)])
    merged = mu.merged()
    assert merged.weights.size == 2
    assert merged.total_mass == pytest.approx(1.0)


def test_snap_of_root_of_unity_atom_is_exact():
    mu = CircleMeasure.dirac(np.pi / 2)
    snapped = mu.snap_to_roots_of_unity(4)
    np.testing.assert_allclose(snapped.weights, [0, 1, 0, 0])


def test_snap_of_density_keeps_mass_per_cell():
    snapped = CircleMeasure.from_density(ONE_PLUS_COS).snap_to_roots_of_unity(2)
    # cell around 0 is [-π/2, π/2), mass (π + 2)/(2π)
    np.testing.assert_allclose(snapped.weights, [(np.pi + 2) / (2 * np.pi), (np.pi - 2) / (2 * np.pi)], atol=1e-12)
    assert snapped.total_mass == pytest.approx(1.0)


def test_mixture_needs_matching_weights():
    with pytest.raises(DomainError):
        CircleMeasure.mixture([1.0], [CircleMeasure.uniform(), CircleMeasure.dirac(0.0)])
