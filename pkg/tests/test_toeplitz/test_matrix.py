import numpy as np
import pytest

from src.fourier.trig_poly import TrigPoly
from src.states.measure import CircleMeasure
from src.toeplitz.matrix import (
    HermToeplitz,
    ToeplitzMatrix,
    compress,
    compress_measure,
    dirac_commutator,
    from_diagonals,
    from_moments,
    is_psd,
    spectral_norm,
    unit_diagonal,
)
from src.utils.error_handler import DomainError

TWO_COS = TrigPoly.from_dict({-1: 1.0, 1: 1.0}, real=True)


def dirac(n):
    return np.diag(np.arange(1, n + 1)).astype(complex)


def test_compress_constant_is_identity():
    np.testing.assert_allclose(compress(TrigPoly.constant(1.0), 3).to_dense(), np.eye(3))


def test_compress_two_cos():
    np.testing.assert_allclose(compress(TWO_COS, 2).to_dense(), [[0, 1], [1, 0]])


def test_compress_one_minus_cos():
    f = TrigPoly.from_dict({-1: -0.5, 0: 1.0, 1: -0.5}, real=True)
    np.testing.assert_allclose(compress(f, 2).to_dense(), [[1, -0.5], [-0.5, 1]])


def test_compress_entries_follow_coefficients(rng):
    f = TrigPoly(rng.normal(size=9) + 1j * rng.normal(size=9))
    dense = compress(f, 6).to_dense()
    for i in range(6):
        for j in range(6):
            assert dense[i, j] == pytest.approx(f.coeff(i - j))
    np.testing.assert_allclose(dense[:-1, :-1], dense[1:, 1:])


def test_compress_of_real_function_is_hermitian():
    assert isinstance(compress(TWO_COS, 4), HermToeplitz)


def test_hermitian_requires_conjugate_symmetry():
    with pytest.raises(DomainError):
        HermToeplitz(2, np.array([1.0, 0.0, 2.0]))


def test_wrong_diagonal_count():
    with pytest.raises(DomainError):
        ToeplitzMatrix(3, np.zeros(4))


def test_commutator_of_identity_vanishes():
    assert np.allclose(dirac_commutator(HermToeplitz.identity(4)).to_dense(), 0)


def test_commutator_two_by_two():
    c, a = 0.3 + 0.4j, 0.7
    T = from_diagonals({-1: np.conj(c), 0: a, 1: c}, 2)
    np.testing.assert_allclose(dirac_commutator(T).to_dense(), [[0, -np.conj(c)], [c, 0]])


def test_commutator_matches_dense_product(rng):
    n = 5
    diags = rng.normal(size=2 * n - 1) + 1j * rng.normal(size=2 * n - 1)
    T = ToeplitzMatrix(n, diags)
    D = dirac(n)
    dense = T.to_dense()
    np.testing.assert_allclose(dirac_commutator(T).to_dense(), D @ dense - dense @ D, atol=1e-12)


def test_commutator_scales_unit_diagonal():
    np.testing.assert_allclose(dirac_commutator(unit_diagonal(4, 2)).to_dense(), 2 * unit_diagonal(4, 2).to_dense())


@pytest.mark.parametrize(
    "matrix, expected",
    [
        (np.eye(3), 1.0),
        (np.array([[0, -1], [1, 0]]), 1.0),
        (compress(TWO_COS, 3), np.sqrt(2)),
    ],
)
def test_spectral_norm(matrix, expected):
    assert spectral_norm(matrix) == pytest.approx(expected, abs=1e-12)


def test_is_psd():
    assert is_psd(HermToeplitz.identity(3))
    assert is_psd(compress(TrigPoly.from_dict({-1: -0.5, 0: 1.0, 1: -0.5}, real=True), 2))
    ones = HermToeplitz(2, np.array([1.0, 1.0, 1.0]))
    assert not is_psd(ones - HermToeplitz.identity(2).scale(2.0))


def test_compress_nonnegative_function_is_psd():
    # 1 + 2cos t is not, but its square shifted is
    negative = TrigPoly.from_dict({-1: 1.0, 0: 1.0, 1: 1.0}, real=True)
    assert not is_psd(compress(negative, 3))
    assert is_psd(compress(negative.multiply(negative), 5))


def test_compress_measure_of_atom():
    n, angle = 4, 0.8
    T = compress_measure(CircleMeasure.dirac(angle), n)
    ks = np.arange(-(n - 1), n)
    np.testing.assert_allclose(T.diags, np.exp(-1j * ks * angle))


def test_compress_measure_agrees_with_compress():
    f = TrigPoly.from_dict({-2: 0.1j, -1: -0.3, 0: 1.0, 1: -0.3, 2: -0.1j}, density=True)
    np.testing.assert_allclose(
        compress_measure(CircleMeasure.from_density(f), 4).to_dense(), compress(f, 4).to_dense(), atol=1e-14
    )


def test_from_moments_needs_odd_length():
    with pytest.raises(DomainError):
        from_moments(np.ones(4))
