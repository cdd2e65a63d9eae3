# src/toeplitz/matrix.py
"""
Toeplitz matrices of the truncated circle.

Entry (i, j) of an n x n Toeplitz matrix depends only on i - j; the constant
value on the k-th descending diagonal is stored as ``diags[k + n - 1]``.
The compression of a function f onto the first n Fourier modes has
diags(k) = f̂(k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

import numpy as np
import scipy.linalg

from ..config.settings import settings
from ..fourier.trig_poly import TrigPoly
from ..utils.error_handler import DomainError, NumericFailureError, error_handler
from ..utils.logger import logger

HERMITIAN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ToeplitzMatrix:
    """
    Square Toeplitz matrix stored by its diagonals.

    Attributes:
        n: Matrix size.
        diags: Array of length 2n - 1; ``diags[k + n - 1]`` is the value on
            diagonal k = i - j.
    """

    n: int
    diags: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"Toeplitz size must be positive, got {self.n}")
        diags = np.array(self.diags, dtype=complex)
        if diags.shape != (2 * self.n - 1,):
            raise DomainError(
                f"Expected {2 * self.n - 1} diagonals for n={self.n}, got shape {diags.shape}"
            )
        diags.setflags(write=False)
        object.__setattr__(self, "diags", diags)

    @classmethod
    def from_dict(cls, n: int, diags: Mapping[int, complex]) -> "ToeplitzMatrix":
        dense = np.zeros(2 * n - 1, dtype=complex)
        for k, value in diags.items():
            if abs(k) > n - 1:
                raise DomainError(f"Diagonal {k} does not exist in a {n} x {n} matrix")
            dense[k + n - 1] = value
        return cls(n, dense)

    def diag(self, k: int) -> complex:
        """Value t_k on diagonal k = i - j."""
        if abs(k) > self.n - 1:
            return 0j
        return complex(self.diags[k + self.n - 1])

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-(self.n - 1), self.n)

    def to_dense(self) -> np.ndarray:
        """Materialize the full n x n matrix."""
        first_column = self.diags[self.n - 1:]
        first_row = self.diags[self.n - 1::-1]
        return scipy.linalg.toeplitz(first_column, first_row)

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        mirror = np.conj(self.diags[::-1])
        scale = max(1.0, float(np.max(np.abs(self.diags))))
        return bool(np.max(np.abs(self.diags - mirror)) <= tol * scale)

    def __add__(self, other: "ToeplitzMatrix") -> "ToeplitzMatrix":
        self._check_size(other)
        return _wrap(self.n, self.diags + other.diags)

    def __sub__(self, other: "ToeplitzMatrix") -> "ToeplitzMatrix":
        self._check_size(other)
        return _wrap(self.n, self.diags - other.diags)

    def scale(self, factor: complex) -> "ToeplitzMatrix":
        return _wrap(self.n, self.diags * factor)

    def _check_size(self, other: "ToeplitzMatrix"):
        if other.n != self.n:
            raise DomainError(f"Size mismatch: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n})"


@dataclass(frozen=True, eq=False, repr=False)
class HermToeplitz(ToeplitzMatrix):
    """Hermitian Toeplitz matrix: diags(-k) = conj(diags(k)), real main diagonal."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_hermitian():
            raise DomainError("Diagonals are not conjugate symmetric")
        # remove rounding asymmetry so that dense copies are exactly Hermitian
        symmetric = 0.5 * (self.diags + np.conj(self.diags[::-1]))
        symmetric.setflags(write=False)
        object.__setattr__(self, "diags", symmetric)

    @classmethod
    def identity(cls, n: int) -> "HermToeplitz":
        return cls.from_dict(n, {0: 1.0})


def _wrap(n: int, diags: np.ndarray) -> ToeplitzMatrix:
    candidate = ToeplitzMatrix(n, diags)
    if candidate.is_hermitian():
        return HermToeplitz(n, diags)
    return candidate


def unit_diagonal(n: int, k: int) -> ToeplitzMatrix:
    """E_k: ones on diagonal k, zeros elsewhere."""
    return _wrap(n, ToeplitzMatrix.from_dict(n, {k: 1.0}).diags)


def compress(f: TrigPoly, n: int) -> ToeplitzMatrix:
    """
    Compression P_n f P_n of multiplication by f onto the first n Fourier modes.

    Entry (i, j) is f̂(i - j); coefficients beyond degree n - 1 are discarded.
    Real functions give Hermitian matrices.
    """
    if n < 1:
        raise DomainError(f"Truncation size must be positive, got {n}")
    diags = f.padded(n - 1)
    if f.real:
        return HermToeplitz(n, diags)
    return ToeplitzMatrix(n, diags)


def from_moments(moments: np.ndarray) -> HermToeplitz:
    """
    Toeplitz matrix with diags(k) = m_{-k} from moments m_k = ∫ e^{ikt} dμ,
    k = -(n-1)..n-1. This is the compression of the measure.
    """
    moments = np.asarray(moments, dtype=complex).reshape(-1)
    if moments.size % 2 == 0:
        raise DomainError(f"Moment array must have odd length 2n-1, got {moments.size}")
    return HermToeplitz((moments.size + 1) // 2, moments[::-1])


def compress_measure(mu, n: int) -> HermToeplitz:
    """R_n applied to a measure: diags(k) = ∫ e^{-ikt} dμ."""
    if n < 1:
        raise DomainError(f"Truncation size must be positive, got {n}")
    return from_moments(mu.moments(n))


def from_diagonals(diags: Union[np.ndarray, Mapping[int, complex]], n: int) -> ToeplitzMatrix:
    """Toeplitz matrix from a dense k = -(n-1)..n-1 array or a sparse mapping."""
    if isinstance(diags, Mapping):
        return _wrap(n, ToeplitzMatrix.from_dict(n, diags).diags)
    return _wrap(n, np.asarray(diags, dtype=complex))


def dirac_commutator(T: ToeplitzMatrix) -> ToeplitzMatrix:
    """
    Commutator [D_n, T] with D_n = diag(1, ..., n).

    Entry (i, j) is (i - j) T_ij, so diagonal k is scaled by k and the main
    diagonal vanishes. Hermitian T gives an anti-Hermitian result.
    """
    scaled = T.offsets * T.diags
    return ToeplitzMatrix(T.n, scaled)


def _as_dense(M: Union[ToeplitzMatrix, np.ndarray]) -> np.ndarray:
    if isinstance(M, ToeplitzMatrix):
        return M.to_dense()
    dense = np.asarray(M, dtype=complex)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise DomainError(f"Expected a square matrix, got shape {dense.shape}")
    return dense


@error_handler(NumericFailureError, "spectral norm did not converge")
def spectral_norm(M: Union[ToeplitzMatrix, np.ndarray]) -> float:
    """
    Operator norm (largest singular value).

    Hermitian input uses the eigenvalues directly, anything else the SVD.
    """
    dense = _as_dense(M)
    if np.allclose(dense, dense.conj().T, atol=HERMITIAN_TOL, rtol=0.0):
        return float(np.max(np.abs(np.linalg.eigvalsh(dense))))
    return float(np.linalg.norm(dense, 2))


@error_handler(NumericFailureError, "Hermitian eigensolver did not converge")
def eigenvalues(T: ToeplitzMatrix) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian Toeplitz matrix."""
    if not T.is_hermitian():
        raise DomainError("Eigenvalues requested for a non-Hermitian matrix")
    return np.linalg.eigvalsh(T.to_dense())


def min_eigenvalue(T: ToeplitzMatrix) -> float:
    return float(eigenvalues(T)[0])


def is_psd(T: ToeplitzMatrix, tol: Optional[float] = None) -> bool:
    """True iff the smallest eigenvalue is at least -tol."""
    tol = settings.PSD_TOL if tol is None else tol
    smallest = min_eigenvalue(T)
    logger.debug(f"PSD check n={T.n}: min eigenvalue {smallest:.3e}, tol {tol:.1e}")
    return smallest >= -tol
