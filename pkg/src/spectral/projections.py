# src/spectral/projections.py
"""
Projections used by the distance solver.

Feasible commutators H = -i[D_n, T] form the set
    C = {Hermitian Toeplitz H with zero main diagonal, ‖H‖ ≤ 1},
the intersection of a linear subspace and the operator-norm unit ball. Both
pieces have exact Frobenius projections; the solver alternates between them
and carries a correction term from one sweep to the next.
"""

from functools import lru_cache
from typing import Tuple

import numpy as np


@lru_cache(maxsize=64)
def _offsets(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Flat diagonal offsets i - j of an n x n matrix and the length of each diagonal."""
    index = np.arange(n)
    offsets = (index[:, None] - index[None, :]).ravel()
    lengths = n - np.abs(np.arange(-(n - 1), n))
    offsets.flags.writeable = False
    lengths.flags.writeable = False
    return offsets, lengths


def toeplitz_from_coeffs(h: np.ndarray) -> np.ndarray:
    """Dense Hermitian Toeplitz matrix with zero diagonal and diagonal -k equal to h[k-1]."""
    h = np.asarray(h, dtype=complex)
    n = h.size + 1
    offsets, _ = _offsets(n)
    diags = np.concatenate([np.conj(h[::-1]), [0.0], h])
    return diags[offsets + n - 1].reshape(n, n)


def coeffs_from_matrix(M: np.ndarray) -> np.ndarray:
    """
    Frobenius projection onto the subspace, in coefficient form.

    Each diagonal is replaced by its mean, the pair (k, -k) is made conjugate
    symmetric and the main diagonal is dropped.
    """
    n = M.shape[0]
    offsets, lengths = _offsets(n)
    flat = M.ravel()
    slots = offsets + n - 1
    real = np.bincount(slots, weights=flat.real, minlength=2 * n - 1)
    imag = np.bincount(slots, weights=flat.imag, minlength=2 * n - 1)
    means = (real + 1j * imag) / lengths
    lower = means[n:]
    upper = means[n - 2::-1]
    return 0.5 * (lower + np.conj(upper))


def project_ball(M: np.ndarray, radius: float = 1.0) -> np.ndarray:
    """Nearest Hermitian matrix with spectrum in [-radius, radius]."""
    evals, vectors = np.linalg.eigh(M)
    clipped = np.clip(evals, -radius, radius)
    return (vectors * clipped) @ vectors.conj().T


def frobenius_norm(h: np.ndarray) -> float:
    """Frobenius norm of toeplitz_from_coeffs(h), computed from the coefficients."""
    n = h.size + 1
    return float(np.sqrt(2.0 * np.sum((n - np.arange(1, n)) * np.abs(h) ** 2)))
