# src/toeplitz/vandermonde.py
"""
Carathéodory–Fejér (Vandermonde) decomposition of positive Toeplitz matrices.

A PSD Toeplitz matrix of rank r ≤ n - 1 is uniquely a positive combination
Σ d_k |f_{λ_k}⟩⟨f_{λ_k}| of projectors onto the geometric vectors
f_λ = n^{-1/2} (e^{-ijλ})_{j=0..n-1}; then diags(k) = (1/n) Σ d_j e^{-ikλ_j}.
The nodes are the roots of the polynomial whose coefficients span the kernel
of the leading (r+1) x (r+1) block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..config.settings import settings
from ..utils.error_handler import ConditioningError, DomainError, NumericFailureError, error_handler
from ..utils.logger import logger
from .matrix import HermToeplitz, ToeplitzMatrix

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class VandermondeAtom:
    """One term d |f_λ⟩⟨f_λ| of a Vandermonde decomposition."""

    weight: float
    node: float

    def __post_init__(self):
        if not self.weight > 0:
            raise DomainError(f"Vandermonde weights must be positive, got {self.weight}")
        object.__setattr__(self, "node", float(np.mod(self.node, TWO_PI)))


def geometric_vector(n: int, node: float) -> np.ndarray:
    """Unit vector f_λ = n^{-1/2} (1, e^{-iλ}, ..., e^{-i(n-1)λ})."""
    return np.exp(-1j * node * np.arange(n)) / np.sqrt(n)


def reconstruct(atoms: Sequence[VandermondeAtom], n: int) -> HermToeplitz:
    """The Toeplitz matrix Σ d_k |f_{λ_k}⟩⟨f_{λ_k}|."""
    ks = np.arange(-(n - 1), n)
    diags = np.zeros(2 * n - 1, dtype=complex)
    for atom in atoms:
        diags += atom.weight * np.exp(-1j * ks * atom.node) / n
    return HermToeplitz(n, diags)


def _numerical_rank(evals: np.ndarray, tol: float) -> int:
    scale = float(np.max(np.abs(evals)))
    if scale == 0.0:
        return 0
    return int(np.sum(evals > tol * scale))


def _nodes_from_kernel(block: np.ndarray) -> np.ndarray:
    """Angles of the roots of Σ_k u_k z^k for u spanning the kernel of ``block``."""
    _, vectors = np.linalg.eigh(block)
    kernel = vectors[:, 0]
    # np.roots expects the highest power first
    roots = np.roots(kernel[::-1])
    if roots.size == 0:
        return np.zeros(0)
    drift = float(np.max(np.abs(1.0 - np.abs(roots))))
    if drift > settings.ROOT_DRIFT_TOL:
        raise ConditioningError("Kernel polynomial has roots off the unit circle", drift)
    logger.debug(f"Kernel polynomial of degree {roots.size}: root drift {drift:.2e}")
    return np.mod(np.angle(roots / np.abs(roots)), TWO_PI)


def _fit_weights(first_column: np.ndarray, nodes: np.ndarray, n: int) -> np.ndarray:
    """Least-squares weights matching diags(k) = (1/n) Σ d_j e^{-ikλ_j}, k = 0..n-1."""
    system = np.exp(-1j * np.outer(np.arange(n), nodes)) / n
    weights, *_ = np.linalg.lstsq(system, first_column, rcond=None)
    return weights.real


def _decompose_singular(dense: np.ndarray, rank: int, tol: float) -> List[VandermondeAtom]:
    n = dense.shape[0]
    if rank == 0:
        return []
    nodes = _nodes_from_kernel(dense[:rank + 1, :rank + 1])
    weights = _fit_weights(dense[:, 0], nodes, n)

    keep = weights > tol * max(float(np.max(weights)), 0.0)
    if not np.all(keep):
        logger.debug(f"Dropping {int(np.sum(~keep))} nodes with negligible weight")
        nodes = nodes[keep]
        weights = _fit_weights(dense[:, 0], nodes, n)

    order = np.argsort(nodes)
    return [VandermondeAtom(float(weights[i]), float(nodes[i])) for i in order if weights[i] > 0]


@error_handler(NumericFailureError, "Vandermonde decomposition failed")
def vandermonde_decompose(T: ToeplitzMatrix, tol: Optional[float] = None) -> List[VandermondeAtom]:
    """
    Decompose a PSD Toeplitz matrix into geometric-vector projectors.

    Rank below n gives the unique decomposition. Full rank is reduced to
    that case by peeling off the largest multiple of |f_0⟩⟨f_0| that keeps the
    remainder positive (weight 1/⟨f_0, T⁻¹ f_0⟩); the result is valid but one
    of many.

    Args:
        T: Hermitian PSD Toeplitz matrix.
        tol: Relative eigenvalue threshold deciding the rank.

    Returns:
        Atoms sorted by node angle.

    Raises:
        DomainError: If T is not Hermitian PSD.
        ConditioningError: If the kernel polynomial's roots leave the circle.
    """
    tol = settings.RANK_TOL if tol is None else tol
    if not T.is_hermitian():
        raise DomainError("Vandermonde decomposition needs a Hermitian matrix")

    dense = T.to_dense()
    evals = np.linalg.eigvalsh(dense)
    scale = float(np.max(np.abs(evals)))
    if scale == 0.0:
        return []
    if evals[0] < -settings.PSD_TOL * max(scale, 1.0):
        raise DomainError(f"Matrix is not positive semidefinite (min eigenvalue {evals[0]:.3e})")

    rank = _numerical_rank(evals, tol)
    n = T.n
    logger.debug(f"Vandermonde decomposition n={n}, numerical rank {rank}")

    if rank < n:
        atoms = _decompose_singular(dense, rank, tol)
    else:
        anchor = geometric_vector(n, 0.0)
        solved = np.linalg.solve(dense, anchor)
        anchor_weight = 1.0 / float(np.real(np.vdot(anchor, solved)))
        remainder = dense - anchor_weight * np.outer(anchor, anchor.conj())
        remainder = 0.5 * (remainder + remainder.conj().T)
        rest_rank = min(_numerical_rank(np.linalg.eigvalsh(remainder), tol), n - 1)
        atoms = [VandermondeAtom(anchor_weight, 0.0)] + _decompose_singular(remainder, rest_rank, tol)
        atoms.sort(key=lambda atom: atom.node)

    residual = np.linalg.norm(reconstruct(atoms, n).to_dense() - dense)
    if residual > 1e-6 * np.linalg.norm(dense):
        logger.warning(f"Vandermonde reconstruction residual {residual:.3e} for n={n}")
    return atoms
