# src/states/pure.py
"""
Pure states of the Toeplitz operator system C(S¹)^(n).

A pure state is a vector state T ↦ ⟨ξ, Tᵀξ⟩ whose polynomial
Q_ξ(z) = Σ_k ξ_k z^{n-k-1} has all its zeros on the circle, so it is stored by
its n - 1 root angles. Its pullback to C(S¹) is the density |Q_ξ(e^{it})|²,
proportional to Π_j (1 - cos(t - θ_j)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from ..config.settings import settings
from ..fourier.kernels import kernel_maxima, kernel_zeros
from ..fourier.trig_poly import TrigPoly
from ..toeplitz.matrix import ToeplitzMatrix
from ..utils.error_handler import ConditioningError, DegenerateInputError, DomainError
from ..utils.logger import logger

TWO_PI = 2 * np.pi
WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PureState:
    """
    Pure state given by the root angles of Q_ξ.

    Attributes:
        roots: The n - 1 root angles, reduced to [0, 2π). Repeated angles are
            roots of higher multiplicity.
    """

    roots: np.ndarray

    def __post_init__(self):
        roots = np.mod(np.asarray(self.roots, dtype=float).reshape(-1), TWO_PI)
        if not np.all(np.isfinite(roots)):
            raise DomainError("Root angles must be finite")
        roots.setflags(write=False)
        object.__setattr__(self, "roots", roots)

    @property
    def n(self) -> int:
        return self.roots.size + 1

    @cached_property
    def xi(self) -> np.ndarray:
        """Unit vector of Q_ξ's coefficients, highest power first, leading entry positive."""
        coeffs = np.atleast_1d(np.poly(np.exp(1j * self.roots))).astype(complex)
        coeffs = coeffs / np.linalg.norm(coeffs)
        coeffs.setflags(write=False)
        return coeffs

    @cached_property
    def density(self) -> TrigPoly:
        """Pullback density |Q_ξ(e^{it})|² as a normalized trigonometric polynomial."""
        xi = self.xi
        # ascending coefficients of Q correlated with themselves
        coeffs = np.convolve(xi[::-1], np.conj(xi))
        coeffs = 0.5 * (coeffs + np.conj(coeffs[::-1]))
        return TrigPoly(coeffs, density=True)

    def moments(self) -> np.ndarray:
        """Values m_k on E_k for k = -(n-1)..n-1."""
        return np.asarray(self.density.coeffs[::-1])

    def evaluate(self, T: ToeplitzMatrix) -> float:
        if T.n != self.n:
            raise DomainError(f"State has size {self.n} but the matrix has size {T.n}")
        if not T.is_hermitian():
            raise DomainError("States are evaluated on Hermitian matrices")
        return float(np.real(np.vdot(self.xi, T.to_dense().T @ self.xi)))

    def recomputed_roots(self) -> np.ndarray:
        """Root angles recovered from ξ; only well conditioned for simple roots."""
        if self.n == 1:
            return np.zeros(0)
        return np.sort(np.mod(np.angle(np.roots(self.xi)), TWO_PI))

    def root_drift(self) -> float:
        """Largest distance of a recomputed root from the unit circle."""
        if self.n == 1:
            return 0.0
        return float(np.max(np.abs(1.0 - np.abs(np.roots(self.xi)))))

    def rotate(self, alpha: float) -> "PureState":
        """The state whose pullback is rotated by alpha."""
        return PureState(self.roots + alpha)

    def __repr__(self) -> str:
        return f"PureState(n={self.n})"


def pure_from_roots(angles: Sequence[float]) -> PureState:
    """Pure state on C(S¹)^(len(angles)+1) with the given root angles."""
    return PureState(np.asarray(list(angles), dtype=float))


def random_pure_state(n: int, rng: np.random.Generator) -> PureState:
    """Pure state on C(S¹)^(n) with i.i.d. uniform root angles."""
    if n < 1:
        raise DomainError(f"State size must be positive, got {n}")
    return PureState(rng.uniform(0.0, TWO_PI, size=n - 1))


def fejer_state(n: int, theta: float = 0.0) -> PureState:
    """
    Pure state whose pullback is the Fejér kernel of order n peaked at theta.

    Its roots are the n-th roots of unity other than 1, rotated by theta.
    """
    if n < 1:
        raise DomainError(f"Fejér state needs n >= 1, got {n}")
    return PureState(theta + TWO_PI * np.arange(1, n) / n)


def approx_state(
    weights: Sequence[float],
    N: float,
    l: int = 0,
    mu_extra: Optional[float] = None,
) -> PureState:
    """
    Pure state whose density ratios at the m-th roots of unity approach ``weights``.

    Root j sits at λ_j - sqrt(2 t_j / N) with λ_j = 2πj/m (j = 1..m), so the
    factor vanishing near λ_j takes the value 1 - cos(sqrt(2 t_j / N)) ≈ t_j / N
    there. With l ≥ 1 an extra root of multiplicity l is placed at mu_extra and
    the weights are divided by (1 - cos(λ_j - mu_extra))^l beforehand, giving a
    state on C(S¹)^(m+1+l).

    Args:
        weights: Nonnegative t_1..t_m summing to 1.
        N: Positive sharpness parameter; the ratio error decays like N^{-1/2}.
        l: Multiplicity of the extra root.
        mu_extra: Angle of the extra root, away from every λ_j.

    Raises:
        DomainError: On invalid weights, N, or an extra root on some λ_j.
    """
    t = np.asarray(list(weights), dtype=float)
    if t.size == 0:
        raise DomainError("approx_state needs at least one weight")
    if np.any(t < 0):
        raise DomainError("Weights must be nonnegative")
    if abs(float(np.sum(t)) - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(f"Weights must sum to 1, got {np.sum(t):.12g}")
    if not N > 0:
        raise DomainError(f"N must be positive, got {N}")
    if l < 0:
        raise DomainError(f"Extra root multiplicity must be nonnegative, got {l}")

    m = t.size
    lambdas = TWO_PI * np.arange(1, m + 1) / m
    extra = np.zeros(0)
    if l >= 1:
        if mu_extra is None:
            raise DomainError("An extra root of positive multiplicity needs mu_extra")
        gaps = 1.0 - np.cos(lambdas - mu_extra)
        if np.min(gaps) <= 1e-18:
            raise DomainError(f"mu_extra = {mu_extra} coincides with a root of unity")
        t = t / gaps ** l
        t = t / np.sum(t)
        extra = np.full(l, float(mu_extra))

    roots = np.concatenate([lambdas - np.sqrt(2.0 * t / N), extra])
    logger.debug(f"approx_state m={m}, N={N:g}, l={l}: size {roots.size + 1}")
    return PureState(roots)


def approx_ratio(state: PureState, m: int) -> np.ndarray:
    """Density values at the m-th roots of unity 2πj/m (j = 1..m), normalized to sum 1."""
    values = np.asarray(state.density.evaluate(TWO_PI * np.arange(1, m + 1) / m))
    total = float(np.sum(values))
    if total <= 0:
        raise DegenerateInputError("Density vanishes at every root of unity")
    return values / total


def power_state(m: int, n: int, rotation: float = 0.0) -> PureState:
    """
    Pure state on C(S¹)^(nm+1) pulling back to the power kernel.

    Its roots are the zeros rotation + 2πj/m of 1 - cos(m(t - rotation)),
    each with multiplicity n.
    """
    if m < 1 or n < 1:
        raise DomainError(f"power_state needs m, n >= 1, got m={m}, n={n}")
    return PureState(np.repeat(kernel_zeros(m, rotation), n))


def product_state(phi: PureState, m: int, n: int, rotation: float = 0.0) -> PureState:
    """
    Pure state whose density is φ's density times the power kernel, renormalized.

    Raises:
        DegenerateInputError: If φ's density vanishes at every kernel maximum,
            where the product would lose all mass in the limit.
    """
    maxima = kernel_maxima(m, rotation)
    values = np.asarray(phi.density.evaluate(maxima))
    if np.max(values) <= settings.DENSITY_TOL:
        raise DegenerateInputError(
            f"Density vanishes at all {m} kernel maxima (rotation {rotation:.6g})"
        )
    return PureState(np.concatenate([phi.roots, power_state(m, n, rotation).roots]))


def pure_from_density(density: TrigPoly, drift_tol: float = 1e-4) -> PureState:
    """
    Pure state pulling back to a given density of degree n - 1 (Fejér–Riesz).

    The density must be of root form, i.e. vanish at n - 1 points counted
    with multiplicity. The roots of z^{n-1} g(z) come in pairs on the circle;
    each pair contributes one root angle.

    Raises:
        ConditioningError: If a root lies further than ``drift_tol`` from the circle,
            which happens when the density is positive somewhere it should vanish.
    """
    g = density.trimmed(1e-14)
    degree = g.degree
    if degree == 0:
        return PureState(np.zeros(0))
    roots = np.roots(g.coeffs[::-1])
    drift = float(np.max(np.abs(1.0 - np.abs(roots))))
    if drift > drift_tol:
        raise ConditioningError("Density is not of root form", drift)

    angles = np.sort(np.mod(np.angle(roots), TWO_PI))
    # start the pairing after the widest gap so no pair straddles 0
    gaps = np.diff(np.concatenate([angles, [angles[0] + TWO_PI]]))
    start = (int(np.argmax(gaps)) + 1) % angles.size
    angles = np.roll(angles, -start)
    pairs = np.exp(1j * angles).reshape(-1, 2)
    return PureState(np.angle(pairs.sum(axis=1)))
