# src/states/moments.py
"""
General states of C(S¹)^(n) in moment coordinates, and the pullback to C(S¹).

A linear functional on Toeplitz matrices is fixed by its values
m_k = φ(E_k) on the unit diagonals; then φ(T) = Σ_k t_k m_k. Composing with
the compression f ↦ P_n f P_n gives the measure with density
g(t) = Σ_k m_{-k} e^{ikt}, which is nonnegative exactly when φ is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from ..fourier.trig_poly import TrigPoly
from ..toeplitz.matrix import HermToeplitz, ToeplitzMatrix
from ..utils.error_handler import DomainError
from ..utils.logger import logger
from .measure import CircleMeasure
from .pure import PureState

POSITIVITY_TOL = 1e-8
POSITIVITY_GRID = 2048


@dataclass(frozen=True, eq=False)
class MomentState:
    """
    Unital Hermitian functional on C(S¹)^(n) given by its moments.

    Attributes:
        n: System size.
        moments: Array of length 2n - 1; ``moments[k + n - 1]`` is m_k.
    """

    n: int
    moments: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"State size must be positive, got {self.n}")
        moments = np.array(self.moments, dtype=complex).reshape(-1)
        if moments.size != 2 * self.n - 1:
            raise DomainError(f"Expected {2 * self.n - 1} moments for n={self.n}, got {moments.size}")
        if abs(moments[self.n - 1] - 1.0) > 1e-9:
            raise DomainError(f"State is not unital: m_0 = {moments[self.n - 1]:.6g}")
        if np.max(np.abs(moments - np.conj(moments[::-1]))) > 1e-9:
            raise DomainError("Moments are not conjugate symmetric")
        moments = 0.5 * (moments + np.conj(moments[::-1]))
        moments[self.n - 1] = 1.0
        moments.setflags(write=False)
        object.__setattr__(self, "moments", moments)

    def moment(self, k: int) -> complex:
        if abs(k) > self.n - 1:
            raise DomainError(f"Moment {k} does not exist for n={self.n}")
        return complex(self.moments[k + self.n - 1])

    @property
    def density(self) -> TrigPoly:
        """Pullback density; unflagged, since positivity is not checked here."""
        return TrigPoly(self.moments[::-1], real=True)

    def is_positive(self, tol: float = POSITIVITY_TOL) -> bool:
        """Positivity on positive Toeplitz matrices, certified on the pullback density."""
        return self.density.is_nonnegative(tol, grid_size=POSITIVITY_GRID)

    def moment_matrix(self) -> HermToeplitz:
        """Toeplitz matrix with diags(k) = m_k; PSD for positive states."""
        return HermToeplitz(self.n, self.moments)

    def evaluate(self, T: ToeplitzMatrix) -> float:
        if T.n != self.n:
            raise DomainError(f"State has size {self.n} but the matrix has size {T.n}")
        if not T.is_hermitian():
            raise DomainError("States are evaluated on Hermitian matrices")
        return float(np.real(np.dot(T.diags, self.moments)))

    def rotate(self, alpha: float) -> "MomentState":
        """The state whose pullback is rotated by alpha: m_k ↦ e^{ikα} m_k."""
        ks = np.arange(-(self.n - 1), self.n)
        return MomentState(self.n, self.moments * np.exp(1j * ks * alpha))

    def __repr__(self) -> str:
        return f"MomentState(n={self.n})"


State = Union[PureState, MomentState]


def to_moment_state(state: State) -> MomentState:
    if isinstance(state, MomentState):
        return state
    return MomentState(state.n, state.moments())


def rotate_state(state: State, alpha: float) -> State:
    """Rotate a pure state's roots or a moment state's moments by alpha."""
    return state.rotate(alpha)


def state_moments(state: State) -> np.ndarray:
    """The moment array of either state representation."""
    if isinstance(state, MomentState):
        return np.asarray(state.moments)
    return state.moments()


def evaluate(state: State, T: ToeplitzMatrix) -> float:
    """φ(T) for a Hermitian Toeplitz matrix of matching size."""
    return state.evaluate(T)


def pullback(state: State) -> CircleMeasure:
    """
    The state φ ∘ R_n on C(S¹) as an absolutely continuous measure.

    Raises:
        DomainError: If a moment state is not positive.
    """
    if isinstance(state, PureState):
        return CircleMeasure.from_density(state.density)
    if not state.is_positive():
        raise DomainError("Moment sequence does not define a positive state")
    return CircleMeasure.from_density(state.density)


def moments_from_measure(mu: CircleMeasure, n: int) -> MomentState:
    """
    Moments m_k = ∫ e^{ikt} dμ for |k| ≤ n - 1.

    On densities of degree at most n - 1 this inverts ``pullback``. Other
    measures need not give a positive functional on C(S¹)^(n); a single atom
    never does for n ≥ 2.
    """
    if n < 1:
        raise DomainError(f"Truncation size must be positive, got {n}")
    mu.require_state()
    result = MomentState(n, mu.moments(n) / mu.total_mass)
    if mu.weights.size and not result.is_positive():
        logger.debug(f"Moments of a measure with {mu.weights.size} atoms give a non-positive functional at n={n}")
    return result
