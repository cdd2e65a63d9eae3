# src/states/measure.py
"""Probability measures on the circle: finitely many atoms plus a trigonometric density."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..fourier.trig_poly import TrigPoly
from ..utils.error_handler import DomainError

TWO_PI = 2 * np.pi
MASS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class CircleMeasure:
    """
    Positive measure Σ_i w_i ev_{λ_i} + f dλ on the circle.

    Attributes:
        angles: Atom positions, reduced to [0, 2π).
        weights: Nonnegative atom masses.
        density: Optional nonnegative real polynomial; its mass is f̂(0).
    """

    angles: np.ndarray
    weights: np.ndarray
    density: Optional[TrigPoly] = None

    def __post_init__(self):
        angles = np.mod(np.asarray(self.angles, dtype=float).reshape(-1), TWO_PI)
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if angles.shape != weights.shape:
            raise DomainError(f"{angles.size} atom angles but {weights.size} weights")
        if np.any(weights < 0):
            raise DomainError("Atom weights must be nonnegative")
        if self.density is not None:
            if not self.density.real:
                raise DomainError("Measure densities must be real polynomials")
            if not self.density.is_nonnegative(1e-8):
                raise DomainError("Measure density takes negative values")
        angles.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "weights", weights)

    # ------------------------------------------------------------------ #
    # constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def dirac(cls, angle: float) -> "CircleMeasure":
        """Point evaluation ev_λ."""
        return cls(np.array([angle]), np.array([1.0]))

    @classmethod
    def atomic(cls, atoms: Iterable[Tuple[float, float]]) -> "CircleMeasure":
        """Measure from (angle, weight) pairs."""
        pairs = list(atoms)
        angles = np.array([a for a, _ in pairs], dtype=float)
        weights = np.array([w for _, w in pairs], dtype=float)
        return cls(angles, weights)

    @classmethod
    def uniform(cls) -> "CircleMeasure":
        """Normalized Haar measure."""
        return cls.from_density(TrigPoly.constant(1.0))

    @classmethod
    def from_density(cls, density: TrigPoly) -> "CircleMeasure":
        return cls(np.zeros(0), np.zeros(0), density)

    @classmethod
    def mixture(cls, weights: Sequence[float], measures: Sequence["CircleMeasure"]) -> "CircleMeasure":
        """Convex (or any nonnegative) combination of measures."""
        if len(weights) != len(measures):
            raise DomainError("Mixture needs one weight per measure")
        angles, masses, density = [], [], None
        for w, mu in zip(weights, measures):
            if w < 0:
                raise DomainError("Mixture weights must be nonnegative")
            angles.append(mu.angles)
            masses.append(w * mu.weights)
            if mu.density is not None:
                part = mu.density.scale(float(w))
                density = part if density is None else density.add(part)
        return cls(np.concatenate(angles) if angles else np.zeros(0),
                   np.concatenate(masses) if masses else np.zeros(0),
                   density)

    # ------------------------------------------------------------------ #
    # properties
    # ------------------------------------------------------------------ #
    @property
    def atom_mass(self) -> float:
        return float(np.sum(self.weights))

    @property
    def density_mass(self) -> float:
        return 0.0 if self.density is None else self.density.mass

    @property
    def total_mass(self) -> float:
        return self.atom_mass + self.density_mass

    def is_state(self, tol: float = MASS_TOL) -> bool:
        """Probability measure check: total mass 1."""
        return abs(self.total_mass - 1.0) <= tol

    def require_state(self, what: str = "measure") -> None:
        if not self.is_state(1e-9):
            raise DomainError(f"{what} is not a state: total mass {self.total_mass:.12g}")

    def moment(self, k: int) -> complex:
        """∫ e^{ikt} dμ."""
        value = complex(np.sum(self.weights * np.exp(1j * k * self.angles)))
        if self.density is not None:
            value += self.density.coeff(-k)
        return value

    def moments(self, n: int) -> np.ndarray:
        """Moments for k = -(n-1)..n-1."""
        return np.array([self.moment(k) for k in range(-(n - 1), n)])

    def integrate(self, f: TrigPoly) -> float:
        """∫ f dμ for a real polynomial f."""
        value = float(np.sum(self.weights * np.real(f.evaluate(self.angles)))) if self.weights.size else 0.0
        if self.density is not None:
            value += float(np.real(np.sum(f.coeffs * self.density.padded(f.degree)[::-1])))
        return value

    def mass_between(self, a: float, b: float) -> float:
        """Mass of the arc [a, b) for a ≤ b ≤ a + 2π, angles unwrapped from a."""
        if b < a:
            raise DomainError("Arc end precedes its start")
        shifted = np.mod(self.angles - a, TWO_PI)
        mass = float(np.sum(self.weights[shifted < (b - a)]))
        if self.density is not None:
            mass += self.density.cumulative_mass(b) - self.density.cumulative_mass(a)
        return mass

    # ------------------------------------------------------------------ #
    # transformations
    # ------------------------------------------------------------------ #
    def rotate(self, alpha: float) -> "CircleMeasure":
        """Push forward under t ↦ t + alpha."""
        density = None if self.density is None else self.density.rotate(alpha)
        return CircleMeasure(self.angles + alpha, self.weights, density)

    def merged(self, tol: float = 1e-12) -> "CircleMeasure":
        """Combine atoms closer than ``tol`` and drop zero weights."""
        if self.weights.size == 0:
            return self
        order = np.argsort(self.angles)
        angles, weights = [], []
        for a, w in zip(self.angles[order], self.weights[order]):
            if angles and abs(a - angles[-1]) <= tol:
                weights[-1] += w
            else:
                angles.append(a)
                weights.append(w)
        if len(angles) > 1 and abs(angles[0] + TWO_PI - angles[-1]) <= tol:
            weights[0] += weights.pop()
            angles.pop()
        keep = [i for i, w in enumerate(weights) if w > 0]
        return CircleMeasure(np.array(angles)[keep], np.array(weights)[keep], self.density)

    def snap_to_roots_of_unity(self, m: int) -> "CircleMeasure":
        """
        Move all mass onto the m-th roots of unity 2πj/m.

        Each atom goes to its nearest root; the density mass of the arc cell
        [2πj/m - π/m, 2πj/m + π/m) goes to root j.
        """
        if m < 1:
            raise DomainError(f"Need m >= 1 roots of unity, got {m}")
        cell = TWO_PI / m
        masses = np.zeros(m)
        if self.weights.size:
            index = np.mod(np.rint(self.angles / cell).astype(int), m)
            np.add.at(masses, index, self.weights)
        if self.density is not None:
            edges = cell * np.arange(m + 1) - cell / 2
            cumulative = np.asarray(self.density.cumulative_mass(edges))
            masses += np.diff(cumulative)
        masses = np.clip(masses, 0.0, None)
        return CircleMeasure(cell * np.arange(m), masses)

    def __repr__(self) -> str:
        density = "none" if self.density is None else f"degree {self.density.degree}"
        return f"CircleMeasure(atoms={self.weights.size}, density={density}, mass={self.total_mass:.6g})"
