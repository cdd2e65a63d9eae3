# src/fourier/trig_poly.py
"""
Trigonometric polynomials on the circle.

A ``TrigPoly`` stores the Fourier coefficients f̂(-K), ..., f̂(K) of
f(t) = Σ_k f̂(k) e^{ikt} densely, with respect to the normalized Haar measure
(∫ e_k dλ = δ_{k,0}). Values are immutable so they can be shared between
worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Union

import numpy as np

from ..config.settings import settings
from ..utils.error_handler import DomainError

ArrayLike = Union[float, Iterable[float], np.ndarray]

# tolerance for the conjugate symmetry of `real` polynomials
REAL_TOL = 1e-12
# imaginary part discarded when evaluating `real` polynomials
IMAG_TOL = 1e-12


def _freeze(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=complex)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """
    Finite Fourier series with coefficients indexed k = -degree..degree.

    Attributes:
        coeffs: Dense coefficient array; ``coeffs[k + degree]`` is f̂(k).
        real: Whether f̂(-k) = conj(f̂(k)) holds (f is real valued).
        density: Whether f is a probability density (f̂(0) = 1, f ≥ 0).
    """

    coeffs: np.ndarray
    real: bool = False
    density: bool = False
    _checked: bool = field(default=True, repr=False)

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if coeffs.ndim != 1 or coeffs.size % 2 == 0:
            raise DomainError(
                f"Coefficient array must have odd length 2K+1, got shape {coeffs.shape}"
            )
        object.__setattr__(self, "coeffs", _freeze(coeffs))

        if self.density:
            object.__setattr__(self, "real", True)
        if not self._checked:
            return

        if self.real:
            mirror = np.conj(self.coeffs[::-1])
            scale = max(1.0, float(np.max(np.abs(self.coeffs))))
            if np.max(np.abs(self.coeffs - mirror)) > REAL_TOL * scale:
                raise DomainError("Polynomial flagged real is not conjugate symmetric")
        if self.density:
            if abs(self.coeffs[self.degree] - 1.0) > 1e-9:
                raise DomainError(
                    f"Density must integrate to 1, got f̂(0) = {self.coeffs[self.degree]:.6g}"
                )
            if not self.is_nonnegative(settings.DENSITY_TOL):
                raise DomainError("Polynomial flagged density takes negative values")

    # ------------------------------------------------------------------ #
    # constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def from_dict(cls, coeffs: Mapping[int, complex], real: bool = False, density: bool = False) -> "TrigPoly":
        """Build a polynomial from a sparse {k: f̂(k)} mapping."""
        degree = max((abs(int(k)) for k in coeffs), default=0)
        dense = np.zeros(2 * degree + 1, dtype=complex)
        for k, value in coeffs.items():
            dense[int(k) + degree] = value
        return cls(dense, real=real, density=density)

    @classmethod
    def constant(cls, value: float = 1.0) -> "TrigPoly":
        """The constant function; the constant 1 is the uniform density."""
        return cls(np.array([value], dtype=complex), real=True, density=(value == 1.0))

    @classmethod
    def basis(cls, k: int) -> "TrigPoly":
        """The basis function e_k(t) = e^{ikt}."""
        return cls.from_dict({k: 1.0}, real=(k == 0))

    # ------------------------------------------------------------------ #
    # coefficient access
    # ------------------------------------------------------------------ #
    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.degree, self.degree + 1)

    def coeff(self, k: int) -> complex:
        """Return f̂(k), zero outside the stored range."""
        if abs(k) > self.degree:
            return 0j
        return complex(self.coeffs[k + self.degree])

    def to_dict(self) -> Dict[int, complex]:
        return {int(k): complex(c) for k, c in zip(self.frequencies, self.coeffs)}

    @property
    def mass(self) -> float:
        """∫ f dλ, i.e. f̂(0)."""
        return float(self.coeff(0).real)

    # ------------------------------------------------------------------ #
    # evaluation
    # ------------------------------------------------------------------ #
    def __call__(self, t: ArrayLike) -> Union[complex, float, np.ndarray]:
        return self.evaluate(t)

    def evaluate(self, t: ArrayLike) -> Union[complex, float, np.ndarray]:
        """
        Evaluate Σ_k f̂(k) e^{ikt} at one angle or an array of angles.

        Real polynomials return real values; the discarded imaginary part is
        bounded by rounding.
        """
        t_arr = np.asarray(t, dtype=float)
        phases = np.exp(1j * np.multiply.outer(t_arr, self.frequencies))
        values = phases @ self.coeffs
        if self.real:
            values = values.real
        if t_arr.ndim == 0:
            return float(values) if self.real else complex(values)
        return values

    def to_grid(self, size: int) -> np.ndarray:
        """Values on the uniform grid 2πj/size, j = 0..size-1."""
        if size < 2 * self.degree + 1:
            return np.asarray(self.evaluate(2 * np.pi * np.arange(size) / size))
        spectrum = np.zeros(size, dtype=complex)
        spectrum[self.frequencies % size] = self.coeffs
        values = np.fft.ifft(spectrum) * size
        return values.real if self.real else values

    def is_nonnegative(self, tol: float = 1e-10, grid_size: int = 0) -> bool:
        """Certify f ≥ -tol on a uniform grid of at least 4K+1 points."""
        size = max(grid_size, 4 * self.degree + 1)
        values = self.to_grid(size)
        if np.iscomplexobj(values):
            if np.max(np.abs(values.imag)) > 1e-9:
                return False
            values = values.real
        return bool(np.min(values) >= -tol)

    def cumulative_mass(self, t: ArrayLike) -> Union[float, np.ndarray]:
        """
        Exact (1/2π)∫_0^t f(s) ds, the mass of [0, t) under f dλ.

        Uses the closed-form antiderivative of each exponential.
        """
        t_arr = np.asarray(t, dtype=float)
        ks = self.frequencies
        nonzero = ks != 0
        result = self.coeff(0) * t_arr / (2 * np.pi)
        if np.any(nonzero):
            weights = self.coeffs[nonzero] / (2j * np.pi * ks[nonzero])
            phases = np.exp(1j * np.multiply.outer(t_arr, ks[nonzero])) - 1.0
            result = result + phases @ weights
        result = np.real(result) if self.real else result
        if t_arr.ndim == 0:
            return float(result) if self.real else complex(result)
        return result

    # ------------------------------------------------------------------ #
    # arithmetic
    # ------------------------------------------------------------------ #
    def multiply(self, other: "TrigPoly") -> "TrigPoly":
        """Pointwise product; coefficients are the convolution of both sequences."""
        product = np.convolve(self.coeffs, other.coeffs)
        return TrigPoly(product, real=self.real and other.real, _checked=False)

    def __mul__(self, other: Union["TrigPoly", complex, float]) -> "TrigPoly":
        if isinstance(other, TrigPoly):
            return self.multiply(other)
        return self.scale(other)

    __rmul__ = __mul__

    def add(self, other: "TrigPoly") -> "TrigPoly":
        degree = max(self.degree, other.degree)
        total = self.padded(degree) + other.padded(degree)
        return TrigPoly(total, real=self.real and other.real, _checked=False)

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        return self.add(other)

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self.add(other.scale(-1.0))

    def scale(self, factor: complex) -> "TrigPoly":
        keeps_real = self.real and np.isreal(factor)
        return TrigPoly(self.coeffs * factor, real=bool(keeps_real), _checked=False)

    def power(self, exponent: int) -> "TrigPoly":
        """Integer power by repeated squaring."""
        if exponent < 0:
            raise DomainError(f"Exponent must be nonnegative, got {exponent}")
        result = TrigPoly.constant(1.0)
        base = self
        while exponent:
            if exponent & 1:
                result = result.multiply(base)
            exponent >>= 1
            if exponent:
                base = base.multiply(base)
        return result

    def rotate(self, alpha: float) -> "TrigPoly":
        """The polynomial t ↦ f(t - alpha)."""
        phases = np.exp(-1j * self.frequencies * alpha)
        return TrigPoly(self.coeffs * phases, real=self.real, density=self.density, _checked=False)

    def conj(self) -> "TrigPoly":
        """Complex conjugate function."""
        return TrigPoly(np.conj(self.coeffs[::-1]), real=self.real, density=self.density, _checked=False)

    def padded(self, degree: int) -> np.ndarray:
        """Coefficient array zero padded (or truncated) to the given degree."""
        out = np.zeros(2 * degree + 1, dtype=complex)
        keep = min(degree, self.degree)
        out[degree - keep:degree + keep + 1] = self.coeffs[self.degree - keep:self.degree + keep + 1]
        return out

    def truncate(self, degree: int) -> "TrigPoly":
        """Drop coefficients above the given degree."""
        return TrigPoly(self.padded(degree), real=self.real, _checked=False)

    def trimmed(self, tol: float = 0.0) -> "TrigPoly":
        """Remove vanishing outer coefficients."""
        degree = self.degree
        while degree > 0 and abs(self.coeff(degree)) <= tol and abs(self.coeff(-degree)) <= tol:
            degree -= 1
        return TrigPoly(self.padded(degree), real=self.real, density=self.density, _checked=False)

    def normalized(self) -> "TrigPoly":
        """Rescale a nonnegative real polynomial so that f̂(0) = 1, flagging it as density."""
        mass = self.coeff(0).real
        if mass <= 0:
            raise DomainError(f"Cannot normalize a polynomial with mass {mass:.3e}")
        coeffs = self.coeffs / mass
        if self.real or np.allclose(coeffs, np.conj(coeffs[::-1]), atol=REAL_TOL * max(1.0, np.max(np.abs(coeffs)))):
            coeffs = 0.5 * (coeffs + np.conj(coeffs[::-1]))
        return TrigPoly(coeffs, density=True)

    def allclose(self, other: "TrigPoly", atol: float = 1e-10) -> bool:
        degree = max(self.degree, other.degree)
        return bool(np.allclose(self.padded(degree), other.padded(degree), atol=atol, rtol=0.0))

    def __repr__(self) -> str:
        flags = [name for name, on in (("real", self.real), ("density", self.density)) if on]
        return f"TrigPoly(degree={self.degree}{', ' if flags else ''}{', '.join(flags)})"


def evaluate(f: TrigPoly, t: ArrayLike) -> Union[complex, float, np.ndarray]:
    """Evaluate f at the angle(s) t."""
    return f.evaluate(t)


def multiply(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """Pointwise product of two trigonometric polynomials."""
    return f.multiply(g)
