# src/fourier/kernels.py
"""Densities built from products of cosine factors: root forms, Fejér and power kernels."""

from typing import Sequence

import numpy as np

from ..utils.error_handler import DomainError
from .trig_poly import TrigPoly


def cosine_factor(theta: float) -> TrigPoly:
    """The nonnegative factor 1 - cos(t - theta), vanishing only at theta."""
    half = 0.5 * np.exp(1j * theta)
    return TrigPoly(np.array([-half, 1.0, -np.conj(half)]), real=True)


def root_form_density(angles: Sequence[float]) -> TrigPoly:
    """
    Density proportional to Π_j (1 - cos(t - θ_j)), normalized to f̂(0) = 1.

    Every pure state of the n x n Toeplitz system pulls back to a density of
    this form with n - 1 angles; an empty list gives the uniform density.
    """
    product = TrigPoly.constant(1.0)
    for theta in angles:
        product = product.multiply(cosine_factor(float(theta)))
    return product.normalized()


def fejer_density(n: int, theta: float = 0.0) -> TrigPoly:
    """
    Fejér kernel of order n centred at theta.

    Coefficients are (1 - |k|/n) e^{-ikθ} for |k| ≤ n - 1, so the peak value n
    is attained at t = theta.
    """
    if n < 1:
        raise DomainError(f"Fejér kernel order must be positive, got {n}")
    ks = np.arange(-(n - 1), n)
    coeffs = (1.0 - np.abs(ks) / n) * np.exp(-1j * ks * theta)
    return TrigPoly(coeffs, density=True)


def power_kernel(m: int, n: int, rotation: float = 0.0) -> TrigPoly:
    """
    Density proportional to (1 - cos(m(t - rotation)))^n.

    Zeros sit at rotation + 2πj/m and maxima at rotation + (2j+1)π/m.
    """
    if m < 1 or n < 1:
        raise DomainError(f"Power kernel needs m, n >= 1, got m={m}, n={n}")
    base = np.zeros(2 * m + 1, dtype=complex)
    base[m] = 1.0
    base[0] = -0.5 * np.exp(1j * m * rotation)
    base[2 * m] = -0.5 * np.exp(-1j * m * rotation)
    return bump_density(TrigPoly(base, real=True), n)


def bump_density(f: TrigPoly, power: int) -> TrigPoly:
    """
    The normalized power f^power / ‖f^power‖₁ of a nonnegative polynomial.

    As the power grows the result concentrates on the maximizers of f.
    """
    if power < 1:
        raise DomainError(f"Bump power must be positive, got {power}")
    if not f.is_nonnegative():
        raise DomainError("Bump densities need a nonnegative base function")
    return f.power(power).normalized()


def kernel_maxima(m: int, rotation: float = 0.0) -> np.ndarray:
    """Angles where 1 - cos(m(t - rotation)) attains its maximum 2."""
    return np.mod(rotation + (2 * np.arange(m) + 1) * np.pi / m, 2 * np.pi)


def kernel_zeros(m: int, rotation: float = 0.0) -> np.ndarray:
    """Angles where 1 - cos(m(t - rotation)) vanishes."""
    return np.mod(rotation + 2 * np.pi * np.arange(m) / m, 2 * np.pi)
