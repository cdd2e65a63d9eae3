# src/spectral/distance.py
"""
The spectral distance d_n on states of the Toeplitz system:

    d_n(φ, ψ) = sup { |φ(T) - ψ(T)| : T Hermitian Toeplitz, ‖[D_n, T]‖ ≤ 1 }.

With δ_k = φ(E_k) - ψ(E_k) the objective is 2 Re Σ_{k≥1} δ_k t_k. The solver
works with the Hermitian commutator H = -i[D_n, T], whose diagonals are
h_k = -i k t_k; the feasible set becomes the zero-diagonal Hermitian Toeplitz
matrices in the unit ball and the objective 2 Re Σ_k (i δ_k / k) h_k.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..config.settings import settings
from ..states.moments import State, evaluate, state_moments
from ..toeplitz.matrix import HermToeplitz, dirac_commutator, spectral_norm
from ..utils.error_handler import ConvergenceError, DomainError
from ..utils.logger import logger
from .projections import coeffs_from_matrix, frobenius_norm, project_ball, toeplitz_from_coeffs

REBALANCE_EVERY = 10
REBALANCE_RATIO = 10.0
REBALANCE_UNTIL = 1000


@dataclass(frozen=True)
class SolverOptions:
    """
    Options of the splitting solver.

    Attributes:
        max_iters: Outer iteration cap.
        tol: Minimal objective improvement over ``stall_window`` iterations.
        stall_window: Iterations over which progress is measured.
        residual_tol: Relative primal and dual residual required before stopping.
        feasibility_tol: Allowed overshoot of the commutator norm.
        bound: Radius of the constraint ‖[D_n, T]‖ ≤ bound.
        strict: Raise ConvergenceError instead of flagging unconverged results.
    """

    max_iters: int = 100000
    tol: float = 1e-9
    stall_window: int = 50
    residual_tol: float = 1e-6
    feasibility_tol: float = 1e-8
    bound: float = 1.0
    strict: bool = False

    @classmethod
    def from_settings(cls, **overrides) -> "SolverOptions":
        return replace(cls(**settings.get_solver_config()), **overrides)


@dataclass(frozen=True, eq=False)
class DistanceProblem:
    """
    One instance of the d_n optimization.

    Attributes:
        n: System size.
        delta: δ_k = (φ - ψ)(E_k) for k = 1..n-1.
        options: Solver options.
    """

    n: int
    delta: np.ndarray
    options: SolverOptions = field(default_factory=SolverOptions)

    @classmethod
    def from_states(cls, phi: State, psi: State, options: Optional[SolverOptions] = None) -> "DistanceProblem":
        if phi.n != psi.n:
            raise DomainError(f"States live on different systems: n={phi.n} and n={psi.n}")
        n = phi.n
        delta = state_moments(phi)[n:] - state_moments(psi)[n:]
        return cls(n, delta, options or SolverOptions.from_settings())

    @property
    def weights(self) -> np.ndarray:
        """Coefficients c_k = i δ_k / k of the linear objective 2 Re Σ c_k h_k."""
        k = np.arange(1, self.n)
        return 1j * self.delta / k

    def objective(self, h: np.ndarray) -> float:
        return float(2.0 * np.real(np.sum(self.weights * h)))

    def gradient(self) -> np.ndarray:
        """Frobenius gradient of the objective, in coefficient form."""
        k = np.arange(1, self.n)
        return np.conj(self.weights) / (self.n - k)

    def maximizer(self, h: np.ndarray) -> HermToeplitz:
        """The Toeplitz matrix T with -i[D_n, T] = H(h) and zero main diagonal."""
        k = np.arange(1, self.n)
        t = 1j * h / k
        diags = np.concatenate([np.conj(t[::-1]), [0.0], t])
        return HermToeplitz(self.n, diags)


@dataclass(frozen=True, eq=False)
class DistanceCertificate:
    """
    Lower bound on d_n with the Toeplitz matrix attaining it.

    Attributes:
        value: |φ(T*) - ψ(T*)|.
        maximizer: Feasible Hermitian Toeplitz T*.
        feasibility: ‖[D_n, T*]‖.
        gap_estimate: Objective gain over the last stall window.
        iterations: Outer iterations performed.
        converged: False when the iteration cap was hit first.
        elapsed: Wall time in seconds.
    """

    value: float
    maximizer: HermToeplitz
    feasibility: float
    gap_estimate: float
    iterations: int
    converged: bool
    elapsed: float = 0.0

    @property
    def unconverged(self) -> bool:
        return not self.converged


def _closed_form(problem: DistanceProblem) -> np.ndarray:
    """Optimal h for n = 2, where the constraint reads |h_1| ≤ 1."""
    c = problem.weights[0]
    if abs(c) == 0:
        return np.zeros(1, dtype=complex)
    return np.array([np.conj(c) / abs(c)])


def solve(problem: DistanceProblem) -> Tuple[np.ndarray, int, float, bool]:
    """
    Alternating projections with a carried correction term (scaled ADMM).

    Each sweep steps along the gradient inside the Toeplitz subspace, then
    clips eigenvalues onto the ball. The correction accumulates the
    disagreement between the two iterates. The penalty is rebalanced from
    the primal and dual residuals every ``REBALANCE_EVERY`` sweeps up to
    ``REBALANCE_UNTIL`` and frozen afterwards. Every subspace iterate
    rescaled into the ball is feasible; the best one is kept.

    Returns:
        Best feasible coefficients, iterations, gain over the last window, converged flag.
    """
    opts = problem.options
    n = problem.n
    if n == 1 or not np.any(problem.delta):
        return np.zeros(max(n - 1, 0), dtype=complex), 0, 0.0, True
    if n == 2:
        return _closed_form(problem), 0, 0.0, True

    grad = problem.gradient()
    grad_norm = frobenius_norm(grad)
    primal_floor = opts.residual_tol * np.sqrt(n)
    dual_floor = opts.residual_tol * grad_norm
    # the ball has Frobenius radius sqrt(n); start with a step of that length
    rho = grad_norm / np.sqrt(n)

    z = np.zeros((n, n), dtype=complex)
    u = np.zeros_like(z)
    best_h = np.zeros(n - 1, dtype=complex)
    best = 0.0
    history = [best]
    converged = False
    iterations = 0
    for iterations in range(1, opts.max_iters + 1):
        h = coeffs_from_matrix(z - u) + grad / rho
        x = toeplitz_from_coeffs(h)
        z_prev = z
        z = project_ball(x + u)
        u = u + x - z

        norm = float(np.max(np.abs(np.linalg.eigvalsh(x))))
        if norm > 0.0:
            ratio = problem.objective(h) / norm
            if ratio > best:
                best, best_h = ratio, h / norm
        history.append(best)

        primal = float(np.linalg.norm(x - z))
        dual = rho * float(np.linalg.norm(z - z_prev))
        if len(history) > opts.stall_window and primal <= primal_floor and dual <= dual_floor:
            gain = history[-1] - history[-1 - opts.stall_window]
            if gain < opts.tol * max(1.0, best):
                converged = True
                break

        if iterations <= REBALANCE_UNTIL and iterations % REBALANCE_EVERY == 0:
            if primal > REBALANCE_RATIO * dual:
                rho *= 2.0
                u *= 0.5
            elif dual > REBALANCE_RATIO * primal:
                rho *= 0.5
                u *= 2.0

    window = min(opts.stall_window, len(history) - 1)
    gain = history[-1] - history[-1 - window] if window > 0 else 0.0
    return best_h, iterations, float(gain), converged


def connes_distance(phi: State, psi: State, options: Optional[SolverOptions] = None) -> DistanceCertificate:
    """
    Compute d_n(φ, ψ) with a certificate.

    Args:
        phi: First state (pure or moment form).
        psi: Second state on the same system.
        options: Solver options; defaults come from settings.

    Returns:
        A certificate whose value is a valid lower bound even when unconverged.

    Raises:
        DomainError: If the states have different sizes.
        ConvergenceError: In strict mode, if the iteration cap was reached.
    """
    start = time.perf_counter()
    problem = DistanceProblem.from_states(phi, psi, options)
    opts = problem.options
    h, iterations, gain, converged = solve(problem)

    maximizer = problem.maximizer(h).scale(opts.bound)
    feasibility = spectral_norm(dirac_commutator(maximizer)) if problem.n > 1 else 0.0
    if feasibility > opts.bound * (1.0 + opts.feasibility_tol):
        maximizer = maximizer.scale(opts.bound / feasibility)
        feasibility = spectral_norm(dirac_commutator(maximizer))
    value = abs(evaluate(phi, maximizer) - evaluate(psi, maximizer))
    elapsed = time.perf_counter() - start

    if not converged:
        message = f"d_{problem.n} solver hit the cap of {opts.max_iters} iterations (value {value:.9g})"
        if opts.strict:
            raise ConvergenceError(message)
        logger.warning(message)
    logger.debug(f"d_{problem.n} = {value:.12g} after {iterations} iterations ({elapsed:.3f}s)")

    return DistanceCertificate(
        value=value,
        maximizer=maximizer,
        feasibility=feasibility,
        gap_estimate=gain * opts.bound,
        iterations=iterations,
        converged=converged,
        elapsed=elapsed,
    )


def distance_matrix(
    states: Sequence[State],
    options: Optional[SolverOptions] = None,
    max_workers: Optional[int] = None,
    show_progress: Optional[bool] = None,
    return_certificates: bool = False,
):
    """
    Pairwise spectral distances, each pair solved once.

    Args:
        states: States of a common size.
        options: Solver options shared by all pairs.
        max_workers: Thread pool size; defaults to settings.MAX_WORKERS.
        show_progress: Show a tqdm bar; defaults to settings.SHOW_PROGRESS.
        return_certificates: Also return the certificates keyed by (i, j).

    Returns:
        The symmetric matrix with zero diagonal, and optionally the certificates.
    """
    if not states:
        raise DomainError("distance_matrix needs at least one state")
    sizes = {state.n for state in states}
    if len(sizes) > 1:
        raise DomainError(f"States have different sizes: {sorted(sizes)}")
    options = options or SolverOptions.from_settings()
    max_workers = settings.MAX_WORKERS if max_workers is None else max_workers
    show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress

    count = len(states)
    pairs: List[Tuple[int, int]] = [(i, j) for i in range(count) for j in range(i + 1, count)]
    matrix = np.zeros((count, count))
    certificates = {}

    def run(pair: Tuple[int, int]) -> DistanceCertificate:
        i, j = pair
        return connes_distance(states[i], states[j], options)

    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as pool:
        results = pool.map(run, pairs)
        for (i, j), certificate in tqdm(
            zip(pairs, results), total=len(pairs), desc="d_n pairs", disable=not show_progress, leave=False
        ):
            matrix[i, j] = matrix[j, i] = certificate.value
            certificates[(i, j)] = certificate

    unconverged = sum(1 for c in certificates.values() if c.unconverged)
    if unconverged:
        logger.warning(f"{unconverged} of {len(pairs)} distance computations did not converge")
    if return_certificates:
        return matrix, certificates
    return matrix
