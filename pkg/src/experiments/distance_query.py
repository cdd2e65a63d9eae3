# src/experiments/distance_query.py
"""Ad-hoc query: d_n and W₁ between two persisted states."""

import json
import time
from typing import List, Optional

from ..spectral.distance import connes_distance
from ..states.factory import PersistedState, read_state
from ..states.measure import CircleMeasure
from ..states.moments import State, pullback
from ..transport.w1 import w1_circle
from ..utils.error_handler import DomainError
from .base_study import BaseStudy, Row
from .schema import ExperimentConfig


def _as_state(state: PersistedState, path: Optional[str]) -> State:
    if isinstance(state, CircleMeasure):
        raise DomainError(f"{path or 'input'} holds a measure; the distance query needs a pure or moment state")
    return state


def query_distance(a: State, b: State, cfg: ExperimentConfig) -> Row:
    """
    One row with d_n(a, b), W₁ of the pullbacks and the solver certificate.

    The maximizing Toeplitz matrix is reported by its diagonals t_{-(n-1)}..t_{n-1}
    as a JSON list of [re, im] pairs.
    """
    if a.n != b.n:
        raise DomainError(f"States live on different systems: n={a.n} and n={b.n}")
    start = time.perf_counter()
    certificate = connes_distance(a, b, cfg.solver_options())
    transport = w1_circle(pullback(a), pullback(b), cfg.grid)
    diagonals = [[float(z.real), float(z.imag)] for z in certificate.maximizer.diags]
    return {
        "n": a.n,
        "d_n": certificate.value,
        "W1_of_pullbacks": transport,
        "feasibility": certificate.feasibility,
        "iterations": certificate.iterations,
        "converged": certificate.converged,
        "gap_estimate": certificate.gap_estimate,
        "maximizer_diagonals": json.dumps(diagonals),
        "runtime": time.perf_counter() - start,
    }


class DistanceQueryStudy(BaseStudy):

    @property
    def name(self) -> str:
        return "distance"

    @property
    def columns(self) -> List[str]:
        return [
            "n", "d_n", "W1_of_pullbacks", "feasibility", "iterations",
            "converged", "gap_estimate", "maximizer_diagonals",
        ]

    def _run(
        self,
        cfg: ExperimentConfig,
        state_a: Optional[State] = None,
        state_b: Optional[State] = None,
    ) -> List[Row]:
        if state_a is None or state_b is None:
            if cfg.state_a is None or cfg.state_b is None:
                raise DomainError("The distance query needs two state files")
            state_a = _as_state(read_state(cfg.state_a), cfg.state_a)
            state_b = _as_state(read_state(cfg.state_b), cfg.state_b)
        row = query_distance(state_a, state_b, cfg)
        self.logger.info(f"d_{row['n']} = {row['d_n']:.9g}, W1 = {row['W1_of_pullbacks']:.9g}")
        return [row]


def run_distance(cfg: ExperimentConfig, state_a: Optional[State] = None, state_b: Optional[State] = None) -> List[Row]:
    return DistanceQueryStudy().run(cfg, state_a=state_a, state_b=state_b)
