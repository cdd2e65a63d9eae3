# src/experiments/distortion.py
"""Sampled distortion of the pullback R_n*: spectral distance d_n against W₁ of the pullbacks."""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from ..spectral.distance import distance_matrix
from ..states.moments import State, pullback
from ..states.pure import random_pure_state
from ..transport.w1 import w1_circle
from .base_study import BaseStudy, Row
from .schema import ExperimentConfig


class DistortionStudy(BaseStudy):
    """
    For each n, sample pure states with uniform roots and compare d_n with
    W₁ between their pullbacks. The largest discrepancy is a lower estimate
    of the distortion of R_n*.
    """

    default_n_values = list(range(2, 9))

    @property
    def name(self) -> str:
        return "distortion"

    @property
    def columns(self) -> List[str]:
        return ["n", "sampled_pairs", "max_discrepancy", "mean_discrepancy", "unconverged", "max_feasibility"]

    def rows_for(self, n: int, states: Sequence[State], cfg: ExperimentConfig) -> Row:
        """Discrepancy statistics over all pairs of the given states."""
        start = time.perf_counter()
        matrix, certificates = distance_matrix(
            states,
            cfg.solver_options(),
            max_workers=cfg.workers,
            show_progress=cfg.show_progress,
            return_certificates=True,
        )
        measures = [pullback(state) for state in states]
        pairs = sorted(certificates)

        def transport(pair):
            i, j = pair
            return w1_circle(measures[i], measures[j], cfg.grid)

        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            w1_values = list(pool.map(transport, pairs))

        gaps = np.array([abs(matrix[i, j] - w) for (i, j), w in zip(pairs, w1_values)])
        return {
            "n": n,
            "sampled_pairs": len(pairs),
            "max_discrepancy": float(gaps.max()) if gaps.size else 0.0,
            "mean_discrepancy": float(gaps.mean()) if gaps.size else 0.0,
            "unconverged": sum(1 for c in certificates.values() if c.unconverged),
            "max_feasibility": max((c.feasibility for c in certificates.values()), default=0.0),
            "runtime": time.perf_counter() - start,
        }

    def _run(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        rows = []
        for n in self.n_values(cfg):
            rng = self.rng(cfg, n)
            states = [random_pure_state(n, rng) for _ in range(cfg.samples)]
            row = self.rows_for(n, states, cfg)
            self.logger.info(f"n={n}: max |d_n - W1| = {row['max_discrepancy']:.6g} over {row['sampled_pairs']} pairs")
            rows.append(row)
        return rows


def run_distortion_study(cfg: ExperimentConfig) -> List[Row]:
    return DistortionStudy().run(cfg)
