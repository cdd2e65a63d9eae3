# src/experiments/net.py
"""How far the pullbacks of sampled pure states are from covering the circle's state space."""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from ..fourier.kernels import root_form_density
from ..gh.metric import cloud_from_matrix, covering_radius
from ..states.measure import CircleMeasure
from ..states.moments import pullback
from ..states.pure import random_pure_state
from ..transport.w1 import w1_circle
from .base_study import BaseStudy, Row
from .schema import ExperimentConfig

TWO_PI = 2 * np.pi
# angles in the density part of a random target
TARGET_DENSITY_ROOTS = 2


def random_target(m: int, rng: np.random.Generator) -> CircleMeasure:
    """
    Random state of C(S¹): Dirichlet weights on the m-th roots of unity
    mixed with a random root-form density.
    """
    atoms = CircleMeasure(TWO_PI * np.arange(m) / m, rng.dirichlet(np.ones(m)))
    smooth = CircleMeasure.from_density(root_form_density(rng.uniform(0.0, TWO_PI, TARGET_DENSITY_ROOTS)))
    share = float(rng.uniform())
    return CircleMeasure.mixture([share, 1.0 - share], [atoms, smooth])


def w1_matrix(measures: Sequence[CircleMeasure], grid: int, workers: int) -> np.ndarray:
    """Pairwise W₁, each pair computed once."""
    count = len(measures)
    pairs = [(i, j) for i in range(count) for j in range(i + 1, count)]

    def transport(pair):
        i, j = pair
        return w1_circle(measures[i], measures[j], grid)

    matrix = np.zeros((count, count))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for (i, j), value in zip(pairs, pool.map(transport, pairs)):
            matrix[i, j] = matrix[j, i] = value
    return matrix


class NetStudy(BaseStudy):
    """
    Sampled covering radius of {R_n*(χ)} over fixed random targets.

    Both sets are sampled, so the value is a lower estimate of the radius of
    the candidate set over the targets, not of the full state space.
    """

    default_n_values = [2, 4, 8, 16]

    @property
    def name(self) -> str:
        return "net"

    @property
    def columns(self) -> List[str]:
        return ["n", "candidates", "targets", "covering_radius_estimate"]

    def targets_for(self, cfg: ExperimentConfig) -> List[CircleMeasure]:
        rng = self.rng(cfg, 0)
        return [random_target(cfg.m, rng) for _ in range(cfg.targets)]

    def row_for(self, n: int, targets: Sequence[CircleMeasure], cfg: ExperimentConfig) -> Row:
        start = time.perf_counter()
        rng = self.rng(cfg, n)
        candidates = [pullback(random_pure_state(n, rng)) for _ in range(cfg.samples)]
        measures = list(targets) + candidates
        matrix = w1_matrix(measures, cfg.grid, cfg.workers)

        # W₁ on a grid obeys the triangle inequality up to the grid spacing
        cloud = cloud_from_matrix(range(len(measures)), matrix, triangle_tol=2 * TWO_PI / cfg.grid)
        net = range(len(targets), len(measures))
        return {
            "n": n,
            "candidates": len(candidates),
            "targets": len(targets),
            "covering_radius_estimate": covering_radius(net, cloud),
            "runtime": time.perf_counter() - start,
        }

    def _run(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        targets = self.targets_for(cfg)
        rows = []
        for n in self.n_values(cfg):
            row = self.row_for(n, targets, cfg)
            self.logger.info(f"n={n}: sampled covering radius {row['covering_radius_estimate']:.6g}")
            rows.append(row)
        return rows


def run_net_study(cfg: ExperimentConfig) -> List[Row]:
    return NetStudy().run(cfg)
