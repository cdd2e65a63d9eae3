# src/experiments/approximation.py
"""
Approximating a circle state by pullbacks of pure states, in three stages:
snap the target onto the m-th roots of unity, reproduce the weights with
approx_state at growing sharpness N, then sharpen the pullback with kernel
powers through product_state.
"""

import time
from typing import List, Optional

import numpy as np

from ..states.factory import read_state
from ..states.measure import CircleMeasure
from ..states.moments import pullback
from ..states.pure import approx_ratio, approx_state, product_state
from ..transport.w1 import w1_circle
from ..utils.error_handler import DegenerateInputError, DomainError
from .base_study import BaseStudy, Row
from .schema import ExperimentConfig


def default_target() -> CircleMeasure:
    """½ ev_0 + ½ ev_π."""
    return CircleMeasure.atomic([(0.0, 0.5), (np.pi, 0.5)])


class ApproximationStudy(BaseStudy):
    """Report W₁ to the target after each stage together with the stage increments."""

    @property
    def name(self) -> str:
        return "approximate"

    @property
    def columns(self) -> List[str]:
        return ["stage", "parameter", "n", "W1_to_target", "increment", "chain_bound", "ratio_error"]

    def load_target(self, cfg: ExperimentConfig) -> CircleMeasure:
        if cfg.target is None:
            return default_target()
        target = read_state(cfg.target)
        if not isinstance(target, CircleMeasure):
            raise DomainError(f"Approximation target {cfg.target} must be a measure record")
        return target

    def rows_for_target(self, target: CircleMeasure, cfg: ExperimentConfig) -> List[Row]:
        target.require_state("target")
        m = cfg.m
        rows: List[Row] = []

        start = time.perf_counter()
        snapped = target.snap_to_roots_of_unity(m)
        snap_error = w1_circle(target, snapped, cfg.grid)
        rows.append({
            "stage": "snap", "parameter": m, "n": None,
            "W1_to_target": snap_error, "increment": snap_error, "chain_bound": snap_error,
            "ratio_error": None, "runtime": time.perf_counter() - start,
        })

        # approx_state indexes the roots 2πj/m by j = 1..m
        weights = np.roll(snapped.weights, -1)
        weights = weights / weights.sum()

        phi = None
        approx_increment = 0.0
        for N in cfg.N_values:
            start = time.perf_counter()
            phi = approx_state(weights, N)
            measure = pullback(phi)
            approx_increment = w1_circle(snapped, measure, cfg.grid)
            rows.append({
                "stage": "approx", "parameter": N, "n": phi.n,
                "W1_to_target": w1_circle(target, measure, cfg.grid),
                "increment": approx_increment,
                "chain_bound": snap_error + approx_increment,
                "ratio_error": float(np.max(np.abs(approx_ratio(phi, m) - weights))),
                "runtime": time.perf_counter() - start,
            })

        base = pullback(phi)
        # kernel maxima at rotation + (2j+1)π/m land on the roots of unity
        rotation = np.pi / m
        for power in cfg.powers:
            start = time.perf_counter()
            try:
                chi = product_state(phi, m, power, rotation)
            except DegenerateInputError as e:
                raise DegenerateInputError(
                    f"Target weights vanish near every root of unity (m={m}, N={cfg.N_values[-1]:g}): {e.message}",
                    original_error=e,
                ) from e
            measure = pullback(chi)
            increment = w1_circle(base, measure, cfg.grid)
            rows.append({
                "stage": "product", "parameter": power, "n": chi.n,
                "W1_to_target": w1_circle(target, measure, cfg.grid),
                "increment": increment,
                "chain_bound": snap_error + approx_increment + increment,
                "ratio_error": None, "runtime": time.perf_counter() - start,
            })
            self.logger.info(f"Kernel power {power}: W1 to target {rows[-1]['W1_to_target']:.6g}")
        return rows

    def _run(self, cfg: ExperimentConfig, target: Optional[CircleMeasure] = None) -> List[Row]:
        return self.rows_for_target(target if target is not None else self.load_target(cfg), cfg)


def run_approximation_study(cfg: ExperimentConfig, target: Optional[CircleMeasure] = None) -> List[Row]:
    return ApproximationStudy().run(cfg, target=target)
