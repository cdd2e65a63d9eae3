# src/experiments/recovery.py
"""Recovering the circle from Fejér states: (F_n, d_n) against (S¹, arc distance)."""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from ..gh.metric import Correspondence, arc_distance_cloud, cloud_from_matrix, distortion_correspondence, gh_upper_bound
from ..spectral.distance import DistanceCertificate, SolverOptions, connes_distance, distance_matrix
from ..states.pure import fejer_state
from .base_study import BaseStudy, Row
from .schema import ExperimentConfig

# computed distances satisfy the triangle inequality only up to solver accuracy
TRIANGLE_TOL = 1e-3


def fejer_distances(
    n: int,
    points: int,
    options: SolverOptions,
    workers: int = 1,
    show_progress: bool = False,
    use_symmetry: bool = True,
) -> Tuple[np.ndarray, List[DistanceCertificate]]:
    """
    Pairwise d_n between Fejér states centred at 2πi/L, i = 0..L-1.

    Rotations act isometrically and the reflection t ↦ -t swaps the two
    orientations, so d_n between centres i and j depends only on the cyclic
    offset min(|i-j|, L-|i-j|). With ``use_symmetry`` only those L/2 values
    are solved.
    """
    centres = 2 * np.pi * np.arange(points) / points
    if not use_symmetry:
        states = [fejer_state(n, c) for c in centres]
        matrix, certificates = distance_matrix(
            states, options, max_workers=workers, show_progress=show_progress, return_certificates=True
        )
        return matrix, list(certificates.values())

    anchor = fejer_state(n, 0.0)
    offsets = list(range(1, points // 2 + 1))

    def solve(k: int) -> DistanceCertificate:
        return connes_distance(anchor, fejer_state(n, centres[k]), options)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        certificates = list(tqdm(
            pool.map(solve, offsets), total=len(offsets), desc=f"d_{n} offsets",
            disable=not show_progress, leave=False,
        ))

    by_offset = np.zeros(points // 2 + 1)
    for k, certificate in zip(offsets, certificates):
        by_offset[k] = certificate.value
    index = np.arange(points)
    gap = np.abs(np.subtract.outer(index, index))
    matrix = by_offset[np.minimum(gap, points - gap)]
    return matrix, certificates


class RecoveryStudy(BaseStudy):
    """
    Compare d_n on L Fejér states with the arc distance of their centres
    through the correspondence pairing each state with its centre.
    """

    default_n_values = [4, 8, 16]

    @property
    def name(self) -> str:
        return "recover-circle"

    @property
    def columns(self) -> List[str]:
        return [
            "n", "sampled_lambda_count", "distortion_estimate", "gh_upper_bound",
            "max_relative_error", "unconverged", "max_feasibility",
        ]

    def row_for(self, n: int, cfg: ExperimentConfig, use_symmetry: bool = True) -> Row:
        start = time.perf_counter()
        points = cfg.points
        centres = 2 * np.pi * np.arange(points) / points
        matrix, certificates = fejer_distances(
            n, points, cfg.solver_options(), cfg.workers, cfg.show_progress, use_symmetry
        )

        spectral = cloud_from_matrix([f"tau_{i}" for i in range(points)], matrix, TRIANGLE_TOL)
        circle = arc_distance_cloud(centres)
        correspondence = Correspondence.identity(points)
        distortion = distortion_correspondence(correspondence, spectral, circle)

        upper = np.triu_indices(points, k=1)
        relative = np.abs(matrix[upper] / circle.dist[upper] - 1.0) if points > 1 else np.zeros(0)
        return {
            "n": n,
            "sampled_lambda_count": points,
            "distortion_estimate": distortion,
            "gh_upper_bound": gh_upper_bound(correspondence, spectral, circle),
            "max_relative_error": float(relative.max()) if relative.size else 0.0,
            "unconverged": sum(1 for c in certificates if c.unconverged),
            "max_feasibility": max((c.feasibility for c in certificates), default=0.0),
            "runtime": time.perf_counter() - start,
        }

    def _run(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        rows = []
        for n in self.n_values(cfg):
            row = self.row_for(n, cfg)
            self.logger.info(f"n={n}: distortion {row['distortion_estimate']:.6g}, GH bound {row['gh_upper_bound']:.6g}")
            rows.append(row)
        return rows


def run_circle_recovery(cfg: ExperimentConfig) -> List[Row]:
    return RecoveryStudy().run(cfg)
