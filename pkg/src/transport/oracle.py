# src/transport/oracle.py
"""Exact transportation LP on a discretized circle, used to cross-check w1_circle."""

from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.optimize import linprog

from ..config.settings import settings
from ..states.measure import CircleMeasure
from ..utils.error_handler import DomainError, NumericFailureError
from ..utils.logger import logger

MAX_ORACLE_GRID = 512
SUPPORT_TOL = 1e-15


def arc_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Geodesic distance min(|a-b|, 2π-|a-b|) between angles, broadcasting."""
    gap = np.abs(np.mod(np.subtract.outer(a, b), 2 * np.pi))
    return np.minimum(gap, 2 * np.pi - gap)


def w1_lp_oracle(mu: CircleMeasure, nu: CircleMeasure, grid: Optional[int] = None) -> float:
    """
    W₁ between two states after snapping both onto G equally spaced points.

    The transportation problem over the arc-distance cost matrix is solved
    with the HiGHS simplex; only grid points carrying mass enter the LP.
    Snapping moves each unit of mass by at most π/G.
    """
    grid = settings.ORACLE_GRID_SIZE if grid is None else grid
    if grid < 1 or grid > MAX_ORACLE_GRID:
        raise DomainError(f"Oracle grid must lie in [1, {MAX_ORACLE_GRID}], got {grid}")
    mu.require_state("first measure")
    nu.require_state("second measure")

    supply_measure = mu.snap_to_roots_of_unity(grid)
    demand_measure = nu.snap_to_roots_of_unity(grid)
    src = supply_measure.weights > SUPPORT_TOL
    dst = demand_measure.weights > SUPPORT_TOL
    supply = supply_measure.weights[src] / supply_measure.weights[src].sum()
    demand = demand_measure.weights[dst] / demand_measure.weights[dst].sum()
    cost = arc_distance(supply_measure.angles[src], demand_measure.angles[dst])

    rows, cols = cost.shape
    # x[i, j] flattened row-major: row sums give supply, column sums give demand
    a_supply = sp.kron(sp.identity(rows), np.ones((1, cols)))
    a_demand = sp.kron(np.ones((1, rows)), sp.identity(cols))
    a_eq = sp.vstack([a_supply, a_demand]).tocsr()
    b_eq = np.concatenate([supply, demand])

    result = linprog(cost.ravel(), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if result.status != 0:
        raise NumericFailureError(f"Transportation LP failed: {result.message}")
    logger.debug(f"LP oracle on {rows}x{cols} supports: {result.fun:.12g}")
    return float(result.fun)
