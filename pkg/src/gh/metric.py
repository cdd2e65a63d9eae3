# src/gh/metric.py
"""
Gromov–Hausdorff tools for finite metric spaces.

Only explicit correspondences and maps are evaluated; every quantity is an
exact maximum over the sampled points, so results are upper bounds on the
Gromov–Hausdorff distance of the sampled spaces and estimates for the
spaces they were sampled from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence, Tuple

import numpy as np

from ..utils.error_handler import DomainError

TRIANGLE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FinitePointCloud:
    """
    A finite metric space given by its distance matrix.

    Attributes:
        labels: One identifier per point.
        dist: Symmetric nonnegative matrix with zero diagonal.
        triangle_tol: Allowed violation of the triangle inequality.
    """

    labels: Tuple[Hashable, ...]
    dist: np.ndarray
    triangle_tol: float = TRIANGLE_TOL

    def __post_init__(self):
        dist = np.array(self.dist, dtype=float)
        labels = tuple(self.labels)
        if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
            raise DomainError(f"Distance matrix must be square, got shape {dist.shape}")
        if len(labels) != dist.shape[0]:
            raise DomainError(f"{len(labels)} labels for {dist.shape[0]} points")
        if not np.array_equal(dist, dist.T):
            raise DomainError("Distance matrix is not symmetric")
        if np.any(np.diag(dist) != 0):
            raise DomainError("Distance matrix must have a zero diagonal")
        if np.any(dist < 0):
            raise DomainError("Distances must be nonnegative")
        for j in range(dist.shape[0]):
            # d(i, k) <= d(i, j) + d(j, k) for all i, k
            excess = dist - (dist[:, j][:, None] + dist[j, :][None, :])
            if np.max(excess) > self.triangle_tol:
                raise DomainError(f"Triangle inequality fails through point {j} by {np.max(excess):.3e}")
        dist.setflags(write=False)
        object.__setattr__(self, "dist", dist)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def diameter(self) -> float:
        return float(np.max(self.dist)) if len(self) else 0.0

    def __repr__(self) -> str:
        return f"FinitePointCloud(points={len(self)}, diameter={self.diameter:.6g})"


def cloud_from_matrix(
    labels: Sequence[Hashable], dist: np.ndarray, triangle_tol: float = TRIANGLE_TOL
) -> FinitePointCloud:
    """Point cloud from a nearly symmetric matrix, e.g. computed distances."""
    dist = np.asarray(dist, dtype=float)
    dist = 0.5 * (dist + dist.T)
    np.fill_diagonal(dist, 0.0)
    return FinitePointCloud(tuple(labels), np.clip(dist, 0.0, None), triangle_tol)


def arc_distance_cloud(angles: Sequence[float]) -> FinitePointCloud:
    """Points of the circle with the geodesic distance."""
    angles = np.mod(np.asarray(angles, dtype=float), 2 * np.pi)
    gap = np.abs(np.subtract.outer(angles, angles))
    dist = np.minimum(gap, 2 * np.pi - gap)
    return FinitePointCloud(tuple(float(a) for a in angles), dist)


@dataclass(frozen=True)
class Correspondence:
    """A relation between the points of two clouds, as (x index, y index) pairs."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(x), int(y)) for x, y in self.pairs))

    @classmethod
    def identity(cls, size: int) -> "Correspondence":
        return cls(tuple((i, i) for i in range(size)))

    @classmethod
    def full(cls, size_x: int, size_y: int) -> "Correspondence":
        return cls(tuple((i, j) for i in range(size_x) for j in range(size_y)))

    def x_indices(self) -> np.ndarray:
        return np.array([x for x, _ in self.pairs], dtype=int)

    def y_indices(self) -> np.ndarray:
        return np.array([y for _, y in self.pairs], dtype=int)

    def is_total(self, size_x: int) -> bool:
        return set(self.x_indices().tolist()) == set(range(size_x))

    def is_onto(self, size_y: int) -> bool:
        return set(self.y_indices().tolist()) == set(range(size_y))


def _as_indices(indices: Iterable[int], cloud: FinitePointCloud, what: str) -> np.ndarray:
    idx = np.asarray(list(indices), dtype=int)
    if idx.size == 0:
        raise DomainError(f"{what} must not be empty")
    if np.any(idx < 0) or np.any(idx >= len(cloud)):
        raise DomainError(f"{what} has indices outside a cloud of {len(cloud)} points")
    return idx


def hausdorff_distance(A: Iterable[int], B: Iterable[int], ambient: FinitePointCloud) -> float:
    """Hausdorff distance between two subsets of one cloud."""
    a = _as_indices(A, ambient, "First set")
    b = _as_indices(B, ambient, "Second set")
    block = ambient.dist[np.ix_(a, b)]
    return float(max(block.min(axis=1).max(), block.min(axis=0).max()))


def distortion_correspondence(R: Correspondence, X: FinitePointCloud, Y: FinitePointCloud) -> float:
    """
    Distortion max |d_X(x, x') - d_Y(y, y')| over pairs (x, y), (x', y') in R.

    Raises:
        DomainError: If R misses a point of X or of Y.
    """
    if not R.pairs or not R.is_total(len(X)):
        raise DomainError("Correspondence does not cover every point of X")
    if not R.is_onto(len(Y)):
        raise DomainError("Correspondence does not cover every point of Y")
    xs, ys = R.x_indices(), R.y_indices()
    return float(np.max(np.abs(X.dist[np.ix_(xs, xs)] - Y.dist[np.ix_(ys, ys)])))


def gh_upper_bound(R: Correspondence, X: FinitePointCloud, Y: FinitePointCloud) -> float:
    """Half the distortion of R, an upper bound on d_GH(X, Y)."""
    return 0.5 * distortion_correspondence(R, X, Y)


def _as_map(f: Sequence[int], X: FinitePointCloud, Y: FinitePointCloud) -> np.ndarray:
    image = np.asarray(list(f), dtype=int)
    if image.size != len(X):
        raise DomainError(f"Map defines {image.size} images for {len(X)} points")
    if np.any(image < 0) or np.any(image >= len(Y)):
        raise DomainError("Map sends points outside Y")
    return image


def distortion_map(f: Sequence[int], X: FinitePointCloud, Y: FinitePointCloud) -> float:
    """Distortion max |d_Y(f(x), f(x')) - d_X(x, x')| of an index map."""
    image = _as_map(f, X, Y)
    return float(np.max(np.abs(Y.dist[np.ix_(image, image)] - X.dist)))


def covering_radius(S: Iterable[int], X: FinitePointCloud) -> float:
    """Smallest ε for which S is an ε-net of X."""
    s = _as_indices(S, X, "Net")
    return float(X.dist[:, s].min(axis=1).max())


def is_epsilon_isometry(f: Sequence[int], X: FinitePointCloud, Y: FinitePointCloud, eps: float) -> bool:
    """Distortion at most eps and image an eps-net of Y."""
    image = _as_map(f, X, Y)
    return distortion_map(image, X, Y) <= eps and covering_radius(np.unique(image), Y) <= eps


def epsilon_isometry_bound(f: Sequence[int], X: FinitePointCloud, Y: FinitePointCloud) -> Tuple[float, float]:
    """
    The smallest ε making f an ε-isometry, and the resulting GH bound 2ε.
    """
    image = _as_map(f, X, Y)
    eps = max(distortion_map(image, X, Y), covering_radius(np.unique(image), Y))
    return eps, 2.0 * eps


def graph_correspondence(f: Sequence[int], X: FinitePointCloud, Y: FinitePointCloud) -> Correspondence:
    """
    The graph {(x, f(x))} of a surjective map as a correspondence.

    Raises:
        DomainError: If f is not onto Y.
    """
    image = _as_map(f, X, Y)
    R = Correspondence(tuple(enumerate(image.tolist())))
    if not R.is_onto(len(Y)):
        raise DomainError("Graph correspondences need a surjective map")
    return R
