import itertools

import numpy as np
import pytest

from src.gh.metric import (
    Correspondence,
    FinitePointCloud,
    arc_distance_cloud,
    cloud_from_matrix,
    covering_radius,
    distortion_correspondence,
    distortion_map,
    epsilon_isometry_bound,
    gh_upper_bound,
    graph_correspondence,
    hausdorff_distance,
    is_epsilon_isometry,
)
from src.utils.error_handler import DomainError


@pytest.fixture
def three_points():
    # x, y, z with d(x, y) = 1, d(x, z) = 3, d(y, z) = 2
    return FinitePointCloud(("x", "y", "z"), np.array([[0, 1, 3], [1, 0, 2], [3, 2, 0]], dtype=float))


def random_cloud(rng, size):
    return arc_distance_cloud(rng.uniform(0, 2 * np.pi, size))


def test_hausdorff_examples(three_points):
    assert hausdorff_distance([0, 1], [0, 1], three_points) == 0.0
    assert hausdorff_distance([0], [2], three_points) == 3.0
    assert hausdorff_distance([0], [1, 2], three_points) == 3.0


def test_hausdorff_rejects_empty_or_foreign_sets(three_points):
    with pytest.raises(DomainError):
        hausdorff_distance([], [1], three_points)
    with pytest.raises(DomainError):
        hausdorff_distance([0], [5], three_points)


def test_identity_has_no_distortion(rng):
    X = random_cloud(rng, 6)
    assert distortion_correspondence(Correspondence.identity(6), X, X) == 0.0
    assert gh_upper_bound(Correspondence.identity(6), X, X) == 0.0


def test_two_point_spaces():
    X = arc_distance_cloud([0.0, np.pi])
    Y = arc_distance_cloud([0.0, np.pi / 2])
    assert distortion_correspondence(Correspondence.identity(2), X, Y) == pytest.approx(np.pi / 2)
    assert gh_upper_bound(Correspondence.identity(2), X, Y) == pytest.approx(np.pi / 4)


def test_full_correspondence_matches_enumeration(rng):
    X, Y = random_cloud(rng, 5), random_cloud(rng, 4)
    R = Correspondence.full(5, 4)
    expected = max(
        abs(X.dist[x, x2] - Y.dist[y, y2]) for (x, y), (x2, y2) in itertools.product(R.pairs, repeat=2)
    )
    assert distortion_correspondence(R, X, Y) == pytest.approx(expected)


def test_correspondence_must_be_total_and_onto(rng):
    X, Y = random_cloud(rng, 3), random_cloud(rng, 3)
    with pytest.raises(DomainError, match="of X"):
        distortion_correspondence(Correspondence(((0, 0), (1, 1), (1, 2))), X, Y)
    with pytest.raises(DomainError, match="of Y"):
        distortion_correspondence(Correspondence(((0, 0), (1, 1), (2, 1))), X, Y)


def test_distortion_map_examples(three_points):
    assert distortion_map([0, 1, 2], three_points, three_points) == 0.0
    assert distortion_map([1, 1, 1], three_points, three_points) == three_points.diameter


def test_distortion_map_matches_enumeration(rng):
    X, Y = random_cloud(rng, 7), random_cloud(rng, 5)
    f = rng.integers(0, 5, 7)
    expected = max(abs(Y.dist[f[a], f[b]] - X.dist[a, b]) for a in range(7) for b in range(7))
    assert distortion_map(f, X, Y) == pytest.approx(expected)


def test_graph_of_surjection_has_map_distortion(rng):
    X, Y = random_cloud(rng, 8), random_cloud(rng, 4)
    f = np.concatenate([np.arange(4), rng.integers(0, 4, 4)])
    R = graph_correspondence(f, X, Y)
    assert distortion_correspondence(R, X, Y) == pytest.approx(distortion_map(f, X, Y))


def test_graph_needs_surjection(rng):
    X, Y = random_cloud(rng, 3), random_cloud(rng, 3)
    with pytest.raises(DomainError):
        graph_correspondence([0, 0, 1], X, Y)


def test_map_must_land_in_target(three_points):
    with pytest.raises(DomainError):
        distortion_map([0, 1, 3], three_points, three_points)
    with pytest.raises(DomainError):
        distortion_map([0, 1], three_points, three_points)


def test_covering_radius(three_points, rng):
    assert covering_radius([0, 1, 2], three_points) == 0.0
    assert covering_radius([0], three_points) == 3.0
    X = random_cloud(rng, 9)
    S = [1, 4, 6]
    expected = max(min(X.dist[x, s] for s in S) for x in range(9))
    assert covering_radius(S, X) == pytest.approx(expected)


def test_epsilon_isometry(three_points):
    assert is_epsilon_isometry([0, 1, 2], three_points, three_points, 0.0)
    assert not is_epsilon_isometry([0, 0, 0], three_points, three_points, 2.9)
    eps, bound = epsilon_isometry_bound([0, 0, 0], three_points, three_points)
    assert eps == 3.0
    assert bound == 6.0


def test_circle_samples_against_coarser_samples():
    fine = arc_distance_cloud(2 * np.pi * np.arange(16) / 16)
    coarse = arc_distance_cloud(2 * np.pi * np.arange(4) / 4)
    f = np.arange(16) // 4
    eps, _ = epsilon_isometry_bound(f, fine, coarse)
    assert is_epsilon_isometry(f, fine, coarse, eps)
    assert gh_upper_bound(graph_correspondence(f, fine, coarse), fine, coarse) <= eps


def test_arc_cloud_wraps():
    cloud = arc_distance_cloud([0.1, 2 * np.pi - 0.1, np.pi + 0.1])
    assert cloud.dist[0, 1] == pytest.approx(0.2)
    assert cloud.diameter == pytest.approx(np.pi)


def test_cloud_validation():
    with pytest.raises(DomainError, match="square"):
        FinitePointCloud((0, 1), np.zeros((2, 3)))
    with pytest.raises(DomainError, match="labels"):
        FinitePointCloud((0,), np.zeros((2, 2)))
    with pytest.raises(DomainError, match="symmetric"):
        FinitePointCloud((0, 1), np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(DomainError, match="diagonal"):
        FinitePointCloud((0, 1), np.array([[1.0, 1.0], [1.0, 0.0]]))
    with pytest.raises(DomainError, match="Triangle"):
        FinitePointCloud((0, 1, 2), np.array([[0, 1, 5], [1, 0, 1], [5, 1, 0]], dtype=float))


def test_cloud_from_matrix_symmetrizes():
    cloud = cloud_from_matrix(["a", "b"], np.array([[1e-12, 1.0], [1.0 + 1e-12, 0.0]]))
    assert cloud.dist[0, 1] == cloud.dist[1, 0]
    assert cloud.dist[0, 0] == 0.0


def test_cloud_is_read_only(three_points):
    with pytest.raises(ValueError):
        three_points.dist[0, 1] = 5.0
