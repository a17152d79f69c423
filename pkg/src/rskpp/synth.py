"""Synthetic planted-cluster generators for benchmarks, demos, and tests."""

from __future__ import annotations

import numpy as np


def planted_gaussians(
    n: int,
    k: int,
    d: int,
    separation: float,
    sigma: float = 1.0,
    rng: np.random.Generator | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample n points from k spherical Gaussian clusters.

    Cluster centroids are drawn at radius ~separation*sigma and re-drawn
    until pairwise distances are at least separation*sigma, so `separation`
    (in units of the within-cluster scale) controls how well-separated the
    planted clustering is. Returns (points, labels, centroids).
    """
    if rng is None:
        rng = np.random.default_rng(0)
    if k < 1 or n < k:
        raise ValueError("need n >= k >= 1")
    min_gap = separation * sigma
    for _ in range(1000):
        centroids = rng.normal(scale=max(min_gap, sigma), size=(k, d))
        if k == 1:
            break
        gaps = np.linalg.norm(centroids[:, None, :] - centroids[None, :, :], axis=-1)
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() >= min_gap:
            break
    else:
        raise RuntimeError("could not place well-separated centroids")
    sizes = np.full(k, n // k)
    sizes[: n % k] += 1
    labels = np.repeat(np.arange(k), sizes)
    points = centroids[labels] + rng.normal(scale=sigma, size=(n, d))
    return points, labels, centroids
