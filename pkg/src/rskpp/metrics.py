"""Clustering cost, summary statistics, beta estimation, and the exact
identities the test suite uses as oracles.

All functions here are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyCenters, TooFewSamples, ZeroCost
from .model import Dataset, SeedingConfig, UNBOUNDED


@dataclass(frozen=True)
class CostReport:
    """Exact clustering cost with the induced assignment.

    `assignment[i]` is the index of the nearest center (ties to the lowest
    center index); `per_cluster_costs[j]` sums the squared distances of the
    points assigned to center j.
    """

    cost: float
    per_cluster_costs: np.ndarray
    assignment: np.ndarray


def _as_points(data) -> np.ndarray:
    if isinstance(data, Dataset):
        return data.points
    return np.asarray(data, dtype=np.float64)


def clustering_cost(data, centers) -> CostReport:
    """Sum over points of the squared distance to the nearest center.

    `centers` is a list/matrix of center coordinates. Distances are formed
    by subtract-then-square per center (no inner-product shortcut) so the
    result agrees with a naive double loop to machine precision.
    """
    pts = _as_points(data)
    C = np.atleast_2d(np.asarray(centers, dtype=np.float64))
    if C.size == 0:
        raise EmptyCenters("clustering cost needs at least one center")
    n = pts.shape[0]
    dist_sq = np.empty((n, C.shape[0]), dtype=np.float64)
    for j in range(C.shape[0]):
        diff = pts - C[j]
        dist_sq[:, j] = np.einsum("ij,ij->i", diff, diff)
    assignment = np.argmin(dist_sq, axis=1)
    min_dist = dist_sq[np.arange(n), assignment]
    per_cluster = np.bincount(assignment, weights=min_dist, minlength=C.shape[0])
    return CostReport(cost=float(min_dist.sum()), per_cluster_costs=per_cluster, assignment=assignment)


def bias_variance_check(P, z) -> tuple[float, float]:
    """Both sides of the decomposition cost(P, z) = cost(P, mean(P)) + |P| * ||z - mean||^2.

    Returned as (lhs, rhs) so tests can assert their equality.
    """
    pts = _as_points(P)
    zz = np.asarray(z, dtype=np.float64)
    mu = pts.mean(axis=0)
    lhs = float(np.einsum("ij,ij->", pts - zz, pts - zz))
    spread = float(np.einsum("ij,ij->", pts - mu, pts - mu))
    rhs = spread + pts.shape[0] * float(((zz - mu) ** 2).sum())
    return lhs, rhs


@dataclass(frozen=True)
class Summary:
    mean: float
    std: float
    ci95_half_width: float


def summarize(samples) -> Summary:
    """Mean, Bessel-corrected standard deviation, and 1.96 * std / sqrt(n)."""
    arr = np.asarray(samples, dtype=np.float64)
    if arr.size < 2:
        raise TooFewSamples("need at least 2 samples for std/CI")
    mean = float(arr.mean())
    std = float(arr.std(ddof=1))
    return Summary(mean=mean, std=std, ci95_half_width=float(1.96 * std / np.sqrt(arr.size)))


def estimate_beta(data: Dataset, k: int, repeats: int = 20, rng=None, tree=None) -> float:
    """Ratio of the dataset variance to the mean seeding cost at budget UNBOUNDED.

    The numerator is the total squared norm of the centered dataset; the
    denominator averages the cost of `repeats` unbounded seeding runs, the
    same estimate the experiment protocol reports.
    """
    from .seeding import rs_kmeanspp  # local import to avoid a cycle
    from .sqtree import SampleTree

    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if not data.centered:
        raise ValueError("beta estimation requires a centered dataset")
    if rng is None:
        rng = np.random.default_rng(0)
    if tree is None:
        tree = SampleTree.build(np.sqrt(data.sq_norms))
    cfg = SeedingConfig(k=k, m=UNBOUNDED)
    costs = [rs_kmeanspp(data, tree, cfg, rng=rng).cost for _ in range(repeats)]
    mean_cost = float(np.mean(costs))
    if mean_cost <= 0.0:
        raise ZeroCost("estimated clustering cost is zero; beta is unbounded")
    return data.total_sq_norm / mean_cost
