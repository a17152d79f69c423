"""Seeding algorithms: preprocessing, rejection-sampling seeding, the exact
mixture reference sampler, the textbook baseline, uniform seeding, and
trace instrumentation against a reference partition.

Each run is single-threaded and owns its RNG. Independent repeats may run
concurrently with distinct derived seeds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EmptyDataset, NonFiniteInput, PartitionMismatch
from .metrics import clustering_cost
from .model import Dataset, SeedingConfig, SeedingResult, SeedingTrace, TraceStep, validate_config
from .sampling import ProposalSampler, d2_sample
from .sqtree import SampleTree


class Variant(str, Enum):
    RS = "rs"
    DELTA = "delta"
    EXACT = "exact"
    UNIFORM = "uniform"


@dataclass(frozen=True)
class Preprocessed:
    """Centered dataset, its norm tree, and the wall time spent building both."""

    data: Dataset
    tree: SampleTree
    elapsed_s: float


def preprocess(points) -> Preprocessed:
    """Center the raw matrix and build the sampling tree over point norms."""
    t0 = time.perf_counter()
    pts = np.ascontiguousarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
        raise EmptyDataset("need an n x d matrix with n >= 1 and d >= 1")
    if not np.isfinite(pts).all():
        raise NonFiniteInput("dataset contains non-finite values")
    centered_pts = pts - pts.mean(axis=0)
    data = Dataset.from_points(centered_pts, centered=True)
    tree = SampleTree.build(np.sqrt(data.sq_norms))
    return Preprocessed(data=data, tree=tree, elapsed_s=time.perf_counter() - t0)


def _finalize(data, centers, t_select, preprocess_time_s, fallbacks, rounds) -> SeedingResult:
    cost = clustering_cost(data.points, data.points[np.asarray(centers, dtype=np.intp)]).cost
    return SeedingResult(
        centers=[int(c) for c in centers],
        cost=cost,
        preprocess_time_s=preprocess_time_s,
        seeding_time_s=t_select,
        fallback_count=fallbacks,
        total_rejection_rounds=rounds,
    )


def rs_kmeanspp(
    data: Dataset,
    tree: SampleTree,
    cfg: SeedingConfig,
    rng: np.random.Generator | None = None,
    preprocess_time_s: float = 0.0,
) -> SeedingResult:
    """Rejection-sampling seeding: uniform first center, then k-1 draws
    through the bounded/unbounded rejection loop.

    The proposal is bound to the first center once and reused for every
    draw; only the acceptance test sees the growing center set.
    """
    validate_config(cfg, data)
    if not data.centered:
        raise ValueError("rejection-sampling seeding requires a centered dataset")
    if rng is None:
        rng = np.random.default_rng(cfg.rng_seed)
    budget = cfg.effective_budget()

    t0 = time.perf_counter()
    c1 = int(rng.integers(data.n))
    centers = [c1]
    proposal = ProposalSampler(tree, float(data.sq_norms[c1]), data.n)
    fallbacks = 0
    rounds = 0
    for _ in range(cfg.k - 1):
        out = d2_sample(data, centers, budget, proposal, rng, safety_cap=cfg.safety_cap)
        centers.append(out.index)
        fallbacks += out.fell_back
        rounds += out.rounds_used
    elapsed = time.perf_counter() - t0
    return _finalize(data, centers, elapsed, preprocess_time_s, fallbacks, rounds)


def d2_probabilities(data: Dataset, centers) -> np.ndarray:
    """Exact squared-distance law given `centers`; uniform if the residual
    cost is zero."""
    dist_sq = _min_dist_sq(data.points, centers)
    total = float(dist_sq.sum())
    if total <= 0.0:
        return np.full(data.n, 1.0 / data.n)
    return dist_sq / total


def mixture_probabilities(data: Dataset, centers, delta: float) -> np.ndarray:
    """The delta-mixture law: (1-delta) * squared-distance + delta * uniform.

    When the residual cost is zero the squared-distance term is defined as
    0 and the law renormalizes to uniform.
    """
    dist_sq = _min_dist_sq(data.points, centers)
    total = float(dist_sq.sum())
    if total <= 0.0:
        return np.full(data.n, 1.0 / data.n)
    probs = (1.0 - delta) * dist_sq / total + delta / data.n
    return probs / probs.sum()


def _min_dist_sq(pts: np.ndarray, centers) -> np.ndarray:
    idx = np.asarray(centers, dtype=np.intp)
    diff = pts[:, None, :] - pts[idx][None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff).min(axis=1)


def delta_kmeanspp(
    data: Dataset,
    cfg: SeedingConfig,
    rng: np.random.Generator | None = None,
    preprocess_time_s: float = 0.0,
) -> SeedingResult:
    """Reference sampler drawing each center exactly from the delta mixture.

    All n probabilities are materialized per iteration (O(nd) per step);
    this is the distribution-exact oracle, not the fast path. Centering is
    not required.
    """
    validate_config(cfg, data)
    if rng is None:
        rng = np.random.default_rng(cfg.rng_seed)
    t0 = time.perf_counter()
    c1 = int(rng.integers(data.n))
    centers = [c1]
    for _ in range(cfg.k - 1):
        probs = mixture_probabilities(data, centers, cfg.delta)
        centers.append(int(rng.choice(data.n, p=probs)))
    elapsed = time.perf_counter() - t0
    return _finalize(data, centers, elapsed, preprocess_time_s, 0, 0)


def exact_kmeanspp(
    data: Dataset,
    k: int,
    rng: np.random.Generator | None = None,
    rng_seed: int = 0,
    preprocess_time_s: float = 0.0,
) -> SeedingResult:
    """Textbook O(nkd) seeding with maintained per-point squared distances.

    Samples by inverting the cumulative distance mass, independently of the
    mixture sampler, so the two can cross-check each other.
    """
    validate_config(SeedingConfig(k=k), data)
    if rng is None:
        rng = np.random.default_rng(rng_seed)
    pts = data.points
    t0 = time.perf_counter()
    c1 = int(rng.integers(data.n))
    centers = [c1]
    diff = pts - pts[c1]
    min_dist = np.einsum("ij,ij->i", diff, diff)
    for _ in range(k - 1):
        total = float(min_dist.sum())
        if total <= 0.0:
            j = int(rng.integers(data.n))
        else:
            u = rng.random() * total
            j = min(int(np.searchsorted(np.cumsum(min_dist), u, side="right")), data.n - 1)
        centers.append(j)
        diff = pts - pts[j]
        np.minimum(min_dist, np.einsum("ij,ij->i", diff, diff), out=min_dist)
    elapsed = time.perf_counter() - t0
    return _finalize(data, centers, elapsed, preprocess_time_s, 0, 0)


def uniform_seeding(
    data: Dataset,
    k: int,
    rng: np.random.Generator | None = None,
    rng_seed: int = 0,
    preprocess_time_s: float = 0.0,
) -> SeedingResult:
    """k i.i.d. uniform indices (sampling with replacement)."""
    validate_config(SeedingConfig(k=k), data)
    if rng is None:
        rng = np.random.default_rng(rng_seed)
    t0 = time.perf_counter()
    centers = [int(c) for c in rng.integers(data.n, size=k)]
    elapsed = time.perf_counter() - t0
    return _finalize(data, centers, elapsed, preprocess_time_s, 0, 0)


def run_variant(
    variant: Variant,
    data: Dataset,
    cfg: SeedingConfig,
    rng: np.random.Generator | None = None,
    tree: SampleTree | None = None,
    preprocess_time_s: float = 0.0,
) -> SeedingResult:
    """Dispatch one seeding run for the given variant."""
    variant = Variant(variant)
    if variant is Variant.RS:
        if tree is None:
            tree = SampleTree.build(np.sqrt(data.sq_norms))
        return rs_kmeanspp(data, tree, cfg, rng=rng, preprocess_time_s=preprocess_time_s)
    if variant is Variant.DELTA:
        return delta_kmeanspp(data, cfg, rng=rng, preprocess_time_s=preprocess_time_s)
    if variant is Variant.EXACT:
        return exact_kmeanspp(data, cfg.k, rng=rng, rng_seed=cfg.rng_seed, preprocess_time_s=preprocess_time_s)
    return uniform_seeding(data, cfg.k, rng=rng, rng_seed=cfg.rng_seed, preprocess_time_s=preprocess_time_s)


def build_trace(data: Dataset, centers, partition, k: int) -> SeedingTrace:
    """Reconstruct per-iteration covered/uncovered diagnostics from a center
    sequence and a reference partition with clusters 0..k-1."""
    labels = np.asarray(partition)
    if labels.shape != (data.n,):
        raise PartitionMismatch(f"partition length {labels.shape} does not match n={data.n}")
    if labels.size and (labels.min() < 0 or labels.max() >= k):
        raise PartitionMismatch(f"partition labels must lie in [0, {k})")
    pts = data.points
    trace = SeedingTrace(partition=labels)
    covered: set[int] = set()
    for t, c in enumerate(centers, start=1):
        covered.add(int(labels[c]))
        uncovered = frozenset(range(k)) - covered
        wasted = t - len(covered)
        if uncovered:
            mask = np.isin(labels, list(uncovered))
            ucost = float(_min_dist_sq(pts, centers[:t])[mask].sum())
            potential = wasted / len(uncovered) * ucost
        else:
            ucost = 0.0
            potential = 0.0
        trace.steps.append(
            TraceStep(
                chosen=int(c),
                covered=frozenset(covered),
                uncovered=uncovered,
                wasted=wasted,
                uncovered_cost=ucost,
                potential=potential,
            )
        )
    return trace


def trace_seeding(
    variant: Variant,
    data: Dataset,
    cfg: SeedingConfig,
    reference_partition,
    rng: np.random.Generator | None = None,
    tree: SampleTree | None = None,
) -> tuple[SeedingResult, SeedingTrace]:
    """Run a variant and record covered clusters, wasted iterations, and the
    potential after every iteration. Intended for small-instance analysis."""
    labels = np.asarray(reference_partition)
    if labels.shape != (data.n,):
        raise PartitionMismatch(f"partition length {labels.shape} does not match n={data.n}")
    result = run_variant(variant, data, cfg, rng=rng, tree=tree)
    return result, build_trace(data, result.centers, labels, cfg.k)
