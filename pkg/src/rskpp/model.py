"""Core data types shared by all modules: datasets, configs, results, traces.

All types are immutable after construction except SeedingTrace, which is
built incrementally by a single owner. Instances are safe to share
read-only across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

# Unlimited rejection-round budget. Runs with this budget are still guarded
# by SeedingConfig.safety_cap so a zero-cost instance cannot loop forever.
UNBOUNDED = None

DEFAULT_SAFETY_CAP = 10**6


@dataclass(frozen=True, eq=False)
class Dataset:
    """A point matrix plus the precomputed norms the samplers rely on.

    `points` is an n x d float64 matrix. `sq_norms[i]` is the squared
    Euclidean norm of row i and `total_sq_norm` their sum. When `centered`
    is true the column means are (numerically) zero, in which case
    `total_sq_norm` equals the dataset variance cost around its centroid.
    """

    points: np.ndarray
    sq_norms: np.ndarray
    total_sq_norm: float
    nnz: int
    centered: bool

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    @classmethod
    def from_points(cls, points, centered: bool | None = None) -> "Dataset":
        """Build a Dataset, computing norms and nnz from the matrix.

        `centered` is auto-detected when not given (column means zero to
        within 1e-9 of the largest coordinate magnitude).
        """
        pts = np.ascontiguousarray(points, dtype=np.float64)
        if pts.ndim != 2:
            raise ValueError("points must be a 2-d matrix")
        sq = np.einsum("ij,ij->i", pts, pts)
        if centered is None:
            scale = float(np.max(np.abs(pts))) if pts.size else 0.0
            mean = np.abs(pts.mean(axis=0)) if pts.size else np.zeros(0)
            centered = bool(pts.size == 0 or np.all(mean <= 1e-9 * max(scale, 1e-300)))
        return cls(
            points=pts,
            sq_norms=sq,
            total_sq_norm=float(sq.sum()),
            nnz=int(np.count_nonzero(pts)),
            centered=centered,
        )


@dataclass(frozen=True)
class SeedingConfig:
    """Run parameters for a single seeding.

    m is the per-draw rejection-round budget; UNBOUNDED (None) removes the
    bound, subject to safety_cap. With scale_by_ln_k the effective budget
    becomes ceil(c_mult * m * ln(max(k, 2))).
    """

    k: int
    m: int | None = UNBOUNDED
    c_mult: float = 1.0
    scale_by_ln_k: bool = False
    delta: float = 0.0
    rng_seed: int = 0
    safety_cap: int = DEFAULT_SAFETY_CAP

    def effective_budget(self) -> int | None:
        if self.m is UNBOUNDED:
            return UNBOUNDED
        if not self.scale_by_ln_k:
            return self.m
        return math.ceil(self.c_mult * self.m * math.log(max(self.k, 2)))

    def to_json(self) -> str:
        fields = {
            "k": self.k,
            "m": self.m,
            "c_mult": self.c_mult,
            "scale_by_ln_k": self.scale_by_ln_k,
            "delta": self.delta,
            "rng_seed": self.rng_seed,
            "safety_cap": self.safety_cap,
        }
        return json.dumps(fields, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SeedingConfig":
        raw = json.loads(text)
        return cls(
            k=int(raw["k"]),
            m=None if raw["m"] is None else int(raw["m"]),
            c_mult=float(raw["c_mult"]),
            scale_by_ln_k=bool(raw["scale_by_ln_k"]),
            delta=float(raw["delta"]),
            rng_seed=int(raw["rng_seed"]),
            safety_cap=int(raw["safety_cap"]),
        )


@dataclass(frozen=True)
class SeedingResult:
    """Output of one seeding run.

    Centers are indices into the dataset (duplicates permitted: sampling is
    with replacement). seeding_time_s covers center selection only;
    preprocessing and the final cost evaluation are excluded.
    """

    centers: list[int]
    cost: float
    preprocess_time_s: float
    seeding_time_s: float
    fallback_count: int
    total_rejection_rounds: int

    def to_json(self, zero_timings: bool = False) -> str:
        fields = {
            "centers": list(self.centers),
            "cost": self.cost,
            "preprocess_time_s": 0.0 if zero_timings else self.preprocess_time_s,
            "seeding_time_s": 0.0 if zero_timings else self.seeding_time_s,
            "fallback_count": self.fallback_count,
            "total_rejection_rounds": self.total_rejection_rounds,
        }
        return json.dumps(fields, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SeedingResult":
        raw = json.loads(text)
        return cls(
            centers=[int(c) for c in raw["centers"]],
            cost=float(raw["cost"]),
            preprocess_time_s=float(raw["preprocess_time_s"]),
            seeding_time_s=float(raw["seeding_time_s"]),
            fallback_count=int(raw["fallback_count"]),
            total_rejection_rounds=int(raw["total_rejection_rounds"]),
        )


@dataclass(frozen=True)
class TraceStep:
    """Diagnostics after iteration t (1-based) of a traced seeding run."""

    chosen: int
    covered: frozenset
    uncovered: frozenset
    wasted: int
    uncovered_cost: float
    potential: float


@dataclass
class SeedingTrace:
    """Per-iteration covered/uncovered bookkeeping against a reference partition.

    The partition assigns every point to one of k reference clusters
    (planted truth or a brute-forced optimum). The potential at step t is
    (W_t / |U_t|) * cost(uncovered points), defined as 0 once every
    cluster is covered.
    """

    partition: np.ndarray
    steps: list[TraceStep] = field(default_factory=list)

    def covered_new_cluster_flags(self) -> list[bool]:
        """True at position t-1 iff iteration t covered a new cluster."""
        flags = []
        seen = 0
        for step in self.steps:
            flags.append(len(step.covered) > seen)
            seen = len(step.covered)
        return flags


def validate_config(cfg: SeedingConfig, data: Dataset) -> None:
    """Raise ConfigError unless cfg satisfies its invariants against data."""
    if cfg.k < 1:
        raise ConfigError("BAD_K", f"k must be >= 1, got {cfg.k}")
    if cfg.k > data.n:
        raise ConfigError("K_TOO_LARGE", f"k={cfg.k} exceeds point count n={data.n}")
    if cfg.m is not UNBOUNDED and cfg.m < 1:
        raise ConfigError("BAD_M", f"round budget m must be >= 1 when bounded, got {cfg.m}")
    if not (0.0 <= cfg.delta < 0.5):
        raise ConfigError("BAD_DELTA", f"delta must lie in [0, 0.5), got {cfg.delta}")
    if cfg.safety_cap < 1:
        raise ConfigError("BAD_M", f"safety_cap must be >= 1, got {cfg.safety_cap}")
