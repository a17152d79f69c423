"""The mixture proposal sampler and the rejection-sampling loop that turns
proposal draws into draws from the squared-distance seeding distribution.

Given a first center c1, the proposal law over points is

    (||x||^2 + ||c1||^2) / (||X||^2 + n * ||c1||^2)

realized as a two-component mixture: with probability
||X||^2 / (||X||^2 + n * ||c1||^2) sample from the norm tree, otherwise
uniformly. This proposal 2(||X||^2 + n||c1||^2)/cost(X,S)-oversamples the
squared-distance law, so an unbounded rejection loop emits exact draws and
a budget of m rounds emits a (1-delta) target / delta uniform mixture with
delta <= exp(-m/tau).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadProbability, EmptyCenters, SafetyCapExceeded, ZeroMass
from .model import DEFAULT_SAFETY_CAP, Dataset, UNBOUNDED
from .sqtree import SampleTree


@dataclass(frozen=True)
class RejectionOutcome:
    """One accepted (or fallen-back) draw. fell_back implies rounds_used
    equals the round budget."""

    index: int
    rounds_used: int
    fell_back: bool


class ProposalSampler:
    """The proposal distribution bound to a first center c1.

    Holds a reference to the dataset's norm tree; never mutates it.
    """

    __slots__ = ("tree", "c1_sq_norm", "n", "mix_threshold")

    def __init__(self, tree: SampleTree, c1_sq_norm: float, n: int):
        total = tree.total()
        denom = total + n * c1_sq_norm
        if denom <= 0.0:
            raise ZeroMass("proposal has zero total mass (all points at the origin)")
        self.tree = tree
        self.c1_sq_norm = float(c1_sq_norm)
        self.n = n
        self.mix_threshold = total / denom

    def sample(self, rng: np.random.Generator) -> int:
        """One proposal draw: tree component below the mixture threshold,
        uniform above."""
        if rng.random() <= self.mix_threshold:
            return self.tree.sample(rng)
        return int(rng.integers(self.n))

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Vectorized `sample`; identical law, one decision variate per draw."""
        use_tree = rng.random(size) <= self.mix_threshold
        out = rng.integers(self.n, size=size)
        n_tree = int(use_tree.sum())
        if n_tree:
            out[use_tree] = self.tree.sample_batch(rng, n_tree)
        return out


def acceptance_ratio(x_sq_norm: float, c1_sq_norm: float, dist_sq_to_S: float) -> float:
    """Probability of accepting a proposed point x.

    Equals 0.5 * dist(x, S)^2 / (||x||^2 + ||c1||^2), which lies in [0, 1]
    because the squared distance to S is at most ||x - c1||^2 and the
    Cauchy-Schwarz inequality bounds that by 2(||x||^2 + ||c1||^2). Both
    norms can vanish only when x = c1 = origin, where the distance is 0
    and the ratio is defined as 0.
    """
    denom = x_sq_norm + c1_sq_norm
    if denom <= 0.0:
        return 0.0
    # min() guards the Cauchy-Schwarz equality case against float rounding.
    return min(1.0, 0.5 * dist_sq_to_S / denom)


def d2_sample(
    data: Dataset,
    centers,
    budget: int | None,
    proposal: ProposalSampler,
    rng: np.random.Generator,
    safety_cap: int = DEFAULT_SAFETY_CAP,
) -> RejectionOutcome:
    """Draw the next center index by rejection sampling against `proposal`.

    With budget UNBOUNDED the returned index follows the exact
    squared-distance law over `data` given `centers`; `safety_cap` bounds
    the loop and converts a zero-cost instance (fewer distinct points than
    requested centers) into SafetyCapExceeded instead of a hang. With a
    finite budget of m rounds the law is a (1-delta) squared-distance /
    delta uniform mixture with delta = P(no acceptance in m rounds)
    <= exp(-m/tau).

    The squared distance to the current centers is recomputed per proposal
    in O(len(centers) * d); acceptance draws the proposal first and the
    uniform variate second.
    """
    if len(centers) == 0:
        raise EmptyCenters("d2_sample requires at least one chosen center")
    pts = data.points
    sq_norms = data.sq_norms
    center_block = pts[np.asarray(centers, dtype=np.intp)]
    c1_sq = proposal.c1_sq_norm
    propose = proposal.sample
    random = rng.random

    limit = safety_cap if budget is UNBOUNDED else budget
    rounds = 0
    while rounds < limit:
        rounds += 1
        j = propose(rng)
        diff = center_block - pts[j]
        dist_sq = float(np.einsum("ij,ij->i", diff, diff).min())
        # Strict < keeps zero-ratio proposals (already-chosen points)
        # unselectable, so the accepted law is exactly the target.
        if random() < acceptance_ratio(float(sq_norms[j]), c1_sq, dist_sq):
            return RejectionOutcome(index=j, rounds_used=rounds, fell_back=False)
    if budget is UNBOUNDED:
        raise SafetyCapExceeded(
            f"no proposal accepted within safety cap of {safety_cap} rounds; "
            "the residual clustering cost is (numerically) zero"
        )
    return RejectionOutcome(index=int(rng.integers(data.n)), rounds_used=budget, fell_back=True)


def expected_parallel_rounds(p: float, workers: int) -> float:
    """Upper bound on expected rejection rounds when `workers` cores each
    attempt a round with per-round acceptance probability p.

    A batch of M independent rounds succeeds with probability at least
    1 - exp(-p*M), so the expected number of batches is at most
    e^(pM) / (e^(pM) - 1).
    """
    if not (0.0 < p <= 1.0):
        raise BadProbability(f"acceptance probability must be in (0, 1], got {p}")
    if workers < 1:
        raise BadProbability(f"worker count must be >= 1, got {workers}")
    x = p * workers
    return math.exp(x) / math.expm1(x)
