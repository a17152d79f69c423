"""Sample-and-query access over a vector: a complete binary tree whose
leaves hold squared entries and whose internal nodes hold child sums.

Supports O(log n) entry updates, O(1) total-weight queries, and O(log n)
weighted index sampling. The tree is padded with zero-weight leaves up to
a power-of-two capacity; padded leaves are never sampled.

Mutation requires exclusive access. A tree that is built once and then
only sampled from is safe to share across threads.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyDataset, IndexOutOfRange, NonFiniteInput, ZeroMass


class SampleTree:
    """Complete binary tree over per-entry weights v(i)^2.

    Layout: `weights` is a flat array of 2*capacity - 1 nodes; node i has
    children 2i+1 and 2i+2; leaves occupy the last `capacity` slots.
    Signs of the stored values are kept per leaf so the structure exposes
    the full vector, although this package only ever stores norms.
    """

    __slots__ = ("capacity", "logical_len", "weights", "signs", "last_update_ancestors")

    def __init__(self, capacity: int, logical_len: int, weights: np.ndarray, signs: np.ndarray):
        self.capacity = capacity
        self.logical_len = logical_len
        self.weights = weights
        self.signs = signs
        self.last_update_ancestors = 0

    @classmethod
    def build(cls, values) -> "SampleTree":
        """Build a tree whose leaf i carries values[i]^2 and sign(values[i])."""
        vals = np.asarray(values, dtype=np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise EmptyDataset("build requires a non-empty 1-d value array")
        if not np.isfinite(vals).all():
            raise NonFiniteInput("tree values must be finite")
        n = vals.size
        capacity = 1 << max(0, (n - 1).bit_length())
        weights = np.zeros(2 * capacity - 1, dtype=np.float64)
        signs = np.zeros(capacity, dtype=np.int8)
        first_leaf = capacity - 1
        weights[first_leaf : first_leaf + n] = vals * vals
        signs[:n] = np.sign(vals)
        # Internal sums, one level at a time from the bottom.
        level_start, level_size = first_leaf, capacity
        while level_size > 1:
            child = weights[level_start : level_start + level_size]
            level_size //= 2
            level_start = (level_start - 1) // 2
            weights[level_start : level_start + level_size] = child.reshape(-1, 2).sum(axis=1)
        return cls(capacity, n, weights, signs)

    def total(self) -> float:
        """Root weight, i.e. the squared norm of the stored vector."""
        return float(self.weights[0])

    def leaf_weight(self, i: int) -> float:
        self._check_index(i)
        return float(self.weights[self.capacity - 1 + i])

    def leaf_sign(self, i: int) -> int:
        self._check_index(i)
        return int(self.signs[i])

    def update(self, i: int, value: float) -> None:
        """Set entry i to `value`; leaf weight becomes value^2.

        Every ancestor is recomputed by re-summing its two children rather
        than by delta adjustment, so floating-point drift cannot
        accumulate in internal nodes.
        """
        self._check_index(i)
        if not np.isfinite(value):
            raise NonFiniteInput("tree values must be finite")
        w = self.weights
        node = self.capacity - 1 + i
        w[node] = value * value
        self.signs[i] = np.sign(value)
        touched = 0
        while node > 0:
            node = (node - 1) >> 1
            left = (node << 1) + 1
            w[node] = w[left] + w[left + 1]
            touched += 1
        self.last_update_ancestors = touched

    def sample(self, rng: np.random.Generator) -> int:
        """Draw index i with probability v(i)^2 / ||v||^2.

        One fresh uniform variate per level; descend left iff
        u * node_weight < left_child_weight, which makes zero-weight
        subtrees unreachable.
        """
        w = self.weights
        if w[0] <= 0.0:
            raise ZeroMass("cannot sample from a tree with zero total weight")
        node = 0
        first_leaf = self.capacity - 1
        while node < first_leaf:
            left = (node << 1) + 1
            node = left if rng.random() * w[node] < w[left] else left + 1
        return node - first_leaf

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Vectorized `sample`: `size` independent draws with the same law."""
        w = self.weights
        if w[0] <= 0.0:
            raise ZeroMass("cannot sample from a tree with zero total weight")
        nodes = np.zeros(size, dtype=np.int64)
        levels = self.capacity.bit_length() - 1
        for _ in range(levels):
            left = 2 * nodes + 1
            go_left = rng.random(size) * w[nodes] < w[left]
            nodes = np.where(go_left, left, left + 1)
        return nodes - (self.capacity - 1)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.logical_len:
            raise IndexOutOfRange(f"index {i} out of range for length {self.logical_len}")
