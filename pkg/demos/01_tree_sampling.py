"""Walk through the weighted sampling tree: build, query, update, sample.

Run with: python demos/01_tree_sampling.py
"""

import numpy as np

from rskpp import SampleTree

rng = np.random.default_rng(0)

values = np.array([3.0, -4.0, 1.0, 2.0, 5.0])
tree = SampleTree.build(values)

print("stored values:   ", values)
print("leaf weights:    ", [tree.leaf_weight(i) for i in range(len(values))])
print("leaf signs:      ", [tree.leaf_sign(i) for i in range(len(values))])
print(f"total weight:     {tree.total()} (= sum of squares, O(1) query)")

print("\nupdating entry 1 from -4 to 0 touches one root-to-leaf path:")
tree.update(1, 0.0)
print(f"  new total {tree.total()}, ancestors recomputed: {tree.last_update_ancestors}")

print("\nsampling follows the squared weights:")
n_draws = 200_000
draws = tree.sample_batch(rng, n_draws)
freqs = np.bincount(draws, minlength=len(values)) / n_draws
exact = np.array([tree.leaf_weight(i) for i in range(len(values))])
exact /= exact.sum()
for i, (f, e) in enumerate(zip(freqs, exact)):
    print(f"  index {i}: empirical {f:.4f}  exact {e:.4f}")

print("\na zeroed entry is never drawn again:", 1 not in set(draws))
