"""Compare the four seeding variants on planted clusters, then inspect a
trace: covered clusters, wasted iterations, and the potential.

Run with: python demos/03_seeding_comparison.py
"""

import numpy as np

from rskpp import SeedingConfig, UNBOUNDED, planted_gaussians, preprocess, trace_seeding
from rskpp.seeding import Variant, run_variant

pts, labels, _ = planted_gaussians(2000, 5, 3, separation=8.0, rng=np.random.default_rng(2))
prep = preprocess(pts)

print(f"planted instance: n={prep.data.n}, d={prep.data.d}, k=5, variance {prep.data.total_sq_norm:.4g}")
print(f"{'variant':<10} {'mean cost':>12} {'mean fallbacks':>15}")
repeats = 30
for variant in Variant:
    cfg = SeedingConfig(k=5, m=20, delta=0.1)
    costs, falls = [], []
    for r in range(repeats):
        res = run_variant(variant, prep.data, cfg, rng=np.random.default_rng(1000 ^ r), tree=prep.tree)
        costs.append(res.cost)
        falls.append(res.fallback_count)
    print(f"{variant.value:<10} {np.mean(costs):>12.4g} {np.mean(falls):>15.2f}")

print("\none traced unbounded run against the planted partition:")
cfg = SeedingConfig(k=5, m=UNBOUNDED, rng_seed=7)
_, trace = trace_seeding(Variant.RS, prep.data, cfg, labels, tree=prep.tree)
print(f"{'t':>2} {'chosen':>7} {'covered':>8} {'wasted':>7} {'uncovered cost':>15} {'potential':>10}")
for t, step in enumerate(trace.steps, start=1):
    print(
        f"{t:>2} {step.chosen:>7} {len(step.covered):>8} {step.wasted:>7} "
        f"{step.uncovered_cost:>15.4g} {step.potential:>10.4g}"
    )
