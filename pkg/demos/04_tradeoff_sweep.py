"""Reproduce the cost-vs-time trade-off protocol at desk scale: sweep the
round budget, benchmark each cell, and write the bench CSV that the
plotting frontend consumes.

Run with: python demos/04_tradeoff_sweep.py [output.csv]
"""

import sys

import numpy as np

from rskpp import SeedingConfig, UNBOUNDED, planted_gaussians, preprocess, rs_kmeanspp, exact_kmeanspp, summarize

out_path = sys.argv[1] if len(sys.argv) > 1 else "tradeoff_bench.csv"
pts, _, _ = planted_gaussians(20_000, 10, 4, separation=7.0, rng=np.random.default_rng(3))
prep = preprocess(pts)
repeats = 40
base_seed = 11

rows = []
for m in (5, 10, 20, 50, 75, 100, 125, 150):
    costs, times = [], []
    for r in range(repeats):
        res = rs_kmeanspp(prep.data, prep.tree, SeedingConfig(k=10, m=m), rng=np.random.default_rng(base_seed ^ r))
        costs.append(res.cost)
        times.append(res.seeding_time_s)
    s = summarize(costs)
    rows.append(("planted", "rs", 10, m, repeats, s.mean, s.std, s.ci95_half_width,
                 float(np.mean(times)), prep.elapsed_s, 0.0, base_seed))
    print(f"m={m:>3}: mean cost {s.mean:.5g} +- {s.ci95_half_width:.3g}, {np.mean(times)*1e3:.1f} ms")

costs, times = [], []
for r in range(repeats):
    res = exact_kmeanspp(prep.data, 10, rng=np.random.default_rng(base_seed ^ r))
    costs.append(res.cost)
    times.append(res.seeding_time_s)
s = summarize(costs)
rows.append(("planted", "exact", 10, "UNBOUNDED", repeats, s.mean, s.std, s.ci95_half_width,
             float(np.mean(times)), prep.elapsed_s, 0.0, base_seed))
print(f"baseline exact seeding: mean cost {s.mean:.5g} +- {s.ci95_half_width:.3g}")

header = ("dataset,variant,k,m,repeats,mean_cost,std_cost,ci95_cost,"
          "mean_seed_time_s,mean_preprocess_time_s,mean_fallback_count,rng_seed")
with open(out_path, "w") as fh:
    fh.write(header + "\n")
    for row in rows:
        fh.write(",".join(str(v) for v in row) + "\n")
print(f"\nwrote {out_path}; render it with: plots/tradeoff {out_path} tradeoff.png")
