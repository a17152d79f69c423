"""Show the rejection sampler converting norm-proposal draws into exact
squared-distance draws, and what a finite round budget does to the law.

Run with: python demos/02_rejection_sampling.py
"""

import numpy as np

from rskpp import UNBOUNDED, expected_parallel_rounds, preprocess
from rskpp.sampling import ProposalSampler, d2_sample

rng = np.random.default_rng(1)
prep = preprocess(rng.normal(size=(20, 2)))
data, tree = prep.data, prep.tree

c1 = 3
centers = [c1]
proposal = ProposalSampler(tree, float(data.sq_norms[c1]), data.n)
print(f"proposal mixes tree draws (p={proposal.mix_threshold:.3f}) with uniform draws")

# exact per-point law for comparison
diff = data.points - data.points[c1]
dist_sq = np.einsum("ij,ij->i", diff, diff)
exact = dist_sq / dist_sq.sum()

n_draws = 50_000
outcomes = [d2_sample(data, centers, UNBOUNDED, proposal, rng) for _ in range(n_draws)]
freqs = np.bincount([o.index for o in outcomes], minlength=data.n) / n_draws
rounds = np.array([o.rounds_used for o in outcomes])

tau = 2 * (data.total_sq_norm + data.n * float(data.sq_norms[c1])) / float(dist_sq.sum())
print(f"unbounded: mean rounds {rounds.mean():.2f} vs tau {tau:.2f} (geometric law)")
print(f"largest |empirical - exact| probability gap: {np.abs(freqs - exact).max():.4f}")

for m in (1, 3, 10):
    outcomes = [d2_sample(data, centers, m, proposal, rng) for _ in range(n_draws)]
    fallback = np.mean([o.fell_back for o in outcomes])
    print(f"budget m={m:>2}: fallback rate {fallback:.3f} (bound exp(-m/tau) = {np.exp(-m/tau):.3f})")

print("\nwith M parallel workers the expected number of proposal rounds drops:")
for workers in (1, 2, 4, 8):
    print(f"  M={workers}: <= {expected_parallel_rounds(1 / tau, workers):.3f}")
