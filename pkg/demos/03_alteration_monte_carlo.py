"""
How good is the alteration method in practice?
==============================================

The expected size of sample-minus-triangles at the optimal probability is the
probabilistic lower bound.  We compare the empirical mean over many seeds with
it, and sweep the sampling probability to see where the optimum sits.
"""

import numpy as np

from trifree import Params, SamplingPlan, alteration_construction, lower_bound_probabilistic
from trifree.bounds import optimal_sampling_probability, triangle_count_formula

for n, r in [(6, 2), (8, 2), (9, 4), (10, 4)]:
    params = Params(n, r)
    sizes = [alteration_construction(params, SamplingPlan(seed=s))[1].final_size for s in range(300)]
    print(f"n={n:2d} r={r}: mean {np.mean(sizes):7.3f}  bound {lower_bound_probabilistic(params):7.3f}"
          f"  max {max(sizes)}")

# E[X - Y] = 2^n p - p^3 T against the empirical mean, across p
params = Params(8, 2)
T = triangle_count_formula(params)
p_star = optimal_sampling_probability(params)
print(f"\noptimal p for n=8 r=2: {p_star:.4f}")
for p in np.linspace(0.02, 0.3, 8):
    sizes = [alteration_construction(params, SamplingPlan(float(p), seed=s))[1].final_size
             for s in range(100)]
    print(f"p={p:.3f}  E[X-Y]={2**8 * p - p**3 * T:8.3f}  empirical mean {np.mean(sizes):7.3f}")
