"""Four independent routes to the same numbers.

The transfer-matrix product is fast but worth distrusting, so three
slower backends cross it:

  subset formulas    closed-form sums over 2^n subsets (or 3^n subset
                     pairs) of plain numeric matrix products
  brute force        exhaustive walk over all 3^n state sequences
  monte carlo        seeded trajectory sampling

Below, all four evaluate one 8-component decreasing system.
"""

import numpy as np

from markofn import (
    ComponentChain,
    SystemSpec,
    brute_force_joint,
    general_distribution,
    monte_carlo,
    subset_state_probability,
)

gen = np.random.default_rng(2718)
rows = gen.random((8, 3, 3))
rows /= rows.sum(axis=2, keepdims=True)
chain = ComponentChain(rows)
spec = SystemSpec(n=8, k1=5, k2=3)

exact = general_distribution(chain, spec)
print(f"transfer matrix : r1={exact.r1:.12f}  r2={exact.r2:.12f}")

r1 = subset_state_probability(chain, spec, 1)
r2 = subset_state_probability(chain, spec, 2)
print(f"subset formulas : r1={r1:.12f}  r2={r2:.12f}"
      f"   (diff {max(abs(r1 - exact.r1), abs(r2 - exact.r2)):.1e})")

table = brute_force_joint(chain).table
b2 = float(table[:, spec.k2:].sum())
b1 = float(table[spec.k1:, : spec.k2].sum())
print(f"brute force     : r1={b1:.12f}  r2={b2:.12f}"
      f"   (diff {max(abs(b1 - exact.r1), abs(b2 - exact.r2)):.1e})")

est = monte_carlo(chain, spec, samples=200_000, seed=7)
z1 = abs(est.r1_hat - exact.r1) / est.std_err[1]
z2 = abs(est.r2_hat - exact.r2) / est.std_err[2]
print(f"monte carlo     : r1={est.r1_hat:.6f}        r2={est.r2_hat:.6f}"
      f"         (|z| = {z1:.2f}, {z2:.2f})")
