"""Why the transfer-matrix product exists: polynomial vs exponential cost.

The univariate product costs O(n^2) scalar multiply-adds and the
bivariate one O(n^3); the closed-form subset sums cost O(2^n) and
O(3^n).  The table below makes the gap concrete on one machine.
"""

import time

import numpy as np

from markofn import (
    ComponentChain,
    SystemSpec,
    general_distribution,
    increasing_distribution,
    subset_tail_probability,
)


def once(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


gen = np.random.default_rng(31415)
print(f"{'n':>5} {'univariate':>12} {'bivariate':>12} {'subset tails':>13}")
for n in (8, 12, 16, 20, 64, 256):
    rows = gen.random((n, 3, 3))
    rows /= rows.sum(axis=2, keepdims=True)
    chain = ComponentChain(rows)
    spec = SystemSpec(n, max(1, n // 3), (2 * n) // 3)

    t_uni = once(lambda: increasing_distribution(chain, spec))
    t_biv = once(lambda: general_distribution(chain, spec))
    if n <= 20:
        t_sub = once(lambda: subset_tail_probability(chain, 1, spec.k1))
        sub_cell = f"{t_sub * 1e3:10.2f}ms"
    else:
        sub_cell = f"{'(guarded)':>12}"
    print(f"{n:>5} {t_uni * 1e3:10.2f}ms {t_biv * 1e3:10.2f}ms {sub_cell}")

print("\nsubset enumeration doubles per added component; the products only")
print("gain one more fold step.")
