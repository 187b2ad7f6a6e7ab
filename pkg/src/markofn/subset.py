"""Closed-form subset-sum reference formulas.

These evaluate the same state probabilities as the generating-function
engine, but directly: the transfer-matrix product expands into a sum
over subsets of components, one plain numeric 3x3 matrix product per
subset.  The cost is exponential in n, so both entry points carry hard
size guards; this module exists as an independently-coded cross-check,
not as a production backend.

For the tail probability of one level count, the factor for component
u is the transfer matrix evaluated at t = 0 when u is outside the
subset and the difference between the t = 1 and t = 0 evaluations when
u belongs to it; summing the bracketed products over all subsets of
size at least k gives the tail.

For the joint version a pair of subsets (S1 for level 1, S2 for level
2) selects per-component factors from evaluations at (0,0), (1,0) and
(1,1).  A component in S2 but not in S1 contributes a zero matrix, so
pairs with S2 not contained in S1 vanish; they are skipped by
enumerating the three surviving memberships per component (in neither,
in S1 only, in both), which prunes the pair count from 4^n to 3^n.
"""

from __future__ import annotations

import numpy as np

from .model import ComponentChain, ModelError, SystemSpec, ThresholdOutOfRange, TooLarge
from .pgf import _check_level, transfer_matrix_bivariate, transfer_matrix_univariate

MAX_N_TAIL = 20
MAX_N_STATE = 12


def _fold_masked(vectors: np.ndarray, choose: np.ndarray, factors: list[np.ndarray]) -> np.ndarray:
    """Multiply each row vector by the factor selected for its subset."""
    out = np.empty_like(vectors)
    for which, factor in enumerate(factors):
        sel = choose == which
        out[sel] = vectors[sel] @ factor
    return out


def subset_tail_probability(chain: ComponentChain, level: int, threshold: int) -> float:
    """Tail probability of one level count via subset enumeration.

    Enumerates all 2^n subsets in ascending binary-mask order (bit u-1
    marks component u) and sums the per-subset bracketed products whose
    subset size is at least ``threshold``.
    """
    _check_level(level)
    n = chain.n
    if n > MAX_N_TAIL:
        raise TooLarge(f"subset tail enumeration is guarded at n <= {MAX_N_TAIL}, got n = {n}")
    if not 1 <= threshold <= n:
        raise ThresholdOutOfRange(f"threshold {threshold} outside 1..{n}")

    outside = []
    inside = []
    for m in chain:
        h = transfer_matrix_univariate(m, level)
        at0 = h.evaluate(0.0)
        outside.append(at0)
        inside.append(h.evaluate(1.0) - at0)

    masks = np.arange(1 << n, dtype=np.int64)
    vectors = np.zeros((1 << n, 3))
    vectors[:, 0] = 1.0
    sizes = np.zeros(1 << n, dtype=np.int64)
    for u in range(n):
        bit = (masks >> u) & 1
        vectors = _fold_masked(vectors, bit, [outside[u], inside[u]])
        sizes += bit
    terms = vectors.sum(axis=1)

    # bincount accumulates in input order, i.e. ascending mask order.
    by_size = np.bincount(sizes, weights=terms, minlength=n + 1)
    total = 0.0
    for value in by_size[threshold:]:
        total += float(value)
    return total


def subset_state_probability(chain: ComponentChain, spec: SystemSpec, state: int) -> float:
    """Exact-state probability (state 1 or 2) via subset-pair enumeration.

    State 2 sums over every S1 paired with each S2 of size at least k2;
    state 1 restricts to S1 of size at least k1 paired with S2 of size
    below k2.  Only pairs with S2 inside S1 are enumerated; the skipped
    pairs contain a zero factor and contribute exactly nothing.
    """
    if state not in (1, 2):
        raise ModelError(f"state must be 1 or 2, got {state!r}")
    n = chain.n
    if n > MAX_N_STATE:
        raise TooLarge(f"subset pair enumeration is guarded at n <= {MAX_N_STATE}, got n = {n}")
    if spec.n != n:
        raise ModelError(f"spec is for n={spec.n} but chain has n={chain.n}")

    factors = []
    for m in chain:
        h = transfer_matrix_bivariate(m)
        at00 = h.evaluate(0.0, 0.0)
        at10 = h.evaluate(1.0, 0.0)
        at11 = h.evaluate(1.0, 1.0)
        factors.append([at00, at10 - at00, at11 - at10])

    total = 3**n
    indices = np.arange(total, dtype=np.int64)
    vectors = np.zeros((total, 3))
    vectors[:, 0] = 1.0
    size1 = np.zeros(total, dtype=np.int64)
    size2 = np.zeros(total, dtype=np.int64)
    power = 1
    for u in range(n):
        # Digit 0: in neither subset; 1: in S1 only; 2: in S1 and S2.
        digit = (indices // power) % 3
        vectors = _fold_masked(vectors, digit, factors[u])
        size1 += digit >= 1
        size2 += digit == 2
        power *= 3
    terms = vectors.sum(axis=1)

    buckets = np.bincount(
        size1 * (n + 1) + size2, weights=terms, minlength=(n + 1) ** 2
    ).reshape(n + 1, n + 1)
    if state == 2:
        block = buckets[:, spec.k2:]
    else:
        block = buckets[spec.k1:, : spec.k2]
    total_prob = 0.0
    for value in block.ravel():
        total_prob += float(value)
    return total_prob
