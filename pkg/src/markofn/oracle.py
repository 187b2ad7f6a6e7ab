"""Ground-truth backends independent of the generating-function algebra.

``brute_force_joint`` walks every one of the 3^n component state
sequences and accumulates the exact joint law of the two level counts;
``monte_carlo`` samples trajectories with the package's pinned RNG.
Neither touches a polynomial, which is what makes them usable as
oracles for the transfer-matrix engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import rng
from .model import ComponentChain, ModelError, SystemSpec, TooLarge, ZeroSamples

MAX_N_BRUTE = 12
_CHUNK = 1 << 19


@dataclass(frozen=True)
class JointPmf:
    """Exact joint law: table[x, y] = Pr{level-1 count = x, level-2 count = y}."""

    table: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.table, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ModelError(f"expected a square table, got shape {arr.shape}")
        if float(arr.min()) < 0.0:
            raise ModelError("joint pmf entries must be nonnegative")
        if np.any(np.triu(arr, k=1) != 0.0):
            raise ModelError("joint pmf support must satisfy y <= x")
        total = float(arr.sum())
        if abs(total - 1.0) > 1e-12:
            raise ModelError(f"joint pmf sums to {total!r}, expected 1 within 1e-12")
        arr.flags.writeable = False
        object.__setattr__(self, "table", arr)

    @property
    def n(self) -> int:
        return self.table.shape[0] - 1


def brute_force_joint(chain: ComponentChain) -> JointPmf:
    """Joint count law by exhaustive trajectory enumeration.

    Depth-first over state sequences with a running probability
    product, O(n) memory; subtrees of probability exactly zero are
    skipped, which cannot change any sum.
    """
    n = chain.n
    if n > MAX_N_BRUTE:
        raise TooLarge(f"brute force is guarded at n <= {MAX_N_BRUTE}, got n = {n}")
    mats = [m.rows.tolist() for m in chain]
    table = [[0.0] * (n + 1) for _ in range(n + 1)]

    def walk(u: int, prev: int, prob: float, count1: int, count2: int) -> None:
        if u == n:
            table[count1][count2] += prob
            return
        row = mats[u][prev]
        if row[0] != 0.0:
            walk(u + 1, 0, prob * row[0], count1, count2)
        if row[1] != 0.0:
            walk(u + 1, 1, prob * row[1], count1 + 1, count2)
        if row[2] != 0.0:
            walk(u + 1, 2, prob * row[2], count1 + 1, count2 + 1)

    walk(0, 0, 1.0, 0, 0)
    return JointPmf(np.array(table))


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo state-distribution estimate.

    The three proportions sum to exactly 1: each trajectory is
    classified into exactly one state, and r2_hat is computed as
    1 - (r0_hat + r1_hat) so the float identity survives division
    rounding.  ``counts`` holds the exact integer tallies.
    """

    r0_hat: float
    r1_hat: float
    r2_hat: float
    std_err: Tuple[float, float, float]
    counts: Tuple[int, int, int]
    samples: int
    seed: int

    def __post_init__(self):
        if sum(self.counts) != self.samples:
            raise ModelError("classification counts must partition the samples")


def monte_carlo(
    chain: ComponentChain,
    spec: SystemSpec,
    samples: int,
    seed: int,
    chunk_size: int = _CHUNK,
) -> McEstimate:
    """Seeded trajectory sampling with deterministic per-index streams.

    Component 1 is drawn from row 0 of the first matrix, component u
    from row X_{u-1} of matrix u.  A trajectory is classified as state
    2 when its level-2 count reaches k2, else state 1 when its level-1
    count reaches k1, else state 0.  Sample index i always consumes the
    same stream (see the rng module), so results are bit-identical for
    equal (chain, spec, samples, seed) regardless of chunking, and
    shards split by index range recombine exactly.
    """
    if samples < 1:
        raise ZeroSamples(f"need at least one sample, got {samples}")
    if spec.n != chain.n:
        raise ModelError(f"spec is for n={spec.n} but chain has n={chain.n}")
    stacked = chain.stacked()
    cum0 = np.ascontiguousarray(stacked[:, :, 0])
    cum1 = np.ascontiguousarray(stacked[:, :, 0] + stacked[:, :, 1])

    tally0 = 0
    tally1 = 0
    tally2 = 0
    for start in range(0, samples, chunk_size):
        m = min(chunk_size, samples - start)
        states = rng.stream_states(seed, m, offset=start)
        current = np.zeros(m, dtype=np.int64)
        count1 = np.zeros(m, dtype=np.int32)
        count2 = np.zeros(m, dtype=np.int32)
        for u in range(chain.n):
            uniforms = rng.advance(states)
            nxt = (uniforms >= cum0[u][current]).astype(np.int64)
            nxt += uniforms >= cum1[u][current]
            current = nxt
            count1 += current >= 1
            count2 += current == 2
        in_state2 = count2 >= spec.k2
        in_state1 = ~in_state2 & (count1 >= spec.k1)
        c2 = int(in_state2.sum())
        c1 = int(in_state1.sum())
        tally2 += c2
        tally1 += c1
        tally0 += m - c1 - c2

    r0 = tally0 / samples
    r1 = tally1 / samples
    r2 = 1.0 - (r0 + r1)
    errs = tuple(math.sqrt(p * (1.0 - p) / samples) for p in (r0, r1, r2))
    return McEstimate(
        r0_hat=r0,
        r1_hat=r1,
        r2_hat=r2,
        std_err=errs,
        counts=(tally0, tally1, tally2),
        samples=samples,
        seed=seed,
    )
