"""Deterministic random streams with an explicitly specified algorithm.

Simulation results must be reproducible bit-for-bit from a 64-bit seed
alone, including across language ports, so the generator is pinned down
here instead of delegating to a platform default.

Stream construction
    Sample index i (0-based) owns an independent generator whose
    initial state is the splitmix64 output for input
    ``seed + i * 0x9E3779B97F4A7C15`` (all arithmetic mod 2^64), i.e.
    the (i+1)-th output of the canonical splitmix64 sequence started at
    ``seed``.  Streams can therefore be split or sharded by index range
    with no coordination.  A zero initial state (one input in 2^64) is
    replaced by the golden-gamma constant because the draw update has 0
    as a fixed point.

splitmix64 output function, input x:
    z = (x + 0x9E3779B97F4A7C15) mod 2^64
    z = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    z = z xor (z >> 31)

Draw update (xorshift64*), state x != 0:
    x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27        (new state)
    output = (x * 0x2545F4914F6CDD1D) mod 2^64
    uniform in [0, 1) = (output >> 11) * 2^-53
"""

from __future__ import annotations

import numpy as np

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB
DRAW_MULT = 0x2545F4914F6CDD1D

_MASK64 = (1 << 64) - 1
_U64 = np.uint64
_INV_2_53 = 2.0**-53


def splitmix64(value: int) -> int:
    """Scalar splitmix64 output function (plain-integer reference)."""
    z = (value + GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * MIX_MULT_1) & _MASK64
    z = ((z ^ (z >> 27)) * MIX_MULT_2) & _MASK64
    return z ^ (z >> 31)


def stream_states(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Initial draw states for sample indices offset..offset+count-1."""
    base = _U64(seed & _MASK64)
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = base + idx * _U64(GOLDEN_GAMMA)
    z = (z ^ (z >> _U64(30))) * _U64(MIX_MULT_1)
    z = (z ^ (z >> _U64(27))) * _U64(MIX_MULT_2)
    z = z ^ (z >> _U64(31))
    z[z == 0] = _U64(GOLDEN_GAMMA)
    return z


def advance(states: np.ndarray) -> np.ndarray:
    """One xorshift64* step in place; returns uniforms in [0, 1)."""
    states ^= states >> _U64(12)
    states ^= states << _U64(25)
    states ^= states >> _U64(27)
    out = states * _U64(DRAW_MULT)
    return (out >> _U64(11)).astype(np.float64) * _INV_2_53
