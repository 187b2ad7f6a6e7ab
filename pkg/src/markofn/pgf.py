"""Generating-function engine for component-level state counts.

For a chain of n components let the level-j count be the number of
components in state j or above (j = 1, 2).  The distribution of that
count is carried by a polynomial whose coefficient of t^x is the
probability that exactly x components are at level j or above; the
joint distribution of the two counts is carried by a bivariate
polynomial in (t1, t2).

Both polynomials are computed as a transfer-matrix product: each
component contributes a 3x3 matrix whose entries are its conditional
probabilities tagged with a monomial marker recording whether the
target state counts toward the level.  The product is evaluated as a
left-to-right fold of a 1x3 row vector of polynomial accumulators,
starting from (1, 0, 0) because the chain enters at state 0, and is
finished by summing the three accumulators.  Every fold step multiplies
a polynomial by a scalar and shifts it by at most one index per
variable, never by a general convolution, which keeps the cost at
O(n^2) scalar multiply-adds for the univariate product and O(n^3) for
the bivariate one.

The univariate fold is deliberately plain Python: its per-step arrays
are tiny, and array-library dispatch overhead would drown the O(n)
arithmetic that the quadratic cost model is built on.  The bivariate
fold works on (n+1)x(n+1) tables and uses numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .model import (
    ComponentChain,
    ModelError,
    StateDistribution,
    SystemKind,
    SystemSpec,
    ThresholdOutOfRange,
    TransitionMatrix,
    WrongStructure,
)

COEFF_FLOOR = -1e-12


def _check_level(level: int) -> int:
    if level not in (1, 2):
        raise ModelError(f"level must be 1 or 2, got {level!r}")
    return level


class UnivariatePoly:
    """Dense polynomial; coeffs[x] is the coefficient of t^x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ModelError(f"expected a non-empty 1-D coefficient array, got shape {arr.shape}")
        if float(arr.min()) < COEFF_FLOOR:
            raise ModelError(f"coefficient below {COEFF_FLOOR:g}: {float(arr.min())!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("UnivariatePoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t: float) -> float:
        """Horner evaluation at a scalar point."""
        acc = 0.0
        for c in self.coeffs[::-1]:
            acc = acc * t + float(c)
        return acc

    def total(self) -> float:
        """Sum of all coefficients, i.e. the value at t = 1."""
        return tail_probability(self, 0)

    def __repr__(self):
        return f"UnivariatePoly({self.coeffs.tolist()!r})"


class BivariatePoly:
    """Dense bivariate polynomial; coeffs[x, y] multiplies t1^x t2^y.

    Every component at level 2 is also at level 1, so the support is
    the triangle y <= x; entries above the diagonal must be exactly 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
            raise ModelError(f"expected a square coefficient table, got shape {arr.shape}")
        if np.any(np.triu(arr, k=1) != 0.0):
            raise ModelError("support above the diagonal: some coeffs[x, y] with y > x is nonzero")
        if float(arr.min()) < COEFF_FLOOR:
            raise ModelError(f"coefficient below {COEFF_FLOOR:g}: {float(arr.min())!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    @property
    def size(self) -> int:
        return self.coeffs.shape[0]

    def evaluate(self, t1: float, t2: float) -> float:
        m = self.size
        pow1 = np.power(float(t1), np.arange(m))
        pow2 = np.power(float(t2), np.arange(m))
        return float(pow1 @ self.coeffs @ pow2)

    def marginal(self, level: int) -> UnivariatePoly:
        """Marginal polynomial of one count (level 1 sums over t2, level 2 over t1)."""
        _check_level(level)
        axis = 1 if level == 1 else 0
        return UnivariatePoly(self.coeffs.sum(axis=axis))

    def total(self) -> float:
        return float(self.coeffs.sum())

    def __repr__(self):
        return f"BivariatePoly(size={self.size})"


@dataclass(frozen=True)
class PolyMatrix3:
    """3x3 matrix of polynomials, all sharing one coefficient shape."""

    entries: Tuple[Tuple[object, object, object], ...]

    def __post_init__(self):
        if len(self.entries) != 3 or any(len(row) != 3 for row in self.entries):
            raise ModelError("expected a 3x3 grid of polynomials")
        first = self.entries[0][0]
        for row in self.entries:
            for e in row:
                if type(e) is not type(first) or e.coeffs.shape != first.coeffs.shape:
                    raise ModelError("all nine entries must share one polynomial type and shape")

    def evaluate(self, *point: float) -> np.ndarray:
        """Numeric 3x3 matrix obtained by evaluating every entry."""
        return np.array([[e.evaluate(*point) for e in row] for row in self.entries])


def transfer_matrix_univariate(matrix: TransitionMatrix, level: int) -> PolyMatrix3:
    """Per-component transfer matrix for one level count.

    Entry [a][b] is p[a][b] * t when target state b is at or above the
    level, otherwise the constant p[a][b].  Evaluating at t = 1 gives
    back the plain transition matrix.
    """
    _check_level(level)
    rows = []
    for a in range(3):
        row = []
        for b in range(3):
            p = float(matrix.rows[a, b])
            row.append(UnivariatePoly([0.0, p] if level <= b else [p, 0.0]))
        rows.append(tuple(row))
    return PolyMatrix3(tuple(rows))


def transfer_matrix_bivariate(matrix: TransitionMatrix) -> PolyMatrix3:
    """Per-component transfer matrix marking both counts at once.

    Column 0 entries are constants, column 1 entries carry t1, and
    column 2 entries carry t1*t2 (state 2 counts toward both levels).
    """
    rows = []
    for a in range(3):
        row = []
        for b in range(3):
            c = np.zeros((2, 2))
            c[min(b, 1), 1 if b == 2 else 0] = float(matrix.rows[a, b])
            row.append(BivariatePoly(c))
        rows.append(tuple(row))
    return PolyMatrix3(tuple(rows))


def _product_univariate(rows_list: Sequence, level: int) -> list:
    """Left-to-right fold of the univariate transfer-matrix product.

    ``rows_list`` holds one 3x3 nested list per component.  Returns the
    coefficient list of length n+1.  Kept free of array libraries so
    each step costs exactly O(current length) scalar multiply-adds.
    """
    v0, v1, v2 = [1.0], [0.0], [0.0]
    for rows in rows_list:
        (p00, p01, p02), (p10, p11, p12), (p20, p21, p22) = rows
        s0 = [p00 * a + p10 * b + p20 * c for a, b, c in zip(v0, v1, v2)]
        s1 = [p01 * a + p11 * b + p21 * c for a, b, c in zip(v0, v1, v2)]
        s2 = [p02 * a + p12 * b + p22 * c for a, b, c in zip(v0, v1, v2)]
        if level == 1:
            # Columns 1 and 2 carry the t marker: shift by one index.
            v0 = s0 + [0.0]
            v1 = [0.0] + s1
            v2 = [0.0] + s2
        else:
            # Only column 2 carries t.
            v0 = s0 + [0.0]
            v1 = s1 + [0.0]
            v2 = [0.0] + s2
    return [a + b + c for a, b, c in zip(v0, v1, v2)]


def _product_bivariate(mats: Sequence[np.ndarray]) -> np.ndarray:
    """Left-to-right fold of the bivariate transfer-matrix product.

    ``mats`` holds one (3, 3) array per component.  Returns the
    (n+1) x (n+1) coefficient table indexed [x, y].  Entries above the
    diagonal are never written, so they stay exactly zero.
    """
    n = len(mats)
    size = n + 1
    dtype = np.result_type(np.asarray(mats[0]).dtype, np.float64)
    v = np.zeros((3, size, size), dtype=dtype)
    v[0, 0, 0] = 1.0
    for p in mats:
        s = np.tensordot(p, v, axes=(0, 0))
        new = np.zeros_like(v)
        new[0] = s[0]
        new[1, 1:, :] = s[1, :-1, :]          # column 1: t1 marker
        new[2, 1:, 1:] = s[2, :-1, :-1]       # column 2: t1*t2 marker
        v = new
    return v.sum(axis=0)


def level_count_pgf(chain: ComponentChain, level: int) -> UnivariatePoly:
    """Distribution of the level-j component count as a polynomial.

    The result has length n+1; coefficient x is the probability that
    exactly x of the n components are in state ``level`` or above.
    """
    _check_level(level)
    rows_list = [m.rows.tolist() for m in chain]
    return UnivariatePoly(_product_univariate(rows_list, level))


def joint_count_pgf(chain: ComponentChain) -> BivariatePoly:
    """Joint distribution of the two level counts as a bivariate polynomial."""
    return BivariatePoly(_product_bivariate([m.rows for m in chain]))


def tail_probability(poly: UnivariatePoly, threshold: int) -> float:
    """Probability that the count is at least ``threshold``.

    Sums coefficients in ascending index order so the result is
    bit-reproducible across runs and platforms.
    """
    if not 0 <= threshold <= len(poly.coeffs):
        raise ThresholdOutOfRange(
            f"threshold {threshold} outside 0..{len(poly.coeffs)}"
        )
    total = 0.0
    for c in poly.coeffs[threshold:]:
        total += float(c)
    return total


def increasing_distribution(chain: ComponentChain, spec: SystemSpec) -> StateDistribution:
    """State distribution of a system with k1 <= k2.

    Uses the two univariate count polynomials: the system is at level j
    or above iff the level-j count reaches k_j, so R_j is a coefficient
    tail.  Raises WrongStructure for k1 > k2, where level-1 membership
    is no longer a plain tail event.
    """
    if spec.kind is SystemKind.DECREASING:
        raise WrongStructure(
            f"k1={spec.k1} > k2={spec.k2}: use general_distribution for decreasing systems"
        )
    if spec.n != chain.n:
        raise ModelError(f"spec is for n={spec.n} but chain has n={chain.n}")
    tail1 = tail_probability(level_count_pgf(chain, 1), spec.k1)
    tail2 = tail_probability(level_count_pgf(chain, 2), spec.k2)
    return StateDistribution.from_tails(tail1, tail2)


def general_distribution(chain: ComponentChain, spec: SystemSpec) -> StateDistribution:
    """State distribution for any thresholds, from the joint polynomial.

    The system is in state 2 when the level-2 count reaches k2, else in
    state 1 when the level-1 count reaches k1.  Because the level-2
    count never exceeds the level-1 count, this coincides with the
    increasing-case definition whenever k1 <= k2.
    """
    if spec.n != chain.n:
        raise ModelError(f"spec is for n={spec.n} but chain has n={chain.n}")
    table = joint_count_pgf(chain).coeffs
    state2 = float(table[:, spec.k2:].sum())
    state1 = float(table[spec.k1:, : spec.k2].sum())
    return StateDistribution.from_exact(state1, state2)
