"""Domain model for three-state k-out-of-n:G systems.

Components take states 0 (complete failure), 1 (partial working) and
2 (perfect functioning) and form a Markov chain along the component
index: the state of component u depends only on the state of component
u-1, through a per-component 3x3 conditional probability matrix.  The
chain enters at state 0, so the marginal law of component 1 is row 0 of
the first matrix; there is no separate initial-distribution field.

All types here are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Tuple

import numpy as np

ROW_SUM_TOL = 1e-9
CLAMP_TOL = 1e-12


class ModelError(ValueError):
    """Base class for all validation failures raised by this package."""


class NegativeEntry(ModelError):
    """A conditional probability is below 0."""


class EntryAboveOne(ModelError):
    """A conditional probability exceeds 1."""


class RowSumViolation(ModelError):
    """A matrix row does not sum to 1 within tolerance."""

    def __init__(self, message: str, row: int | None = None, total: float | None = None):
        super().__init__(message)
        self.row = row
        self.total = total


class ZeroLength(ModelError):
    """A chain must contain at least one component."""


class GapInCoverage(ModelError):
    """Segments leave part of the component range uncovered."""


class OverlappingSegments(ModelError):
    """Two segments claim the same component index."""


class IndexOutOfRange(ModelError):
    """A segment bound falls outside 1..n or is inverted."""


class ThresholdOutOfRange(ModelError):
    """A threshold k lies outside its legal range."""


class WrongStructure(ModelError):
    """The requested computation does not apply to this system kind."""


class TooLarge(ModelError):
    """The chain exceeds the size guard of an exponential-cost backend."""


class ZeroSamples(ModelError):
    """Monte Carlo estimation needs at least one sample."""


class ComponentState(IntEnum):
    """The three component states, ordered from worst to best."""

    FAILED = 0
    PARTIAL = 1
    PERFECT = 2


class TransitionMatrix:
    """One component's 3x3 row-stochastic conditional probabilities.

    Entry [a][b] is the probability that the component is in state b
    given that its predecessor is in state a.  Rows must sum to 1
    within ``ROW_SUM_TOL``; stored values are kept as given, never
    renormalized.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        arr = np.asarray(rows, dtype=np.float64)
        if arr.shape != (3, 3):
            raise ModelError(f"expected a 3x3 matrix, got shape {arr.shape}")
        for i in range(3):
            for j in range(3):
                p = arr[i, j]
                if not np.isfinite(p):
                    raise ModelError(f"row {i}, column {j}: entry {p!r} is not finite")
                if p < 0.0:
                    raise NegativeEntry(f"row {i}, column {j}: entry {p!r} is negative")
                if p > 1.0:
                    raise EntryAboveOne(f"row {i}, column {j}: entry {p!r} exceeds 1")
        for i in range(3):
            total = float(arr[i, 0] + arr[i, 1] + arr[i, 2])
            if abs(total - 1.0) > ROW_SUM_TOL:
                raise RowSumViolation(
                    f"row {i} sums to {total!r}, expected 1 within {ROW_SUM_TOL:g}",
                    row=i,
                    total=total,
                )
        arr.flags.writeable = False
        object.__setattr__(self, "rows", arr)

    def __setattr__(self, name, value):
        raise AttributeError("TransitionMatrix is immutable")

    def __eq__(self, other):
        if isinstance(other, TransitionMatrix):
            return bool(np.array_equal(self.rows, other.rows))
        return NotImplemented

    def __hash__(self):
        return hash(self.rows.tobytes())

    def __repr__(self):
        return f"TransitionMatrix({self.rows.tolist()!r})"

    @classmethod
    def identity(cls) -> "TransitionMatrix":
        """Point-mass matrix: every state maps to itself with probability 1."""
        return cls(np.eye(3))


def _as_matrix(value) -> TransitionMatrix:
    if isinstance(value, TransitionMatrix):
        return value
    return TransitionMatrix(value)


class ComponentChain:
    """Ordered sequence of n component transition matrices (u = 1..n).

    The chain enters at state 0: row 0 of ``matrices[0]`` is the
    marginal distribution of component 1, and rows 1..2 of the first
    matrix are never consulted by any backend.
    """

    __slots__ = ("matrices",)

    def __init__(self, matrices: Iterable):
        mats = tuple(_as_matrix(m) for m in matrices)
        if not mats:
            raise ZeroLength("a chain needs at least one component")
        object.__setattr__(self, "matrices", mats)

    def __setattr__(self, name, value):
        raise AttributeError("ComponentChain is immutable")

    @property
    def n(self) -> int:
        return len(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self) -> Iterator[TransitionMatrix]:
        return iter(self.matrices)

    def __getitem__(self, index) -> TransitionMatrix:
        return self.matrices[index]

    def __eq__(self, other):
        if isinstance(other, ComponentChain):
            return self.matrices == other.matrices
        return NotImplemented

    def __repr__(self):
        return f"ComponentChain(n={self.n})"

    def stacked(self) -> np.ndarray:
        """All matrices as one (n, 3, 3) float array (a fresh copy)."""
        return np.stack([m.rows for m in self.matrices])

    @classmethod
    def homogeneous(cls, matrix, n: int) -> "ComponentChain":
        """Chain of n identical components."""
        if n < 1:
            raise ZeroLength(f"chain length must be at least 1, got {n}")
        return cls([_as_matrix(matrix)] * n)

    @classmethod
    def from_segments(cls, segments: Iterable[Tuple[int, int, object]], n: int) -> "ComponentChain":
        """Chain built from piecewise-constant segments.

        Each segment is a (first, last, matrix) triple with 1-based
        inclusive bounds.  Segments must cover 1..n exactly once.
        """
        if n < 1:
            raise ZeroLength(f"chain length must be at least 1, got {n}")
        parsed = []
        for first, last, matrix in segments:
            if first < 1 or last > n or first > last:
                raise IndexOutOfRange(
                    f"segment ({first}, {last}) does not fit inside 1..{n}"
                )
            parsed.append((int(first), int(last), _as_matrix(matrix)))
        parsed.sort(key=lambda seg: seg[0])
        mats: list[TransitionMatrix] = []
        covered = 0
        for first, last, matrix in parsed:
            if first <= covered:
                raise OverlappingSegments(
                    f"segment ({first}, {last}) overlaps components up to {covered}"
                )
            if first > covered + 1:
                raise GapInCoverage(
                    f"components {covered + 1}..{first - 1} are not covered by any segment"
                )
            mats.extend([matrix] * (last - first + 1))
            covered = last
        if covered < n:
            raise GapInCoverage(f"components {covered + 1}..{n} are not covered by any segment")
        return cls(mats)


class SystemKind(Enum):
    """Threshold ordering of a system: k1 < k2, k1 = k2, or k1 > k2."""

    INCREASING = "increasing"
    CONSTANT = "constant"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class SystemSpec:
    """System size n plus the two thresholds.

    The system is in state 2 when at least k2 components are in state 2,
    and in state 1 or above when at least k1 components are in state 1
    or above.  Thresholds outside 1..n are rejected: k = 0 would make
    the condition vacuous and k > n unsatisfiable.
    """

    n: int
    k1: int
    k2: int

    def __post_init__(self):
        if self.n < 1:
            raise ZeroLength(f"system size must be at least 1, got {self.n}")
        for name, k in (("k1", self.k1), ("k2", self.k2)):
            if not 1 <= k <= self.n:
                raise ThresholdOutOfRange(
                    f"{name}={k} outside the legal range 1..{self.n}"
                )

    @property
    def kind(self) -> SystemKind:
        if self.k1 < self.k2:
            return SystemKind.INCREASING
        if self.k1 == self.k2:
            return SystemKind.CONSTANT
        return SystemKind.DECREASING


def _clamped(name: str, value: float) -> float:
    # Tiny negatives are float cancellation noise, anything worse is a bug.
    if -CLAMP_TOL <= value < 0.0:
        return 0.0
    if value < -CLAMP_TOL or value > 1.0 + CLAMP_TOL:
        raise ModelError(f"{name}={value!r} outside [0, 1] beyond tolerance")
    return value


@dataclass(frozen=True)
class StateDistribution:
    """Exact-state probabilities r0, r1, r2 with cumulative R1, R2.

    R2 equals r2 by definition and R1 = r1 + r2; both identities are
    validated at construction together with r0 + r1 + r2 = 1.
    """

    r0: float
    r1: float
    r2: float
    R1: float
    R2: float

    def __post_init__(self):
        for name in ("r0", "r1", "r2", "R1", "R2"):
            object.__setattr__(self, name, _clamped(name, float(getattr(self, name))))
        total = self.r0 + self.r1 + self.r2
        if abs(total - 1.0) > ROW_SUM_TOL:
            raise ModelError(f"state probabilities sum to {total!r}, expected 1")
        if self.R2 != self.r2:
            raise ModelError(f"R2={self.R2!r} must equal r2={self.r2!r} exactly")
        if abs(self.R1 - (self.r1 + self.r2)) > CLAMP_TOL:
            raise ModelError(f"R1={self.R1!r} inconsistent with r1+r2={self.r1 + self.r2!r}")

    @classmethod
    def from_tails(cls, tail1: float, tail2: float) -> "StateDistribution":
        """Distribution from the two cumulative probabilities R1, R2."""
        return cls(r0=1.0 - tail1, r1=tail1 - tail2, r2=tail2, R1=tail1, R2=tail2)

    @classmethod
    def from_exact(cls, state1: float, state2: float) -> "StateDistribution":
        """Distribution from the exact-state probabilities r1, r2."""
        return cls(
            r0=1.0 - state1 - state2,
            r1=state1,
            r2=state2,
            R1=state1 + state2,
            R2=state2,
        )

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.r0, self.r1, self.r2, self.R1, self.R2)
