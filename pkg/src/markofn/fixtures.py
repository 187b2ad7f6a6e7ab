"""Bundled worked examples with published reference values.

Two small three-component systems and one 13-row reference table are
embedded here so the command-line ``table`` command can recompute them
and show the differences offline.

All three systems enter service from the perfect state.  Row 0 of the
first matrix is the only row any backend consults for component 1 (the
chain convention places the component-1 marginal there), so that row
holds the perfect-state conditional row of the underlying component;
rows 1 and 2 of the first matrix are inert.

The reference values are stored exactly as published.  Two scalars of
the second example (``r0`` and ``r2``) are known to carry a 5e-5
rounding slip: the joint expansion published alongside them sums to
0.45800 and 0.28400, while the printed scalars are 0.45795 and 0.28405.
The recomputation therefore differs from those two scalars by up to
5e-5 and from everything else by well under 1e-9.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Tuple

from .model import ComponentChain, SystemSpec

# Three-component worked example (thresholds 2/3 increasing, 3/2 decreasing).
EXAMPLE_MATRIX_1 = ((0.10, 0.30, 0.60), (0.20, 0.50, 0.30), (0.10, 0.30, 0.60))
EXAMPLE_MATRIX_2 = ((0.20, 0.45, 0.35), (0.25, 0.50, 0.25), (0.10, 0.35, 0.55))
EXAMPLE_MATRIX_3 = ((0.25, 0.50, 0.25), (0.20, 0.55, 0.25), (0.15, 0.30, 0.55))

# Published level-count coefficient lists (index = count value).
EXAMPLE_LEVEL1_COEFFS = (0.0050, 0.06300, 0.29975, 0.63225)
EXAMPLE_LEVEL2_COEFFS = (0.21750, 0.32450, 0.27650, 0.18150)

# Published joint expansion: {(level-1 count, level-2 count): probability}.
EXAMPLE_JOINT_COEFFS: Mapping[Tuple[int, int], float] = {
    (0, 0): 0.0050,
    (1, 0): 0.03775,
    (1, 1): 0.02525,
    (2, 0): 0.09225,
    (2, 1): 0.12375,
    (2, 2): 0.08375,
    (3, 0): 0.0825,
    (3, 1): 0.17550,
    (3, 2): 0.19275,
    (3, 3): 0.18150,
}

# Segmented 20-component reference system, piecewise-constant matrices.
TABLE1_ENTRY = ((0.10, 0.30, 0.60), (0.15, 0.50, 0.35), (0.10, 0.30, 0.60))
TABLE1_SEGMENT_1 = ((0.25, 0.45, 0.30), (0.15, 0.50, 0.35), (0.10, 0.30, 0.60))
TABLE1_SEGMENT_2 = ((0.15, 0.55, 0.30), (0.15, 0.50, 0.35), (0.10, 0.30, 0.60))
TABLE1_SEGMENT_3 = ((0.20, 0.55, 0.25), (0.10, 0.45, 0.45), (0.05, 0.30, 0.65))


def example_chain(n: int = 3) -> ComponentChain:
    """The three-component worked-example chain."""
    mats = (EXAMPLE_MATRIX_1, EXAMPLE_MATRIX_2, EXAMPLE_MATRIX_3)
    if not 1 <= n <= 3:
        raise ValueError("the worked example has exactly 3 components")
    return ComponentChain(mats[:n])


def table1_chain(n: int) -> ComponentChain:
    """First n components of the segmented reference system (n <= 20)."""
    if not 1 <= n <= 20:
        raise ValueError("the segmented reference system has at most 20 components")
    pieces = (
        (1, 1, TABLE1_ENTRY),
        (2, 5, TABLE1_SEGMENT_1),
        (6, 15, TABLE1_SEGMENT_2),
        (16, 20, TABLE1_SEGMENT_3),
    )
    segments = [(a, min(b, n), m) for a, b, m in pieces if a <= n]
    return ComponentChain.from_segments(segments, n)


@dataclass(frozen=True)
class FixtureRow:
    """One published system with its five reference probabilities."""

    n: int
    k1: int
    k2: int
    published: Mapping[str, float]

    def spec(self) -> SystemSpec:
        return SystemSpec(n=self.n, k1=self.k1, k2=self.k2)


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    rows: Tuple[FixtureRow, ...]
    chain_builder: Callable[[int], ComponentChain]

    def chain(self, n: int) -> ComponentChain:
        return self.chain_builder(n)


def _row(n, k1, k2, r0, r1, r2, R1, R2) -> FixtureRow:
    return FixtureRow(n=n, k1=k1, k2=k2, published={"r0": r0, "r1": r1, "r2": r2, "R1": R1, "R2": R2})


EXAMPLE1 = Fixture(
    name="example1",
    description="3-component system, thresholds k1=2, k2=3 (increasing)",
    rows=(_row(3, 2, 3, 0.06800, 0.75050, 0.18150, 0.93200, 0.18150),),
    chain_builder=example_chain,
)

# R1/R2 here are derived from the published exact-state values; r0 and r2
# carry the known 5e-5 rounding slip described in the module docstring.
EXAMPLE2 = Fixture(
    name="example2",
    description="3-component system, thresholds k1=3, k2=2 (decreasing)",
    rows=(_row(3, 3, 2, 0.28405, 0.25800, 0.45795, 0.71595, 0.45795),),
    chain_builder=example_chain,
)

TABLE1 = Fixture(
    name="table1",
    description="segmented reference system, n in {10, 15, 20}",
    rows=(
        _row(10, 4, 3, 0.0002071763, 0.13342191280, 0.8663709109, 0.9997928237, 0.8663709109),
        _row(10, 5, 3, 0.0013698082, 0.13225928090, 0.8663709109, 0.9986301918, 0.8663709109),
        _row(10, 6, 4, 0.0084395255, 0.26531485150, 0.7262456230, 0.9915604745, 0.7262456230),
        _row(10, 6, 5, 0.0094690450, 0.44387722540, 0.5466537296, 0.9905309550, 0.5466537296),
        _row(15, 5, 4, 0.0000010609, 0.07440229886, 0.9255966402, 0.9999989391, 0.9255966402),
        _row(15, 7, 5, 0.0000831322, 0.15466683570, 0.8452500321, 0.9999168678, 0.8452500321),
        _row(15, 8, 6, 0.0005412759, 0.27127122260, 0.7281875015, 0.9994587241, 0.7281875015),
        _row(15, 8, 7, 0.0005575429, 0.41640144220, 0.5830410149, 0.9994424571, 0.5830410149),
        _row(20, 7, 6, 0.0000000783, 0.06870243220, 0.9312974895, 0.9999999217, 0.9312974895),
        _row(20, 9, 7, 0.0000046993, 0.13104703960, 0.8689482611, 0.9999953007, 0.8689482611),
        _row(20, 10, 9, 0.0000293583, 0.33736341170, 0.6626072300, 0.9999706417, 0.6626072300),
        _row(20, 12, 10, 0.0007354415, 0.46896212730, 0.5303024312, 0.9992645585, 0.5303024312),
        _row(20, 15, 10, 0.0309837102, 0.43871385880, 0.5303024312, 0.9690162900, 0.5303024312),
    ),
    chain_builder=table1_chain,
)

FIXTURES: Dict[str, Fixture] = {f.name: f for f in (EXAMPLE1, EXAMPLE2, TABLE1)}
