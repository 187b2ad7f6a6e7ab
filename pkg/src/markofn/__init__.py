"""Exact state distributions of three-state k-out-of-n:G systems
whose components form a (possibly non-homogeneous) Markov chain.

The fast path is a transfer-matrix generating-function product
(``level_count_pgf``, ``joint_count_pgf``); exponential-cost subset
formulas, exhaustive enumeration and seeded Monte Carlo are provided
as independent cross-checks.
"""

from .model import (
    CLAMP_TOL,
    ComponentChain,
    ComponentState,
    EntryAboveOne,
    GapInCoverage,
    IndexOutOfRange,
    ModelError,
    NegativeEntry,
    OverlappingSegments,
    ROW_SUM_TOL,
    RowSumViolation,
    StateDistribution,
    SystemKind,
    SystemSpec,
    ThresholdOutOfRange,
    TooLarge,
    TransitionMatrix,
    WrongStructure,
    ZeroLength,
    ZeroSamples,
)
from .oracle import JointPmf, McEstimate, brute_force_joint, monte_carlo
from .pgf import (
    BivariatePoly,
    PolyMatrix3,
    UnivariatePoly,
    general_distribution,
    increasing_distribution,
    joint_count_pgf,
    level_count_pgf,
    tail_probability,
    transfer_matrix_bivariate,
    transfer_matrix_univariate,
)
from .subset import subset_state_probability, subset_tail_probability

__version__ = "0.1.0"

__all__ = [
    "BivariatePoly",
    "CLAMP_TOL",
    "ComponentChain",
    "ComponentState",
    "EntryAboveOne",
    "GapInCoverage",
    "IndexOutOfRange",
    "JointPmf",
    "McEstimate",
    "ModelError",
    "NegativeEntry",
    "OverlappingSegments",
    "PolyMatrix3",
    "ROW_SUM_TOL",
    "RowSumViolation",
    "StateDistribution",
    "SystemKind",
    "SystemSpec",
    "ThresholdOutOfRange",
    "TooLarge",
    "TransitionMatrix",
    "UnivariatePoly",
    "WrongStructure",
    "ZeroLength",
    "ZeroSamples",
    "brute_force_joint",
    "general_distribution",
    "increasing_distribution",
    "joint_count_pgf",
    "level_count_pgf",
    "monte_carlo",
    "subset_state_probability",
    "subset_tail_probability",
    "tail_probability",
    "transfer_matrix_bivariate",
    "transfer_matrix_univariate",
]
