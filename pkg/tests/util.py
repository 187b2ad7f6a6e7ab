"""Shared helpers for the test suite."""

import numpy as np

from markofn import ComponentChain, TransitionMatrix


def random_matrix(gen: np.random.Generator) -> TransitionMatrix:
    rows = gen.random((3, 3))
    rows /= rows.sum(axis=1, keepdims=True)
    return TransitionMatrix(rows)


def random_chain(gen: np.random.Generator, n: int) -> ComponentChain:
    return ComponentChain(random_matrix(gen) for _ in range(n))


# The small worked example used across the suite (enters from the
# perfect state, encoded in row 0 of the first matrix).
EXAMPLE_COMPONENT_1 = ((0.10, 0.30, 0.60), (0.20, 0.50, 0.30), (0.10, 0.30, 0.60))
EXAMPLE_COMPONENT_2 = ((0.20, 0.45, 0.35), (0.25, 0.50, 0.25), (0.10, 0.35, 0.55))
EXAMPLE_COMPONENT_3 = ((0.25, 0.50, 0.25), (0.20, 0.55, 0.25), (0.15, 0.30, 0.55))


def example_chain() -> ComponentChain:
    return ComponentChain([EXAMPLE_COMPONENT_1, EXAMPLE_COMPONENT_2, EXAMPLE_COMPONENT_3])
