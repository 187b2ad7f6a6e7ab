import numpy as np
import pytest

from markofn import (
    ComponentChain,
    SystemSpec,
    ThresholdOutOfRange,
    TooLarge,
    TransitionMatrix,
    brute_force_joint,
    general_distribution,
    level_count_pgf,
    subset_state_probability,
    subset_tail_probability,
    tail_probability,
    transfer_matrix_bivariate,
)
from util import example_chain, random_chain


def test_subset_tail_worked_example():
    chain = example_chain()
    assert subset_tail_probability(chain, 1, 2) == pytest.approx(0.93200, abs=1e-12)
    assert subset_tail_probability(chain, 2, 3) == pytest.approx(0.18150, abs=1e-12)


def test_subset_state_worked_example():
    chain = example_chain()
    spec = SystemSpec(3, 3, 2)
    assert subset_state_probability(chain, spec, 1) == pytest.approx(0.25800, abs=1e-12)
    assert subset_state_probability(chain, spec, 2) == pytest.approx(0.45800, abs=1e-12)
    # Same chain with k2 = 1: direct sums of the published joint expansion.
    spec = SystemSpec(3, 3, 1)
    assert subset_state_probability(chain, spec, 1) == pytest.approx(0.0825, abs=1e-12)
    assert subset_state_probability(chain, spec, 2) == pytest.approx(0.78250, abs=1e-12)


def test_subset_tail_at_threshold_one_vs_oracle():
    # R(k=1) must equal 1 - Pr{count = 0}, taken from trajectory enumeration.
    gen = np.random.default_rng(21)
    for _ in range(5):
        n = int(gen.integers(1, 7))
        chain = random_chain(gen, n)
        table = brute_force_joint(chain).table
        none_level1 = float(table[0, 0])
        none_level2 = float(table[:, 0].sum())
        assert subset_tail_probability(chain, 1, 1) == pytest.approx(1 - none_level1, abs=1e-12)
        assert subset_tail_probability(chain, 2, 1) == pytest.approx(1 - none_level2, abs=1e-12)


def test_subset_state_thresholds_one_vs_oracle():
    gen = np.random.default_rng(22)
    for _ in range(5):
        n = int(gen.integers(1, 7))
        chain = random_chain(gen, n)
        spec = SystemSpec(n, 1, 1)
        r1 = subset_state_probability(chain, spec, 1)
        r2 = subset_state_probability(chain, spec, 2)
        none_level1 = float(brute_force_joint(chain).table[0, 0])
        assert r1 + r2 == pytest.approx(1 - none_level1, abs=1e-12)


def test_subset_matches_pgf_backends():
    gen = np.random.default_rng(23)
    for _ in range(10):
        n = int(gen.integers(1, 8))
        chain = random_chain(gen, n)
        p1 = level_count_pgf(chain, 1)
        p2 = level_count_pgf(chain, 2)
        for k in range(1, n + 1):
            assert subset_tail_probability(chain, 1, k) == pytest.approx(
                tail_probability(p1, k), abs=1e-10
            )
            assert subset_tail_probability(chain, 2, k) == pytest.approx(
                tail_probability(p2, k), abs=1e-10
            )
        for k1 in range(1, n + 1):
            for k2 in range(1, n + 1):
                spec = SystemSpec(n, k1, k2)
                dist = general_distribution(chain, spec)
                assert subset_state_probability(chain, spec, 1) == pytest.approx(
                    dist.r1, abs=1e-10
                )
                assert subset_state_probability(chain, spec, 2) == pytest.approx(
                    dist.r2, abs=1e-10
                )


def _unpruned_state_probability(chain, spec, state):
    """Reference enumeration over all 4^n subset pairs, zero factors included."""
    n = chain.n
    factors = []
    for m in chain:
        h = transfer_matrix_bivariate(m)
        at00 = h.evaluate(0.0, 0.0)
        at10 = h.evaluate(1.0, 0.0)
        at11 = h.evaluate(1.0, 1.0)
        factors.append([at00, at10 - at00, np.zeros((3, 3)), at11 - at10])
    total = 0.0
    for pair in range(4**n):
        digits = [(pair // 4**u) % 4 for u in range(n)]
        size1 = sum(d in (1, 3) for d in digits)
        size2 = sum(d in (2, 3) for d in digits)
        if state == 2 and not size2 >= spec.k2:
            continue
        if state == 1 and not (size1 >= spec.k1 and size2 < spec.k2):
            continue
        vec = np.array([1.0, 0.0, 0.0])
        for u, d in enumerate(digits):
            vec = vec @ factors[u][d]
        total += float(vec.sum())
    return total


def test_pruning_soundness():
    # Skipping pairs with S2 not inside S1 drops only exactly-zero terms.
    gen = np.random.default_rng(24)
    for _ in range(4):
        n = int(gen.integers(1, 6))
        chain = random_chain(gen, n)
        k1 = int(gen.integers(1, n + 1))
        k2 = int(gen.integers(1, n + 1))
        spec = SystemSpec(n, k1, k2)
        for state in (1, 2):
            pruned = subset_state_probability(chain, spec, state)
            full = _unpruned_state_probability(chain, spec, state)
            assert pruned == pytest.approx(full, abs=1e-13)


def test_size_guards():
    big = ComponentChain.homogeneous(TransitionMatrix.identity(), 21)
    with pytest.raises(TooLarge):
        subset_tail_probability(big, 1, 1)
    mid = ComponentChain.homogeneous(TransitionMatrix.identity(), 13)
    with pytest.raises(TooLarge):
        subset_state_probability(mid, SystemSpec(13, 1, 1), 1)


def test_threshold_guard():
    chain = example_chain()
    with pytest.raises(ThresholdOutOfRange):
        subset_tail_probability(chain, 1, 0)
    with pytest.raises(ThresholdOutOfRange):
        subset_tail_probability(chain, 1, 4)
