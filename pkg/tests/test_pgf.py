import numpy as np
import pytest

from markofn import (
    BivariatePoly,
    ComponentChain,
    ModelError,
    PolyMatrix3,
    SystemSpec,
    ThresholdOutOfRange,
    TransitionMatrix,
    UnivariatePoly,
    WrongStructure,
    general_distribution,
    increasing_distribution,
    joint_count_pgf,
    level_count_pgf,
    tail_probability,
    transfer_matrix_bivariate,
    transfer_matrix_univariate,
)
from markofn.pgf import _product_bivariate, _product_univariate
from util import example_chain, random_chain, random_matrix

# Published expansions of the worked example (see markofn.fixtures).
PSI_LEVEL1 = (0.0050, 0.06300, 0.29975, 0.63225)
PSI_LEVEL2 = (0.21750, 0.32450, 0.27650, 0.18150)
JOINT = {
    (0, 0): 0.0050, (1, 0): 0.03775, (1, 1): 0.02525,
    (2, 0): 0.09225, (2, 1): 0.12375, (2, 2): 0.08375,
    (3, 0): 0.0825, (3, 1): 0.17550, (3, 2): 0.19275, (3, 3): 0.18150,
}


def test_univariate_poly_validation():
    p = UnivariatePoly([0.25, 0.75])
    assert p.degree == 1
    assert p.evaluate(2.0) == pytest.approx(1.75)
    with pytest.raises(ModelError):
        UnivariatePoly([0.5, -1e-6])
    with pytest.raises(ModelError):
        UnivariatePoly([])


def test_bivariate_poly_validation():
    ok = BivariatePoly([[0.5, 0.0], [0.25, 0.25]])
    assert ok.size == 2
    with pytest.raises(ModelError):
        BivariatePoly([[0.5, 0.5], [0.0, 0.0]])  # support above the diagonal
    with pytest.raises(ModelError):
        BivariatePoly(np.zeros((2, 3)))


def test_transfer_matrix_level2_marks_only_perfect_column():
    m = TransitionMatrix(((0.3, 0.4, 0.3), (0.2, 0.5, 0.3), (0.1, 0.3, 0.6)))
    h = transfer_matrix_univariate(m, 2)
    for a, p in zip(range(3), (0.3, 0.3, 0.6)):
        assert h.entries[a][2].coeffs.tolist() == [0.0, p]
    for a in range(3):
        for b in range(2):
            assert h.entries[a][b].coeffs.tolist() == [m.rows[a, b], 0.0]


def test_transfer_matrix_identity_level1():
    h = transfer_matrix_univariate(TransitionMatrix.identity(), 1)
    # diag(1, t, t), zero elsewhere
    assert h.entries[0][0].coeffs.tolist() == [1.0, 0.0]
    assert h.entries[1][1].coeffs.tolist() == [0.0, 1.0]
    assert h.entries[2][2].coeffs.tolist() == [0.0, 1.0]
    assert h.entries[0][1].coeffs.tolist() == [0.0, 0.0]


def test_transfer_matrix_evaluates_back_to_matrix():
    gen = np.random.default_rng(11)
    for _ in range(5):
        m = random_matrix(gen)
        for level in (1, 2):
            h = transfer_matrix_univariate(m, level)
            assert np.allclose(h.evaluate(1.0), m.rows, atol=0)
        hb = transfer_matrix_bivariate(m)
        assert np.allclose(hb.evaluate(1.0, 1.0), m.rows, atol=0)


def test_transfer_matrix_bivariate_row0_markers():
    m = TransitionMatrix(((0.20, 0.45, 0.35), (0.25, 0.50, 0.25), (0.10, 0.35, 0.55)))
    h = transfer_matrix_bivariate(m)
    assert h.entries[0][0].coeffs[0, 0] == 0.20   # constant
    assert h.entries[0][1].coeffs[1, 0] == 0.45   # t1
    assert h.entries[0][2].coeffs[1, 1] == 0.35   # t1*t2
    assert h.entries[0][1].coeffs[0, 0] == 0.0


def test_bivariate_at_t2_one_matches_univariate_level1():
    gen = np.random.default_rng(12)
    m = random_matrix(gen)
    hb = transfer_matrix_bivariate(m)
    hu = transfer_matrix_univariate(m, 1)
    for t in (0.0, 0.25, 1.0, 1.75):
        assert np.allclose(hb.evaluate(t, 1.0), hu.evaluate(t), atol=1e-15)


def test_poly_matrix_rejects_mixed_entries():
    u = UnivariatePoly([1.0, 0.0])
    long = UnivariatePoly([1.0, 0.0, 0.0])
    rows = [[u] * 3, [u] * 3, [u, u, long]]
    with pytest.raises(ModelError):
        PolyMatrix3(tuple(tuple(r) for r in rows))


def test_level_count_pgf_reproduces_worked_example():
    chain = example_chain()
    assert level_count_pgf(chain, 1).coeffs == pytest.approx(PSI_LEVEL1, abs=1e-12)
    assert level_count_pgf(chain, 2).coeffs == pytest.approx(PSI_LEVEL2, abs=1e-12)


def test_absorbed_chain_has_all_mass_at_zero():
    chain = ComponentChain.homogeneous(TransitionMatrix.identity(), 4)
    for level in (1, 2):
        coeffs = level_count_pgf(chain, level).coeffs
        assert coeffs[0] == 1.0
        assert np.all(coeffs[1:] == 0.0)


def test_joint_count_pgf_reproduces_worked_example():
    table = joint_count_pgf(example_chain()).coeffs
    for (x, y), value in JOINT.items():
        assert table[x, y] == pytest.approx(value, abs=1e-12)
    assert float(table.sum()) == pytest.approx(1.0, abs=1e-12)


def test_joint_marginals_match_univariate_paths():
    gen = np.random.default_rng(13)
    for _ in range(25):
        n = int(gen.integers(1, 9))
        chain = random_chain(gen, n)
        joint = joint_count_pgf(chain)
        np.testing.assert_allclose(
            joint.marginal(1).coeffs, level_count_pgf(chain, 1).coeffs, atol=1e-12
        )
        np.testing.assert_allclose(
            joint.marginal(2).coeffs, level_count_pgf(chain, 2).coeffs, atol=1e-12
        )


def test_joint_support_triangle_is_exactly_zero():
    gen = np.random.default_rng(14)
    for _ in range(10):
        chain = random_chain(gen, int(gen.integers(1, 9)))
        table = joint_count_pgf(chain).coeffs
        assert np.all(np.triu(table, k=1) == 0.0)


def test_tail_probability_worked_example():
    chain = example_chain()
    assert tail_probability(level_count_pgf(chain, 1), 2) == pytest.approx(0.93200, abs=1e-12)
    assert tail_probability(level_count_pgf(chain, 2), 3) == pytest.approx(0.18150, abs=1e-12)


def test_tail_probability_bounds_and_monotonicity():
    gen = np.random.default_rng(15)
    chain = random_chain(gen, 7)
    poly = level_count_pgf(chain, 1)
    assert tail_probability(poly, 0) == pytest.approx(1.0, abs=1e-12)
    assert tail_probability(poly, len(poly.coeffs)) == 0.0
    tails = [tail_probability(poly, k) for k in range(len(poly.coeffs) + 1)]
    assert all(a >= b - 1e-15 for a, b in zip(tails, tails[1:]))
    with pytest.raises(ThresholdOutOfRange):
        tail_probability(poly, -1)
    with pytest.raises(ThresholdOutOfRange):
        tail_probability(poly, len(poly.coeffs) + 1)


def test_tail_dominance_between_levels():
    gen = np.random.default_rng(16)
    for _ in range(25):
        chain = random_chain(gen, int(gen.integers(1, 9)))
        p1 = level_count_pgf(chain, 1)
        p2 = level_count_pgf(chain, 2)
        for k in range(chain.n + 1):
            assert tail_probability(p1, k) >= tail_probability(p2, k) - 1e-12


def test_increasing_distribution_worked_example():
    dist = increasing_distribution(example_chain(), SystemSpec(3, 2, 3))
    assert dist.r0 == pytest.approx(0.06800, abs=1e-12)
    assert dist.r1 == pytest.approx(0.75050, abs=1e-12)
    assert dist.r2 == pytest.approx(0.18150, abs=1e-12)


def test_increasing_distribution_single_component():
    row0 = (0.2, 0.3, 0.5)
    chain = ComponentChain([(row0, (0.1, 0.6, 0.3), (0.4, 0.4, 0.2))])
    dist = increasing_distribution(chain, SystemSpec(1, 1, 1))
    assert dist.R1 == pytest.approx(0.3 + 0.5, abs=1e-15)
    assert dist.R2 == pytest.approx(0.5, abs=1e-15)


def test_increasing_distribution_rejects_decreasing_spec():
    with pytest.raises(WrongStructure):
        increasing_distribution(example_chain(), SystemSpec(3, 3, 2))


def test_general_distribution_worked_example():
    dist = general_distribution(example_chain(), SystemSpec(3, 3, 2))
    assert dist.r1 == pytest.approx(0.25800, abs=1e-12)
    assert dist.r2 == pytest.approx(0.45800, abs=1e-12)
    assert dist.r0 == pytest.approx(0.28400, abs=1e-12)


def test_general_matches_increasing_when_thresholds_ordered():
    gen = np.random.default_rng(17)
    for _ in range(20):
        n = int(gen.integers(1, 9))
        chain = random_chain(gen, n)
        for k1 in range(1, n + 1):
            for k2 in range(k1, n + 1):
                spec = SystemSpec(n, k1, k2)
                a = increasing_distribution(chain, spec)
                b = general_distribution(chain, spec)
                for x, y in zip(a.as_tuple(), b.as_tuple()):
                    assert x == pytest.approx(y, abs=1e-12)


def test_normalization_on_random_chains():
    gen = np.random.default_rng(18)
    for _ in range(50):
        chain = random_chain(gen, int(gen.integers(1, 9)))
        assert level_count_pgf(chain, 1).total() == pytest.approx(1.0, abs=1e-9)
        assert level_count_pgf(chain, 2).total() == pytest.approx(1.0, abs=1e-9)
        assert joint_count_pgf(chain).total() == pytest.approx(1.0, abs=1e-9)


class CountingFloat:
    """Float stand-in that tallies multiplications through the folds."""

    mults = 0
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = float(getattr(v, "v", v))

    def _value(self, other):
        return float(getattr(other, "v", other))

    def __mul__(self, other):
        CountingFloat.mults += 1
        return CountingFloat(self.v * self._value(other))

    __rmul__ = __mul__

    def __add__(self, other):
        return CountingFloat(self.v + self._value(other))

    __radd__ = __add__


def _counted_univariate(n: int) -> int:
    rows = [[[CountingFloat(1 / 3)] * 3 for _ in range(3)] for _ in range(n)]
    CountingFloat.mults = 0
    _product_univariate(rows, 1)
    return CountingFloat.mults


def _counted_bivariate(n: int) -> int:
    mat = np.empty((3, 3), dtype=object)
    mat[...] = [[CountingFloat(1 / 3)] * 3 for _ in range(3)]
    CountingFloat.mults = 0
    _product_bivariate([mat] * n)
    return CountingFloat.mults


def test_univariate_product_cost_is_quadratic():
    small, big = _counted_univariate(8), _counted_univariate(16)
    assert small > 0
    ratio = big / small
    assert 3.4 < ratio < 4.6, f"doubling n scaled multiplications by {ratio}"
    assert small <= 6 * 8 * 9  # O(n^2) with a small constant


def test_bivariate_product_cost_is_cubic():
    small, big = _counted_bivariate(6), _counted_bivariate(12)
    assert small > 0
    ratio = big / small
    assert 6.0 < ratio < 10.0, f"doubling n scaled multiplications by {ratio}"
