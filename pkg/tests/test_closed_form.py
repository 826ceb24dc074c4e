import numpy as np
import pytest
from src.constants import JIndex
from src.errors import MemoryCapError
from src.graph import Graph, adjacency, transition
from src.matrices import Base, HyperParams, base_matrix, deepwalk_q, joint_j, power_sum, q_from_j_identity


def naive_power_sum(p: np.ndarray, T: int) -> np.ndarray:
    total = np.zeros_like(p)
    power = np.eye(len(p))
    for _ in range(T):
        power = power @ p
        total += power
    return total


class TestHyperParams:
    def test_rejects_bad_values(self):
        """T and rank must be positive integers, b positive."""
        with pytest.raises(ValueError):
            HyperParams(T=0)
        with pytest.raises(ValueError):
            HyperParams(b=0.0)
        with pytest.raises(ValueError):
            HyperParams(rank=0)

    def test_rank_above_n(self):
        """validate_for refuses rank > n."""
        with pytest.raises(ValueError):
            HyperParams(rank=5).validate_for(3)


class TestPowerSum:
    def test_k3_t2(self, k3):
        """K3, T=2: S = P + P^2."""
        p = transition(k3).toarray()
        np.testing.assert_allclose(power_sum(transition(k3), 2), p + p @ p, atol=1e-15)

    def test_matches_naive_on_battery(self, graph_battery):
        """Iterated sparse products agree with dense repeated multiplication."""
        for g in graph_battery:
            if g.n > 50:
                continue
            p = transition(g)
            for T in (1, 3, 10):
                np.testing.assert_allclose(power_sum(p, T), naive_power_sum(p.toarray(), T), atol=1e-10)

    def test_rejects_non_square(self):
        """Non-square input is a ValueError."""
        import scipy.sparse as sp

        with pytest.raises(ValueError):
            power_sum(sp.csr_matrix(np.ones((2, 3))), 1)

    def test_mem_cap(self, karate):
        """n above the cap raises before allocating."""
        with pytest.raises(MemoryCapError, match='GB'):
            power_sum(transition(karate), 2, mem_cap=10)


class TestDeepwalkQ:
    def test_k3_t1(self, k3):
        """K3, T=1, b=1 gives Q = 1.5 A."""
        q = deepwalk_q(k3, HyperParams(T=1, b=1.0, rank=1))
        np.testing.assert_allclose(q, 1.5 * adjacency(k3).toarray(), atol=1e-15)

    def test_k3_t2(self, k3):
        """K3, T=2, b=1 gives 0.75 on the diagonal and 1.125 off it."""
        q = deepwalk_q(k3, HyperParams(T=2, b=1.0, rank=1))
        expected = np.full((3, 3), 1.125)
        np.fill_diagonal(expected, 0.75)
        np.testing.assert_allclose(q, expected, atol=1e-14)

    def test_b_scaling(self, karate):
        """Doubling b halves every entry."""
        q1 = deepwalk_q(karate, HyperParams(T=5, b=1.0, rank=1))
        q2 = deepwalk_q(karate, HyperParams(T=5, b=2.0, rank=1))
        np.testing.assert_allclose(q2, q1 / 2, rtol=1e-15)

    def test_symmetric(self, karate):
        """Q is symmetric for undirected graphs."""
        q = deepwalk_q(karate, HyperParams(T=10, b=10.0, rank=1))
        np.testing.assert_allclose(q, q.T, atol=1e-12)

    def test_zero_degree_column(self):
        """Isolated nodes have zero rows and columns."""
        g = Graph.from_edges(3, [(0, 1)])
        q = deepwalk_q(g, HyperParams(T=2, b=1.0, rank=1))
        assert np.all(q[:, 2] == 0) and np.all(q[2] == 0)


class TestJointJ:
    def test_k3_t2(self, k3):
        """K3, T=2: diagonal 1/12, off-diagonal 1/8, total 1."""
        j = joint_j(k3, HyperParams(T=2, b=1.0, rank=1))
        expected = np.full((3, 3), 1 / 8)
        np.fill_diagonal(expected, 1 / 12)
        np.testing.assert_allclose(j, expected, atol=1e-15)
        assert j.sum() == pytest.approx(1.0, abs=1e-15)

    def test_t1_is_scaled_adjacency(self, karate):
        """T=1 gives A / vol."""
        j = joint_j(karate, HyperParams(T=1, b=1.0, rank=1))
        np.testing.assert_allclose(j, adjacency(karate).toarray() / karate.volume)

    def test_distribution_suite(self, graph_battery):
        """Canonical J is a symmetric distribution with marginals d_w / vol."""
        for g in graph_battery:
            for T in (1, 2, 5, 10):
                j = joint_j(g, HyperParams(T=T, b=1.0, rank=1))
                assert j.min() >= 0
                assert abs(j.sum() - 1.0) <= 1e-10
                assert np.abs(j - j.T).max() <= 1e-12
                np.testing.assert_allclose(j.sum(axis=1), g.degrees / g.volume, atol=1e-10)

    def test_literal_range_t1_is_zero(self, k3):
        """The literal index range is empty at T=1."""
        j = joint_j(k3, HyperParams(T=1, b=1.0, rank=1), JIndex.PAPER_LITERAL)
        assert not j.any()

    def test_literal_range_misses_mass(self, karate):
        """The literal range drops the k=0 term, so it sums to (T-1)/T."""
        j = joint_j(karate, HyperParams(T=4, b=1.0, rank=1), JIndex.PAPER_LITERAL)
        assert j.sum() == pytest.approx(3 / 4, abs=1e-12)

    def test_unknown_index(self, k3):
        """Unknown index names are rejected."""
        with pytest.raises(ValueError):
            joint_j(k3, HyperParams(T=2), 'sideways')


class TestQFromJIdentity:
    def test_identity_suite(self, graph_battery):
        """Q == (vol^2 / b) D^-1 J D^-1 on connected graphs."""
        for g in graph_battery:
            for T in (1, 2, 5, 10):
                h = HyperParams(T=T, b=3.0, rank=1)
                assert np.abs(q_from_j_identity(g, h) - deepwalk_q(g, h)).max() <= 1e-10

    def test_zero_degree_rejected(self):
        """Zero-degree nodes make D^-1 undefined."""
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            q_from_j_identity(g, HyperParams(T=2))


class TestBaseMatrix:
    def test_dispatch(self, k3):
        """Each base returns the matching statistic."""
        h = HyperParams(T=2, b=1.0, rank=1)
        np.testing.assert_array_equal(base_matrix(k3, Base.ADJACENCY, h), adjacency(k3).toarray())
        np.testing.assert_allclose(base_matrix(k3, Base.JOINT_J, h), joint_j(k3, h))
        np.testing.assert_allclose(base_matrix(k3, Base.Q, h), deepwalk_q(k3, h))

    def test_cap(self, karate):
        """The cap is enforced for every base."""
        with pytest.raises(MemoryCapError):
            base_matrix(karate, Base.ADJACENCY, HyperParams(T=1), mem_cap=33)
