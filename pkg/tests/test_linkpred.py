import importlib
import itertools

import numpy as np
import pytest
from src.errors import EvaluationError, InsufficientNonEdgesError
from src.graph import EdgeSubset, Graph, load_edge_list
from src.linkpred import evaluate, kfold_split, phi, roc_auc, sample_negatives, score_pairs
from src.matrices import HyperParams, parse_recipes, recipe_menu
from tests.conftest import dataset_or_skip


def brute_force_auc(pos, neg) -> float:
    total = 0.0
    for p, n in itertools.product(pos, neg):
        total += 1.0 if p > n else 0.5 if p == n else 0.0
    return total / (len(pos) * len(neg))


class TestKFoldSplit:
    def test_fold_sizes(self):
        """|E| = 10, k = 5: two test and eight train positives per fold."""
        g = Graph.from_edges(8, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        assert g.num_edges == 10
        for split in kfold_split(g, 5, seed=0):
            assert len(split.test_positives) == 2
            assert len(split.train_positives) == 8
            assert len(split.test_negatives) == 2
            assert len(split.train_negatives) == 8

    def test_test_folds_partition_edges(self, karate):
        """Test folds are disjoint and cover E."""
        splits = kfold_split(karate, 5, seed=7)
        seen = set()
        for split in splits:
            fold = split.test_positives.as_set()
            assert not (seen & fold)
            seen |= fold
        assert seen == karate.edge_set

    def test_invariants(self, karate):
        """Negatives are non-edges and train/test negatives are disjoint."""
        for split in kfold_split(karate, 5, seed=7):
            split.validate(karate)
            assert not karate.has_edges(split.test_negatives.pairs).any()
            assert not (split.train_negatives.as_set() & split.test_negatives.as_set())

    def test_deterministic(self, karate):
        """Same seed, same splits."""
        a = kfold_split(karate, 5, seed=7)
        b = kfold_split(karate, 5, seed=7)
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x.test_positives.pairs, y.test_positives.pairs)
            np.testing.assert_array_equal(x.train_negatives.pairs, y.train_negatives.pairs)

    def test_too_small(self, p2):
        """Fewer edges than folds is an error."""
        with pytest.raises(EvaluationError):
            kfold_split(p2, 2, seed=0)

    def test_k_below_two(self, karate):
        """k must be at least 2."""
        with pytest.raises(EvaluationError):
            kfold_split(karate, 1, seed=0)


class TestSampleNegatives:
    def test_complete_graph(self, k3):
        """K3 has no non-edges."""
        with pytest.raises(InsufficientNonEdgesError):
            sample_negatives(k3, 1, seed=0)

    def test_forced_pair(self, p3):
        """P3: the only non-edge is (0, 2)."""
        neg = sample_negatives(p3, 1, seed=0)
        assert neg.pairs.tolist() == [[0, 2]]
        assert neg.label == 'negative'

    def test_karate_78(self, karate):
        """78 distinct non-edges, none in E."""
        neg = sample_negatives(karate, 78, seed=1)
        assert len(neg) == 78
        assert len(neg.as_set()) == 78
        assert not karate.has_edges(neg.pairs).any()

    def test_exclude(self, s3):
        """Excluded pairs are never drawn."""
        exclude = EdgeSubset(np.array([[1, 2]]), 'negative', 'test')
        neg = sample_negatives(s3, 2, exclude=exclude, seed=0)
        assert neg.as_set() == {(1, 3), (2, 3)}

    def test_exclude_exhausts(self, s3):
        """Excluded pairs count against availability."""
        exclude = EdgeSubset(np.array([[1, 2]]), 'negative', 'test')
        with pytest.raises(InsufficientNonEdgesError):
            sample_negatives(s3, 3, exclude=exclude, seed=0)


class TestScorePairs:
    def test_zero_dot(self):
        """Orthogonal embeddings score 0.5."""
        y = np.array([[1.0, 0.0], [0.0, 1.0]])
        assert score_pairs(y, np.array([[0, 1]]))[0] == pytest.approx(0.5)

    def test_ln3(self):
        """||y||^2 = ln 3 scores 0.75."""
        y = np.full((2, 1), np.sqrt(np.log(3.0)))
        assert score_pairs(y, np.array([[0, 1]]))[0] == pytest.approx(0.75)

    def test_monotone(self):
        """Scores order like dot products."""
        rng = np.random.default_rng(0)
        y = rng.standard_normal((20, 4))
        pairs = np.array([[i, j] for i in range(20) for j in range(i + 1, 20)])
        dots = np.einsum('ij,ij->i', y[pairs[:, 0]], y[pairs[:, 1]])
        scores = score_pairs(y, pairs)
        order = np.argsort(dots)
        assert np.all(np.diff(scores[order]) >= 0)

    def test_out_of_range(self):
        """Ids must be below n."""
        with pytest.raises(EvaluationError):
            score_pairs(np.ones((2, 1)), np.array([[0, 2]]))


class TestRocAuc:
    def test_examples(self):
        """Perfect separation, a tie and a mixed case."""
        assert roc_auc([0.9, 0.8], [0.7, 0.1]) == 1.0
        assert roc_auc([0.5], [0.5]) == 0.5
        assert roc_auc([0.8, 0.4], [0.6, 0.2]) == 0.75

    def test_matches_brute_force(self):
        """Rank-based AUC equals the pairwise definition, ties included."""
        rng = np.random.default_rng(42)
        for _ in range(1000):
            pos = rng.integers(0, 6, size=rng.integers(1, 31)).astype(float)
            neg = rng.integers(0, 6, size=rng.integers(1, 31)).astype(float)
            assert abs(roc_auc(pos, neg) - brute_force_auc(pos, neg)) <= 1e-12

    def test_monotone_invariance(self):
        """Strictly increasing maps leave AUC unchanged."""
        rng = np.random.default_rng(1)
        pos, neg = rng.standard_normal(25), rng.standard_normal(25)
        for fn in (np.exp, lambda x: x**3 + 2 * x, lambda x: 1 / (1 + np.exp(-x))):
            assert roc_auc(fn(pos), fn(neg)) == pytest.approx(roc_auc(pos, neg), abs=1e-12)

    def test_empty(self):
        """Empty lists are rejected."""
        with pytest.raises(EvaluationError):
            roc_auc([], [0.1])


class TestPhi:
    def test_examples(self):
        """Signed percent difference."""
        assert phi(1.1, 1.0) == pytest.approx(10.0)
        assert phi(0.7, 0.7) == 0.0
        assert phi(0.89, 0.85) == pytest.approx(4.71, abs=0.005)

    def test_antisymmetry_identity(self):
        """phi(x, y) = -phi(y, x) * x / y."""
        rng = np.random.default_rng(2)
        for x, y in rng.uniform(0.1, 1.0, size=(100, 2)):
            assert phi(x, y) == pytest.approx(-phi(y, x) * x / y)

    def test_zero_reference(self):
        """A zero reference score is undefined."""
        with pytest.raises(EvaluationError):
            phi(0.5, 0.0)


class TestEvaluate:
    RECIPES = ['a', 'sig_log_q', 'trunc_log_q']

    def run(self, karate, threads=1):
        return evaluate(
            karate,
            parse_recipes(self.RECIPES),
            HyperParams(T=10, b=10.0, rank=16),
            k=5,
            seed=0,
            threads=threads,
            dataset='karate',
        )

    def test_shape(self, karate):
        """Three recipes with five folds each, means and SDs in range."""
        report = self.run(karate)
        assert report.recipes == self.RECIPES
        assert not report.errors
        for name in self.RECIPES:
            assert len(report.folds[name]) == 5
            assert 0.0 <= report.mean(name) <= 1.0
            assert report.sd(name) >= 0.0
            values = report.auc_values(name)
            assert report.sd(name) == pytest.approx(np.std(values, ddof=1))

    def test_deterministic(self, karate):
        """Two runs, and a threaded run, give identical fold values."""
        a = self.run(karate)
        b = self.run(karate, threads=3)
        assert a.folds == b.folds

    def test_fold_order(self, karate):
        """Fold entries are stored in fold order."""
        report = self.run(karate)
        assert [f['fold'] for f in report.folds['a']] == [0, 1, 2, 3, 4]

    def test_aggregates(self, karate):
        """phi against trunc_log_q and the sigmoid pair are derived from the means."""
        report = self.run(karate)
        assert report.phi_vs_reference('trunc_log_q') == 0.0
        expected = phi(report.mean('sig_log_q'), report.mean('trunc_log_q'))
        assert report.sigmoid_effect() == [{'sigmoid': 'sig_log_q', 'base': 'trunc_log_q', 'phi': expected}]
        gap = report.generalization_gap('a')
        assert gap == pytest.approx(phi(report.mean('a'), report.mean('a', 'train')))

    def test_failed_recipe_recorded(self, karate, monkeypatch):
        """A recipe that raises is recorded and the others still run."""
        evaluate_module = importlib.import_module('src.linkpred.evaluate')

        real = evaluate_module.apply_recipe

        def flaky(m, recipe, in_place=False):
            if recipe.name == 'a':
                raise FloatingPointError('boom')
            return real(m, recipe, in_place)

        monkeypatch.setattr(evaluate_module, 'apply_recipe', flaky)
        report = self.run(karate)
        assert len(report.errors) == 5
        assert all(e['recipe'] == 'a' and 'boom' in e['error'] for e in report.errors)
        assert report.mean('a') is None
        assert len(report.folds['trunc_log_q']) == 5


class TestPublishedDatasets:
    """Full menu at T=10, b=10, rank 128, five folds; runs only when the SNAP files are in data/."""

    @pytest.fixture(scope='class', params=[('facebook_combined.txt', 10.0), ('ppi.txt', 25.0)], ids=['ego-facebook', 'ppi'])
    def menu_report(self, request):
        filename, sigmoid_gain = request.param
        g = load_edge_list(dataset_or_skip(filename))
        report = evaluate(g, recipe_menu(), HyperParams(T=10, b=10.0, rank=128), k=5, seed=0, threads=4, dataset=filename)
        return report, sigmoid_gain

    def test_sigmoid_log_beats_trunc_log(self, menu_report):
        """sig_log_q improves on trunc_log_q by the expected margin."""
        report, sigmoid_gain = menu_report
        assert not report.errors
        assert phi(report.mean('sig_log_q'), report.mean('trunc_log_q')) >= sigmoid_gain

    def test_joint_close_to_best(self, menu_report):
        """J is within 0.02 AUC of the best recipe."""
        report, _ = menu_report
        best = max(report.mean(name) for name in report.recipes)
        assert report.mean('j') >= best - 0.02

    def test_sigmoid_direction(self, menu_report):
        """The sigmoid helps Q and hurts J by at least 5%."""
        report, _ = menu_report
        assert phi(report.mean('sig_q'), report.mean('q')) > 0
        assert phi(report.mean('sig_j'), report.mean('j')) <= -5.0
