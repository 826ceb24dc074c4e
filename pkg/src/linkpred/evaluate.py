"""
K-fold link-prediction evaluation of recipe matrices.

Each fold builds its training subgraph, computes the needed base matrices on
it once, factorizes every recipe and scores the four pair sets with the fixed
classifier sigma(y_u . y_v). Folds may run on worker threads; results are
collected in fold-major, recipe-minor order regardless of completion order.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from joblib import Parallel, delayed

from ..constants import JIndex, RecipeTokens
from ..factorize import truncated_svd
from ..graph import Graph, subgraph_from_edges
from ..matrices import HyperParams, MatrixRecipe, apply_recipe, base_matrix
from ..utils import check_dense_cap
from .metrics import phi, roc_auc, score_pairs
from .split import FoldSplit, kfold_split


@dataclass
class EvalReport:
    """Per-fold AUCs plus the aggregates derived from them"""

    dataset: str
    params: dict
    recipes: list[str]
    folds: dict[str, list[dict]] = field(default_factory=dict)
    errors: list[dict] = field(default_factory=list)

    def auc_values(self, recipe: str, split: str = 'test') -> np.ndarray:
        return np.array([f[f'{split}_auc'] for f in self.folds.get(recipe, [])], dtype=np.float64)

    def mean(self, recipe: str, split: str = 'test') -> float | None:
        values = self.auc_values(recipe, split)
        return float(values.mean()) if len(values) else None

    def sd(self, recipe: str, split: str = 'test') -> float | None:
        """Sample standard deviation across folds"""
        values = self.auc_values(recipe, split)
        return float(values.std(ddof=1)) if len(values) > 1 else None

    def phi_vs_reference(self, recipe: str, reference: str = RecipeTokens.PHI_REFERENCE) -> float | None:
        m, ref = self.mean(recipe), self.mean(reference)
        if m is None or not ref:
            return None
        return phi(m, ref)

    def generalization_gap(self, recipe: str) -> float | None:
        """phi(test mean, train mean)"""
        test, train = self.mean(recipe, 'test'), self.mean(recipe, 'train')
        if test is None or not train:
            return None
        return phi(test, train)

    def sigmoid_effect(self) -> list[dict]:
        """phi(sigma(M), M) for every menu pair evaluated on both sides"""
        effects = []
        for sig, plain in RecipeTokens.SIGMOID_PAIRS:
            m_sig, m_plain = self.mean(sig), self.mean(plain)
            if m_sig is None or not m_plain:
                continue
            effects.append({'sigmoid': sig, 'base': plain, 'phi': phi(m_sig, m_plain)})
        return effects

    def best_recipes(self, split: str = 'test') -> list[str]:
        """Recipes ranked by mean AUC, best first (ties keep menu order)"""
        scored = [(r, self.mean(r, split)) for r in self.recipes if self.mean(r, split) is not None]
        return [r for r, _ in sorted(scored, key=lambda item: -item[1])]


def _evaluate_fold(
    g: Graph,
    split: FoldSplit,
    recipes: list[MatrixRecipe],
    h: HyperParams,
    j_index: str,
    oversample: int,
    power_iters: int,
    seed: int,
    logger: logging.Logger,
) -> tuple[list[dict], list[dict]]:
    train_graph = subgraph_from_edges(g, split.train_positives, logger)
    bases = {}
    results, errors = [], []

    for recipe in recipes:
        try:
            if recipe.base not in bases:
                bases[recipe.base] = base_matrix(train_graph, recipe.base, h, j_index, logger=logger)
            m = apply_recipe(bases[recipe.base], recipe)
            emb = truncated_svd(m, h.rank, oversample, power_iters, seed, logger)

            train_auc = roc_auc(score_pairs(emb.y, split.train_positives), score_pairs(emb.y, split.train_negatives))
            test_auc = roc_auc(score_pairs(emb.y, split.test_positives), score_pairs(emb.y, split.test_negatives))
            results.append({'recipe': recipe.name, 'fold': split.fold, 'train_auc': train_auc, 'test_auc': test_auc})
            logger.info(f'  Fold {split.fold} {recipe.name:<12} train {train_auc:.4f}  test {test_auc:.4f}')
        except Exception as e:
            errors.append({'recipe': recipe.name, 'fold': split.fold, 'error': f'{type(e).__name__}: {e}'})
            logger.error(f'✗ Fold {split.fold} {recipe.name} failed: {e}')

    return results, errors


def evaluate(
    g: Graph,
    recipes: list[MatrixRecipe],
    h: HyperParams,
    k: int,
    seed: int,
    j_index: str = JIndex.CANONICAL,
    mem_cap: int | None = None,
    threads: int = 1,
    oversample: int = 10,
    power_iters: int = 7,
    dataset: str = '',
    logger: logging.Logger | None = None,
) -> EvalReport:
    """
    Cross-validated link prediction for every recipe.

    Args:
        g: Full graph
        recipes: Recipes in report order
        h: Hyper-parameters (T, b, rank)
        k: Number of folds
        seed: Seed for splits, negatives and SVD sketches
        j_index: Summation range for J
        mem_cap: Node cap for dense matrices
        threads: Fold-level worker cap
        oversample: SVD oversampling
        power_iters: SVD power iterations
        dataset: Name stored in the report
        logger: Logger instance

    Returns:
        EvalReport; failed (recipe, fold) cells are listed in its errors
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    if mem_cap is not None:
        check_dense_cap(g.n, mem_cap, logger)
    h.validate_for(g.n)

    splits = kfold_split(g, k, seed, logger)
    args = (recipes, h, j_index, oversample, power_iters, seed, logger)
    if threads > 1:
        outcomes = Parallel(n_jobs=min(threads, k), prefer='threads')(
            delayed(_evaluate_fold)(g, split, *args) for split in splits
        )
    else:
        outcomes = [_evaluate_fold(g, split, *args) for split in splits]

    report = EvalReport(
        dataset=dataset,
        params={
            'T': h.T,
            'b': h.b,
            'dim': h.rank,
            'folds': k,
            'seed': seed,
            'j_index': j_index,
            'oversample': oversample,
            'power_iters': power_iters,
        },
        recipes=[r.name for r in recipes],
        folds={r.name: [] for r in recipes},
    )
    for results, errors in outcomes:
        for row in results:
            report.folds[row['recipe']].append(
                {'fold': row['fold'], 'train_auc': row['train_auc'], 'test_auc': row['test_auc']}
            )
        report.errors.extend(errors)

    for name in report.recipes:
        mean, sd = report.mean(name), report.sd(name)
        if mean is not None:
            sd_text = f' ± {sd:.4f}' if sd is not None else ''
            logger.info(f'✓ {name:<12} mean test AUC {mean:.4f}{sd_text}')
    if report.errors:
        logger.warning(f'⚠ {len(report.errors)} recipe/fold evaluation(s) failed')
    return report
