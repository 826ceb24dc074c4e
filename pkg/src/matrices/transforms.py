"""
Element-wise statistic transforms applied before factorization.

A recipe is a base statistic (A, J or Q) plus a transform. Q-only transforms
interpret the input as the argument of a log, so they never materialize
log(0) = -inf: sigma(log x) is evaluated as x / (1 + x).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import expit

from ..constants import RecipeTokens
from ..errors import RecipeError


class Base(str, Enum):
    ADJACENCY = 'A'
    JOINT_J = 'J'
    Q = 'Q'


class Transform(str, Enum):
    IDENTITY = 'identity'
    TRUNC_LOG = 'trunc_log'
    SIGMOID_LOG = 'sigmoid_log'
    EXP_LOG = 'exp_log'
    SIGMOID_EXP_LOG = 'sigmoid_exp_log'
    SIGMOID = 'sigmoid'


Q_ONLY = frozenset({Transform.TRUNC_LOG, Transform.SIGMOID_LOG, Transform.EXP_LOG, Transform.SIGMOID_EXP_LOG})


@dataclass(frozen=True)
class MatrixRecipe:
    base: Base
    transform: Transform

    def __post_init__(self):
        object.__setattr__(self, 'base', Base(self.base))
        object.__setattr__(self, 'transform', Transform(self.transform))
        if self.transform in Q_ONLY and self.base is not Base.Q:
            raise RecipeError(f'Transform {self.transform.value} is only valid on Q, not {self.base.value}')

    @property
    def name(self) -> str:
        return _RECIPE_NAMES[(self.base, self.transform)]

    @classmethod
    def from_name(cls, token: str) -> 'MatrixRecipe':
        """Parse a CLI token such as 'sig_log_q'"""
        try:
            base, transform = _NAME_TO_RECIPE[token]
        except KeyError:
            raise RecipeError(f'Unknown recipe token: {token!r} (valid: {", ".join(valid_tokens())})') from None
        return cls(base, transform)

    def __str__(self) -> str:
        return self.name


_RECIPE_NAMES = {
    (Base.ADJACENCY, Transform.IDENTITY): RecipeTokens.A,
    (Base.ADJACENCY, Transform.SIGMOID): RecipeTokens.SIG_A,
    (Base.JOINT_J, Transform.IDENTITY): RecipeTokens.J,
    (Base.JOINT_J, Transform.SIGMOID): RecipeTokens.SIG_J,
    (Base.Q, Transform.EXP_LOG): RecipeTokens.Q,
    (Base.Q, Transform.SIGMOID_EXP_LOG): RecipeTokens.SIG_Q,
    (Base.Q, Transform.TRUNC_LOG): RecipeTokens.TRUNC_LOG_Q,
    (Base.Q, Transform.SIGMOID_LOG): RecipeTokens.SIG_LOG_Q,
    (Base.Q, Transform.IDENTITY): RecipeTokens.ID_Q,
    (Base.Q, Transform.SIGMOID): RecipeTokens.SIGMOID_Q,
}
_NAME_TO_RECIPE = {name: key for key, name in _RECIPE_NAMES.items()}


def valid_tokens() -> list[str]:
    """Menu tokens first, then the remaining valid ones"""
    extra = [t for t in _NAME_TO_RECIPE if t not in RecipeTokens.MENU]
    return list(RecipeTokens.MENU) + extra


def recipe_menu() -> list[MatrixRecipe]:
    """The evaluation menu: A, sigma(A), J, sigma(J), Q, sigma(Q), log max(Q,1), sigma(log Q)"""
    return [MatrixRecipe.from_name(token) for token in RecipeTokens.MENU]


def parse_recipes(tokens) -> list[MatrixRecipe]:
    return [MatrixRecipe.from_name(t) for t in tokens]


def apply_recipe(m: np.ndarray, recipe: MatrixRecipe, in_place: bool = False) -> np.ndarray:
    """
    Apply the recipe's element-wise transform to its base matrix.

    Args:
        m: Base matrix (A, J or Q as named by the recipe)
        recipe: Recipe to apply
        in_place: Overwrite m instead of allocating a new array

    Returns:
        Transformed matrix (m itself when in_place)

    Raises:
        RecipeError: negative entry in a Q-based input
    """
    m = np.asarray(m, dtype=np.float64)
    if recipe.base is Base.Q and m.size and np.nanmin(m) < 0:
        raise RecipeError(f'Q-based input has negative entries (min {np.nanmin(m):.3g}); Q must be non-negative')

    out = m if in_place else np.empty_like(m)
    t = recipe.transform

    if t is Transform.IDENTITY or t is Transform.EXP_LOG:
        # exp(log x) = x, with 0 -> 0
        if not in_place:
            np.copyto(out, m)
    elif t is Transform.TRUNC_LOG:
        np.maximum(m, 1.0, out=out)
        np.log(out, out=out)
    elif t is Transform.SIGMOID_LOG:
        np.divide(m, m + 1.0, out=out)
    elif t is Transform.SIGMOID_EXP_LOG or t is Transform.SIGMOID:
        expit(m, out=out)
    else:
        raise RecipeError(f'Unknown transform: {t}')

    return out
