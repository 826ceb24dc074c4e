from .closed_form import HyperParams, base_matrix, deepwalk_q, joint_j, power_sum, q_from_j_identity
from .io import read_gfmx, read_matrix_csv, write_gfmx, write_matrix_csv
from .pipeline import get_matrix_status, process_matrix
from .transforms import Base, MatrixRecipe, Transform, apply_recipe, parse_recipes, recipe_menu, valid_tokens

__all__ = [
    'Base',
    'HyperParams',
    'MatrixRecipe',
    'Transform',
    'apply_recipe',
    'base_matrix',
    'deepwalk_q',
    'get_matrix_status',
    'joint_j',
    'parse_recipes',
    'power_sum',
    'process_matrix',
    'q_from_j_identity',
    'read_gfmx',
    'read_matrix_csv',
    'recipe_menu',
    'valid_tokens',
    'write_gfmx',
    'write_matrix_csv',
]
