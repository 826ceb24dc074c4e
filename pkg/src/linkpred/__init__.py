from .evaluate import EvalReport, evaluate
from .metrics import phi, roc_auc, score_pairs
from .pipeline import get_evaluate_status, process_evaluate
from .reporting import generate_markdown_report, report_to_dict, save_report
from .split import FoldSplit, kfold_split, sample_negatives

__all__ = [
    'EvalReport',
    'FoldSplit',
    'evaluate',
    'generate_markdown_report',
    'get_evaluate_status',
    'kfold_split',
    'phi',
    'process_evaluate',
    'report_to_dict',
    'roc_auc',
    'sample_negatives',
    'save_report',
    'score_pairs',
]
