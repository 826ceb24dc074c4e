from .convergence import convergence_study, joint_relative_error, marginal_max_error, pmi_max_relative_error
from .pipeline import get_oracle_status, process_oracle
from .walks import (
    CooccurrenceCounts,
    WalkCorpus,
    count_cooccurrences,
    empirical_joint,
    empirical_pmi,
    simulate_walks,
    validate_corpus,
    write_corpus,
)

__all__ = [
    'CooccurrenceCounts',
    'WalkCorpus',
    'convergence_study',
    'count_cooccurrences',
    'empirical_joint',
    'empirical_pmi',
    'get_oracle_status',
    'joint_relative_error',
    'marginal_max_error',
    'pmi_max_relative_error',
    'process_oracle',
    'simulate_walks',
    'validate_corpus',
    'write_corpus',
]
