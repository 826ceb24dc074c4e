"""
Centralized constants for the graphfactor toolkit.
Use these constants instead of hardcoded strings in your code.
"""


class RecipeTokens:
    """Stable CLI tokens for the matrices that get factorized"""

    A = 'a'
    SIG_A = 'sig_a'
    J = 'j'
    SIG_J = 'sig_j'
    Q = 'q'
    SIG_Q = 'sig_q'
    TRUNC_LOG_Q = 'trunc_log_q'
    SIG_LOG_Q = 'sig_log_q'

    # Valid but outside the evaluation menu
    ID_Q = 'id_q'
    SIGMOID_Q = 'sigmoid_q'

    MENU = [A, SIG_A, J, SIG_J, Q, SIG_Q, TRUNC_LOG_Q, SIG_LOG_Q]

    # (sigma(M), M); sigma is applied to the untruncated log Q for trunc_log_q
    SIGMOID_PAIRS = [(SIG_A, A), (SIG_J, J), (SIG_Q, Q), (SIG_LOG_Q, TRUNC_LOG_Q)]

    # Reference matrix for the phi comparison column
    PHI_REFERENCE = TRUNC_LOG_Q


class JIndex:
    """Summation range used for the joint-probability matrix J"""

    CANONICAL = 'canonical'
    PAPER_LITERAL = 'paper-literal'

    ALL = [CANONICAL, PAPER_LITERAL]


class Presets:
    """Named hyper-parameter sets (also mirrored in config/config.json)"""

    PAPER_MAIN = 'paper-main'
    KARATE_FIG1 = 'karate-fig1'

    DEFAULTS = {
        PAPER_MAIN: {'T': 10, 'b': 10.0, 'dim': 128, 'folds': 5},
        KARATE_FIG1: {'T': 5, 'b': 1.0, 'dim': 5, 'folds': 5},
    }


class FileNames:
    """Artifact names written into output directories"""

    RUN_CONFIG = 'run_config.json'
    NODE_MAP = 'node_map.csv'
    EDGE_LIST = 'edges.txt'
    GRAPH_SUMMARY = 'graph_summary.json'
    REPORT_JSON = 'report.json'
    REPORT_MD = 'report.md'
    REPORT_XLSX = 'report.xlsx'
    FOLDS_CSV = 'folds.csv'
    CONVERGENCE_CSV = 'convergence.csv'
    CONVERGENCE_MD = 'convergence.md'
    CORPUS = 'walks.txt'


class BinaryFormat:
    """GFMX1 dense matrix container: magic, u64 rows, u64 cols, f64 payload (little-endian)"""

    MAGIC = b'GFMX1'
    HEADER_DTYPE = '<u8'
    PAYLOAD_DTYPE = '<f8'


# SNAP datasets resolved from the data folder by name (no download)
KNOWN_DATASETS = {
    'karate': 'karate.txt',
    'ego-facebook': 'facebook_combined.txt',
    'ppi': 'ppi.txt',
    'ca-astroph': 'CA-AstroPh.txt',
    'ca-hepth': 'CA-HepTh.txt',
    'wiki-vote': 'Wiki-Vote.txt',
}

DEFAULT_MEM_CAP = 20_000
SEED_ENV_VAR = 'GRAPHFACTOR_SEED'
LOGGER_NAME = 'graphfactor'
