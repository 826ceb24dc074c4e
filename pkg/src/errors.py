"""
Exception hierarchy for the graphfactor toolkit.

Everything raised on purpose derives from GraphFactorError so the CLI can map
it to exit code 1; the ValueError mix-ins keep callers that catch ValueError working.
"""


class GraphFactorError(Exception):
    """Base class for all toolkit errors"""


class GraphFormatError(GraphFactorError, ValueError):
    """Edge list unreadable, malformed, or empty"""


class EdgeNotInGraphError(GraphFactorError, ValueError):
    """Requested edge subset is not contained in the graph"""


class MemoryCapError(GraphFactorError, MemoryError):
    """Dense allocation would exceed the configured node cap"""


class RecipeError(GraphFactorError, ValueError):
    """Unknown recipe token, invalid base/transform pair, or invalid recipe input"""


class InsufficientNonEdgesError(GraphFactorError, ValueError):
    """Not enough non-edges left to sample the requested negatives"""


class FactorizationError(GraphFactorError, ValueError):
    """Rank out of range, non-finite input, or invalid singular values"""


class EvaluationError(GraphFactorError, ValueError):
    """Invalid evaluation input (empty score list, zero denominator, graph too small)"""


class OracleError(GraphFactorError, ValueError):
    """Empty walk corpus or invalid walk-oracle parameters"""
