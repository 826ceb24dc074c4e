"""
Seeded generator derivation.

Streams are keyed by (seed, *labels) through numpy's SeedSequence so that a
fold or a start node always gets the same stream regardless of which worker
runs it.
"""

import numpy as np


def derive_rng(seed: int, *labels: int) -> np.random.Generator:
    """Independent generator for the stream identified by seed and integer labels"""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *[int(x) for x in labels]]))
