"""Counter-based random streams keyed by (seed, case id).

Philox streams mean a sweep draws the same numbers no matter how its cases
are scheduled or parallelized, which is what makes reports byte-identical
run to run.
"""

from __future__ import annotations

import zlib

import numpy as np


def case_rng(seed: int, case_id: str) -> np.random.Generator:
    """Independent generator for one named case under a global seed."""
    tag = zlib.crc32(case_id.encode("utf-8"))
    return np.random.Generator(np.random.Philox(key=(seed << 32) ^ tag))
