"""Seeded random streams.

All randomness goes through numpy's PCG64 bit generator. A stream is keyed by
``(seed, *key)`` through ``SeedSequence`` spawn keys, so a chunk or restart
draws the same numbers whichever worker runs it.
"""

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    if seed < 0:
        msg = f"seed must be a non-negative integer, got {seed}"
        raise ValueError(msg)
    sequence = np.random.SeedSequence(seed, spawn_key=key)
    return np.random.Generator(np.random.PCG64(sequence))
