"""Deterministic RNG substreams.

Workers receive per-trial (or per-restart) streams derived by integer
mixing from (master_seed, index...), so results never depend on worker
count, scheduling, or platform hash randomization.
"""

from __future__ import annotations

import random

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(master_seed: int, *indices: int) -> int:
    """64-bit seed mixed from the master seed and any number of indices."""
    x = _splitmix64(master_seed & _MASK)
    for i in indices:
        x = _splitmix64(x ^ _splitmix64(i & _MASK))
    return x


def substream(master_seed: int, *indices: int) -> random.Random:
    """Independent random.Random stream for (master_seed, indices...)."""
    return random.Random(derive_seed(master_seed, *indices))
