"""Seeded PCG64 streams.

Every random draw in the package comes from a ``numpy.random.Generator``
backed by PCG64 and keyed by ``(master seed, purpose, index)`` through
``SeedSequence``, so independent consumers never share a stream.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError

PURPOSES = {
    "catalog": 0,
    "synthetic": 1,
    "actor-io": 2,
    "policy": 3,
    "kmeans": 4,
}


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed!r}")
    return int(seed)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def substream(seed: int, purpose: str, index: int = 0) -> np.random.Generator:
    key = (PURPOSES[purpose], int(index))
    ss = np.random.SeedSequence(check_seed(seed), spawn_key=key)
    return np.random.Generator(np.random.PCG64(ss))
