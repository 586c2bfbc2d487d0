"""Distance kernels over IO vectors.

The default kernel is plain Euclidean distance. ``weighted_distance``
generalizes it to ``sqrt(sum_i w_i * (a_i - b_i)**2)`` with strictly
positive per-dimension weights; uniform weights reproduce the Euclidean
value bit for bit.

Bulk routines dispatch to the compiled ``_ckernels`` extension when it is
importable and to ``_pykernels`` otherwise. Set ``COGSCIK_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

from .errors import InvalidWeightError
from .io_space import N_DIMS

if os.environ.get("COGSCIK_PURE_PYTHON"):
    from . import _pykernels as _backend
else:
    try:
        from . import _ckernels as _backend
    except ImportError:
        from . import _pykernels as _backend

BACKEND: str = _backend.BACKEND
UNIFORM = (1.0,) * N_DIMS


class WeightVector(tuple):
    __slots__ = ()

    def __new__(cls, weights: Sequence[float] = UNIFORM):
        vals = tuple(float(w) for w in weights)
        if len(vals) != N_DIMS:
            raise InvalidWeightError(f"weight vector needs {N_DIMS} entries, got {len(vals)}")
        for w in vals:
            if not (w > 0 and math.isfinite(w)):
                raise InvalidWeightError(f"weights must be finite and > 0, got {w!r}")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        try:
            vals = [float(t) for t in text.split(",")]
        except ValueError:
            raise InvalidWeightError(f"bad weights {text!r}") from None
        return cls(vals)

    def as_array(self) -> np.ndarray:
        return np.asarray(self, dtype=np.float64)

    def __str__(self) -> str:
        return ",".join(f"{w:g}" for w in self)


def euclidean_distance(a: Sequence[float], b: Sequence[float]) -> float:
    acc = 0.0
    for x, y in zip(a, b):
        diff = x - y
        acc += diff * diff
    return math.sqrt(acc)


def weighted_distance(a: Sequence[float], b: Sequence[float],
                      w: Sequence[float]) -> float:
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    acc = 0.0
    for x, y, wi in zip(a, b, w):
        diff = x - y
        acc += wi * (diff * diff)
    return math.sqrt(acc)


def max_distance(w: Sequence[float] = UNIFORM) -> float:
    """Upper bound on any distance between two points of the IO box."""
    return math.sqrt(sum(4.0 * wi for wi in w))


def _points(points) -> np.ndarray:
    return np.ascontiguousarray(points, dtype=np.float64).reshape(-1, N_DIMS)


def _weights(w) -> np.ndarray:
    if w is None:
        return np.ones(N_DIMS)
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    return w.as_array()


def distances_to(points, point, w=None) -> np.ndarray:
    """Weighted distance from ``point`` to every row of ``points``."""
    return _backend.distances(_points(points), np.ascontiguousarray(point, dtype=np.float64),
                              _weights(w))


def nearest_k(points, point, k: int, w=None) -> tuple[np.ndarray, np.ndarray]:
    """Row indices and distances of the ``k`` nearest rows in ascending order.

    Equal distances keep row order.
    """
    pts = _points(points)
    if not 1 <= k <= pts.shape[0]:
        raise ValueError(f"k={k} outside 1..{pts.shape[0]}")
    return _backend.nearest_k(pts, np.ascontiguousarray(point, dtype=np.float64),
                              _weights(w), int(k))


def assign_nearest(points, centroids) -> tuple[np.ndarray, np.ndarray]:
    """Nearest centroid per row (lowest index on ties) and its squared distance."""
    return _backend.assign(_points(points),
                           np.ascontiguousarray(centroids, dtype=np.float64).reshape(-1, N_DIMS))
