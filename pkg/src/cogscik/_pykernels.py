"""Pure-Python kernels. Loaded when the compiled module is unavailable.

Arithmetic order is identical to ``_ckernels.pyx``: per-point accumulation
runs over dimensions 0..d-1 as ``acc += w * (diff * diff)``, so both
backends produce bitwise-equal results.
"""
import math

import numpy as np

BACKEND = "python"


def sq_distances(points, point, weights):
    pts = points.tolist()
    p = point.tolist()
    w = weights.tolist()
    d = len(p)
    out = []
    for row in pts:
        acc = 0.0
        for j in range(d):
            diff = row[j] - p[j]
            acc += w[j] * (diff * diff)
        out.append(acc)
    return np.array(out, dtype=np.float64)


def distances(points, point, weights):
    return np.array([math.sqrt(s) for s in sq_distances(points, point, weights).tolist()],
                    dtype=np.float64)


def nearest_k(points, point, weights, k):
    dist = distances(points, point, weights).tolist()
    order = sorted(range(len(dist)), key=lambda i: (dist[i], i))[:k]
    return (np.array(order, dtype=np.intp),
            np.array([dist[i] for i in order], dtype=np.float64))


def assign(points, centroids):
    pts = points.tolist()
    cents = centroids.tolist()
    d = points.shape[1]
    labels = []
    best = []
    for row in pts:
        best_j = -1
        best_s = math.inf
        for j, c in enumerate(cents):
            acc = 0.0
            for t in range(d):
                diff = row[t] - c[t]
                acc += 1.0 * (diff * diff)
            if acc < best_s:
                best_s = acc
                best_j = j
        labels.append(best_j)
        best.append(best_s)
    return np.array(labels, dtype=np.intp), np.array(best, dtype=np.float64)
