# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Arithmetic order mirrors ``_pykernels``."""
import numpy as np
from libc.math cimport sqrt, INFINITY

BACKEND = "cython"


cdef inline double _sqdist(const double[:, ::1] pts, Py_ssize_t i,
                           const double[::1] p, const double[::1] w) noexcept nogil:
    cdef Py_ssize_t j
    cdef double acc = 0.0, diff
    for j in range(pts.shape[1]):
        diff = pts[i, j] - p[j]
        acc += w[j] * (diff * diff)
    return acc


def sq_distances(const double[:, ::1] points, const double[::1] point,
                 const double[::1] weights):
    cdef Py_ssize_t i, n = points.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _sqdist(points, i, point, weights)
    return out


def distances(const double[:, ::1] points, const double[::1] point,
              const double[::1] weights):
    cdef Py_ssize_t i, n = points.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = sqrt(_sqdist(points, i, point, weights))
    return out


def nearest_k(const double[:, ::1] points, const double[::1] point,
              const double[::1] weights, Py_ssize_t k):
    """Indices and distances of the k nearest rows, ties broken by row index."""
    cdef Py_ssize_t n = points.shape[0], i, m, filled = 0
    idx = np.empty(k, dtype=np.intp)
    dst = np.empty(k, dtype=np.float64)
    cdef Py_ssize_t[::1] bi = idx
    cdef double[::1] bd = dst
    cdef double d
    with nogil:
        for i in range(n):
            d = sqrt(_sqdist(points, i, point, weights))
            if filled == k and not d < bd[k - 1]:
                continue
            # insertion keeps earlier rows ahead of later rows at equal distance
            m = filled if filled < k else k - 1
            while m > 0 and d < bd[m - 1]:
                bd[m] = bd[m - 1]
                bi[m] = bi[m - 1]
                m -= 1
            bd[m] = d
            bi[m] = i
            if filled < k:
                filled += 1
    return idx, dst


def assign(const double[:, ::1] points, const double[:, ::1] centroids):
    cdef Py_ssize_t n = points.shape[0], kc = centroids.shape[0], d = points.shape[1]
    cdef Py_ssize_t i, j, t, best_j
    cdef double acc, diff, best_s
    labels = np.empty(n, dtype=np.intp)
    best = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t[::1] lb = labels
    cdef double[::1] bs = best
    with nogil:
        for i in range(n):
            best_j = -1
            best_s = INFINITY
            for j in range(kc):
                acc = 0.0
                for t in range(d):
                    diff = points[i, t] - centroids[j, t]
                    acc += 1.0 * (diff * diff)
                if acc < best_s:
                    best_s = acc
                    best_j = j
            lb[i] = best_j
            bs[i] = best_s
    return labels, best
