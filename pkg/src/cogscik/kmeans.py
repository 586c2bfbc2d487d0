"""Lloyd's K-means over catalog IO vectors, used as a structural baseline."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .catalog import Catalog
from .errors import ClusterSizeError, DomainError
from .kernel import assign_nearest


@dataclass
class KMeansResult:
    centroids: np.ndarray
    assignments: np.ndarray
    iterations: int
    wcss: float
    converged: bool
    wcss_history: list[float] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.centroids)

    def sizes(self) -> list[int]:
        return np.bincount(self.assignments, minlength=self.k).tolist()


def _wcss(sq: np.ndarray) -> float:
    return float(sum(sq.tolist()))


def lloyd(points: np.ndarray, centroids: np.ndarray, max_iterations: int = 500) -> KMeansResult:
    """Run Lloyd iterations from the given starting centroids.

    Each iteration assigns every point to its nearest centroid (lowest index
    on ties) and then moves each centroid to the mean of its points. A
    centroid left without points is moved onto the point farthest from it.
    Stops once an assignment repeats the previous one.
    """
    if max_iterations < 1:
        raise DomainError("max_iterations must be >= 1")
    pts = np.ascontiguousarray(points, dtype=np.float64)
    cents = np.array(centroids, dtype=np.float64)
    k = len(cents)
    history: list[float] = []
    prev = None
    converged = False
    it = 0
    labels, sq = assign_nearest(pts, cents)
    while True:
        it += 1
        history.append(_wcss(sq))
        if prev is not None and np.array_equal(labels, prev):
            converged = True
            break
        new = cents.copy()
        reseeded = set()
        for j in range(k):
            mask = labels == j
            if mask.any():
                new[j] = pts[mask].mean(axis=0)
                continue
            far = ((pts - cents[j]) ** 2).sum(axis=1)
            far[list(reseeded)] = -1.0
            pick = int(np.argmax(far))
            reseeded.add(pick)
            new[j] = pts[pick]
        if np.array_equal(new, cents):
            converged = True
            break
        if it >= max_iterations:
            break
        cents = new
        prev = labels
        labels, sq = assign_nearest(pts, cents)
    return KMeansResult(cents, labels, it, history[-1], converged, history)


def kmeans(catalog: Catalog, k: int, rng, max_iterations: int = 500,
           initial: Sequence[int] | None = None) -> KMeansResult:
    """K-means with Forgy initialization: ``k`` distinct moves drawn uniformly."""
    n = len(catalog)
    if not 1 <= k <= n:
        raise ClusterSizeError(f"k={k} outside 1..{n}")
    if initial is None:
        initial = rng.choice(n, size=k, replace=False)
    elif len(set(initial)) != k:
        raise DomainError("initial centroids must be k distinct indices")
    pts = catalog.points
    return lloyd(pts, pts[np.asarray(initial, dtype=np.intp)], max_iterations)


def cluster_type_summary(result: KMeansResult, catalog: Catalog) -> list[str]:
    """Modal move type per cluster; ties go to the type of the member nearest the centroid."""
    out = []
    for j in range(result.k):
        idx = np.flatnonzero(result.assignments == j)
        if idx.size == 0:
            out.append("")
            continue
        sq = ((catalog.points[idx] - result.centroids[j]) ** 2).sum(axis=1)
        order = idx[np.argsort(sq, kind="stable")]
        counts = Counter(catalog.moves[i].move_type for i in order.tolist())
        best = max(counts.values())
        out.append(next(t for t, c in counts.items() if c == best))
    return out


def format_kmeans_report(result: KMeansResult, catalog: Catalog) -> str:
    types = cluster_type_summary(result, catalog)
    lines = [
        f"K-means k={result.k} iterations={result.iterations} "
        f"converged={'yes' if result.converged else 'no'}",
        f"WCSS: {result.wcss:.8f}",
        "",
    ]
    for j, (size, t) in enumerate(zip(result.sizes(), types)):
        cent = " ".join(f"{v:.8f}" for v in result.centroids[j])
        lines += [
            f"Cluster {j}",
            f"\tSize: {size}",
            f"\tCentroid: [{cent}]",
            f"\tModal Type: {t}",
            "",
        ]
    return "\n".join(lines) + "\n"
