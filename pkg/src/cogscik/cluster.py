"""Actor-centred clustering: the k moves nearest a fixed centroid.

Unlike K-means the centroid is an input. It is the actor's IO vector (or the
last selected move's) and is never itself a member of the move set.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .catalog import Catalog, Move
from .errors import ClusterSizeError, DomainError
from .io_space import IOVector
from .kernel import WeightVector, nearest_k


@dataclass(frozen=True)
class Centroid:
    io: IOVector
    label: str = ""


@dataclass(frozen=True)
class ClusterMember:
    move: Move
    distance: float
    rank: int


@dataclass(frozen=True)
class Cluster:
    centroid: Centroid
    members: tuple[ClusterMember, ...]
    k: int
    primary_type: str

    @property
    def moves(self) -> list[Move]:
        return [m.move for m in self.members]


def build_cluster(centroid: Centroid, catalog: Catalog, k: int,
                  w: Sequence[float] | None = None) -> Cluster:
    """Cluster the ``k`` moves nearest ``centroid``; ties keep catalog order."""
    if not 1 <= k <= len(catalog):
        raise ClusterSizeError(f"cluster size k={k} outside 1..{len(catalog)}")
    w = WeightVector() if w is None else WeightVector(w)
    idx, dist = nearest_k(catalog.points, centroid.io, k, w)
    members = tuple(
        ClusterMember(catalog.moves[i], d, rank)
        for rank, (i, d) in enumerate(zip(idx.tolist(), dist.tolist()), start=1)
    )
    return Cluster(centroid, members, k, primary_type(members))


def primary_type(members: Sequence[ClusterMember]) -> str:
    """Most frequent move type; a count tie goes to the type seen nearest the centroid."""
    if not members:
        raise DomainError("primary type of an empty cluster")
    ordered = sorted(members, key=lambda m: m.rank)
    counts = Counter(m.move.move_type for m in ordered)
    # Counter preserves first-insertion order, i.e. best rank per type
    best = max(counts.values())
    return next(t for t, c in counts.items() if c == best)


def format_cluster_report(cluster: Cluster) -> str:
    lines = [
        f"Cluster Primary Type: {cluster.primary_type}",
        f"\tCluster Size: {cluster.k}",
        f"\tCentroid IO: {cluster.centroid.io.format()}",
        "",
    ]
    for m in cluster.members:
        lines += [f"Move: {m.move.name}", f"Move Type: {m.move.move_type}", ""]
    return "\n".join(lines) + "\n"
