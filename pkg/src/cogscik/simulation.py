"""Sequential multi-actor engine.

Each tick, every actor (in configured order) clusters the moves nearest its
centroid, picks one member by policy, and jumps its centroid to that move's
IO vector. Actors draw from their own PCG64 substreams and, with
``exclude_used``, only ever exclude their own past moves.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import Catalog, Move
from .cluster import Centroid, Cluster, build_cluster, format_cluster_report
from .errors import DomainError, ExhaustionError
from .io_space import IOClassVector, IOVector, parse_io, sample_io
from .kernel import WeightVector
from .seeding import check_seed, substream


class Policy:
    name = "policy"

    def choose(self, cluster: Cluster, rng, tick: int) -> int:
        """Return the 1-based rank of the chosen member."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}()"


class Nearest(Policy):
    name = "nearest"

    def choose(self, cluster, rng, tick):
        return 1


class Random(Policy):
    """Uniform over members; exactly one draw per choice."""

    name = "random"

    def choose(self, cluster, rng, tick):
        return int(rng.integers(cluster.k)) + 1


class Scripted(Policy):
    """Replay a fixed rank sequence, one entry per tick (shared by all actors)."""

    name = "scripted"

    def __init__(self, ranks: Sequence[int]):
        self.ranks = tuple(int(r) for r in ranks)

    def choose(self, cluster, rng, tick):
        if tick > len(self.ranks):
            raise DomainError(f"scripted policy has no rank for tick {tick}")
        rank = self.ranks[tick - 1]
        if not 1 <= rank <= cluster.k:
            raise DomainError(f"scripted rank {rank} outside 1..{cluster.k} at tick {tick}")
        return rank

    def __repr__(self):
        return f"Scripted({list(self.ranks)})"


POLICIES = {"nearest": Nearest, "random": Random}


@dataclass
class Actor:
    name: str
    centroid: Centroid
    initial_classes: IOClassVector | None = None
    seed: int | None = None  # overrides the derived per-actor substream

    @classmethod
    def from_classes(cls, name: str, classes, rng, seed: int | None = None) -> "Actor":
        classes = IOClassVector(classes)
        return cls(name, Centroid(sample_io(classes, rng), name), classes, seed)

    @classmethod
    def from_io(cls, name: str, io, seed: int | None = None) -> "Actor":
        return cls(name, Centroid(IOVector(io, quantize=True), name), None, seed)


@dataclass(frozen=True)
class SimulationConfig:
    k: int = 10
    n_ticks: int = 1
    seed: int = 0
    weights: WeightVector = field(default_factory=WeightVector)
    exclude_used: bool = False
    policy: Policy = field(default_factory=Nearest)

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.n_ticks < 0:
            raise DomainError(f"n_ticks must be >= 0, got {self.n_ticks}")
        check_seed(self.seed)
        object.__setattr__(self, "weights", WeightVector(self.weights))

    def check(self, catalog: Catalog) -> None:
        limit = len(catalog) - (self.n_ticks - 1 if self.exclude_used else 0)
        if self.k > limit:
            raise DomainError(
                f"k={self.k} too large for {len(catalog)} moves over {self.n_ticks} ticks")

    def echo(self) -> str:
        return (f"seed={self.seed} k={self.k} ticks={self.n_ticks} policy={self.policy.name} "
                f"exclude_used={'true' if self.exclude_used else 'false'} weights={self.weights}")


@dataclass(frozen=True)
class TickRecord:
    tick: int
    actor: str
    cluster: Cluster
    selected: Move
    new_centroid: Centroid


@dataclass
class Trace:
    records: list[TickRecord]
    config: SimulationConfig
    catalog_seed: int

    def format(self) -> str:
        out = [f"# cogscik trace catalog_seed={self.catalog_seed} {self.config.echo()}\n"]
        for rec in self.records:
            out.append(f"Tick {rec.tick} Actor {rec.actor}\n")
            out.append(format_cluster_report(rec.cluster))
            out.append(f"Selected: {rec.selected.name}\n\n")
        return "".join(out)


def actor_rng(actor: Actor, index: int, config: SimulationConfig):
    if actor.seed is not None:
        return substream(actor.seed, "policy", 0)
    return substream(config.seed, "policy", index)


def step(actor: Actor, catalog: Catalog, config: SimulationConfig, used: set[str],
         rng, tick: int = 1) -> TickRecord:
    """Advance one actor by one tick, mutating ``actor`` and ``used``."""
    if config.exclude_used and used:
        keep = [i for i, m in enumerate(catalog.moves) if m.name not in used]
        pool = catalog.subset(keep)
    else:
        pool = catalog
    if len(pool) < config.k:
        raise ExhaustionError(tick, actor.name, len(pool), config.k)
    cluster = build_cluster(actor.centroid, pool, config.k, config.weights)
    rank = config.policy.choose(cluster, rng, tick)
    selected = cluster.members[rank - 1].move
    new_centroid = Centroid(selected.io, selected.name)
    actor.centroid = new_centroid
    if config.exclude_used:
        used.add(selected.name)
    return TickRecord(tick, actor.name, cluster, selected, new_centroid)


def run(actors: Sequence[Actor], catalog: Catalog, config: SimulationConfig) -> Trace:
    if not actors:
        raise DomainError("simulation needs at least one actor")
    names = [a.name for a in actors]
    if len(set(names)) != len(names):
        raise DomainError("actor names must be unique")
    if config.k > len(catalog):
        raise DomainError(f"k={config.k} exceeds catalog size {len(catalog)}")
    rngs = [actor_rng(a, i, config) for i, a in enumerate(actors)]
    used: list[set[str]] = [set() for _ in actors]
    records = []
    for tick in range(1, config.n_ticks + 1):
        for i, actor in enumerate(actors):
            records.append(step(actor, catalog, config, used[i], rngs[i], tick))
    return Trace(records, config, catalog.source_seed)


def parse_actors(text: str, seed: int = 0) -> list[Actor]:
    """Read actors from INI-style text, one section per actor::

        [state-a]
        classes = ABCDE

        [state-b]
        io = -0.5, 0.1, 0.0, 0.3, 0.9
        seed = 11

    Class-based actors sample their starting IO from a substream keyed by
    ``seed`` and their position in the file.
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise DomainError(f"bad actor file: {exc}") from None
    actors = []
    for i, name in enumerate(parser.sections()):
        sec = parser[name]
        aseed = sec.getint("seed") if "seed" in sec else None
        if ("classes" in sec) == ("io" in sec):
            raise DomainError(f"actor {name!r} needs exactly one of 'classes' or 'io'")
        if "classes" in sec:
            rng = substream(seed, "actor-io", i)
            actors.append(Actor.from_classes(name, IOClassVector.parse(sec["classes"]), rng, aseed))
        else:
            actors.append(Actor.from_io(name, parse_io(sec["io"]), aseed))
    if not actors:
        raise DomainError("actor file defines no actors")
    return actors

