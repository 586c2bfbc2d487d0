"""Move catalogs: CSV parsing, instantiation into concrete IO vectors, and a
synthetic generator standing in for a CAMEO-derived move bank.

Catalog files are UTF-8 CSV with the header::

    name,type,warmth,affinity,legitimacy,dominance,competence

and one uppercase class letter per IO column.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CatalogParseError, DomainError, InstantiationError
from .io_space import IOClass, IOClassVector, IOVector, classify_vector, sample_io

HEADER = ("name", "type", "warmth", "affinity", "legitimacy", "dominance", "competence")
MAX_RESAMPLES = 100

# CAMEO-style event types used by the synthetic generator.
MOVE_TYPES = (
    "Make a public statement",
    "Appeal",
    "Express intent to cooperate",
    "Consult",
    "Engage in diplomatic cooperation",
    "Engage in material cooperation",
    "Provide aid",
    "Yield",
    "Investigate",
    "Demand",
    "Disapprove",
    "Reject",
    "Threaten",
    "Protest",
    "Exhibit force posture",
    "Reduce relations",
    "Coerce",
    "Assault",
    "Fight",
    "Control information",
    "Refuse to build infrastructure",
)


@dataclass(frozen=True)
class MoveSpec:
    name: str
    move_type: str
    classes: IOClassVector


@dataclass(frozen=True)
class Move:
    spec: MoveSpec
    io: IOVector

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def move_type(self) -> str:
        return self.spec.move_type


@dataclass(frozen=True)
class Catalog:
    moves: tuple[Move, ...]
    source_seed: int
    points: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = np.array([m.io for m in self.moves], dtype=np.float64).reshape(-1, 5)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __getitem__(self, i):
        return self.moves[i]

    def subset(self, indices: Iterable[int]) -> "Catalog":
        return Catalog(tuple(self.moves[i] for i in indices), self.source_seed)


def read_rows(text: str) -> list[MoveSpec]:
    """Parse rows without the duplicate-name check.

    Row numbers in errors count the header as row 1.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CatalogParseError("missing header", row=1) from None
    if tuple(h.strip() for h in header) != HEADER:
        raise CatalogParseError(f"header must be {','.join(HEADER)!r}", row=1)
    specs = []
    for rownum, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(HEADER):
            raise CatalogParseError(f"expected {len(HEADER)} columns, got {len(row)}", row=rownum)
        name, move_type = row[0].strip(), row[1].strip()
        if not name or not move_type:
            raise CatalogParseError("name and type must be non-empty", row=rownum)
        letters = [c.strip() for c in row[2:]]
        bad = [c for c in letters if c not in IOClass.__members__]
        if bad:
            raise CatalogParseError(f"unknown class letter {bad[0]!r}", row=rownum)
        specs.append(MoveSpec(name, move_type, IOClassVector(letters)))
    return specs


def duplicate_names(specs: Sequence[MoveSpec]) -> list[str]:
    seen, dups = set(), []
    for s in specs:
        if s.name in seen and s.name not in dups:
            dups.append(s.name)
        seen.add(s.name)
    return dups


def parse_catalog(text: str) -> list[MoveSpec]:
    specs = read_rows(text)
    seen = {}
    for rownum, s in enumerate(specs, start=2):
        if s.name in seen:
            raise CatalogParseError(
                f"duplicate name {s.name!r} (first at row {seen[s.name]})", row=rownum)
        seen[s.name] = rownum
    return specs


def serialize_catalog(specs: Iterable[MoveSpec]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for s in specs:
        writer.writerow([s.name, s.move_type, *(c.value for c in s.classes)])
    return buf.getvalue()


def load_catalog(path) -> list[MoveSpec]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_catalog(fh.read())


def instantiate_catalog(specs: Sequence[MoveSpec], rng, *, seed: int = -1,
                        unique: bool = True) -> Catalog:
    """Sample an IO vector for each spec in file order.

    An exact collision with an earlier move triggers a resample, at most
    ``MAX_RESAMPLES`` times. ``unique=False`` disables the check (test
    harnesses only).
    """
    moves, taken = [], set()
    for spec in specs:
        io_vec = sample_io(spec.classes, rng)
        if unique:
            tries = 0
            while io_vec in taken:
                if tries == MAX_RESAMPLES:
                    raise InstantiationError(
                        f"could not draw a unique IO vector for {spec.name!r}")
                io_vec = sample_io(spec.classes, rng)
                tries += 1
            taken.add(io_vec)
        moves.append(Move(spec, io_vec))
    return Catalog(tuple(moves), seed)


def moves_from_vectors(rows: Sequence[tuple[str, str, Sequence[float]]], seed: int = -1) -> Catalog:
    """Build a catalog from explicit ``(name, type, io)`` rows."""
    moves = []
    for name, move_type, vec in rows:
        v = IOVector(vec)
        moves.append(Move(MoveSpec(name, move_type, classify_vector(v)), v))
    return Catalog(tuple(moves), seed)


def generate_synthetic_catalog(n: int, rng) -> list[MoveSpec]:
    if n < 1:
        raise DomainError(f"catalog size must be >= 1, got {n}")
    width = max(4, len(str(n)))
    letters = list(IOClass)
    specs = []
    for i in range(1, n + 1):
        move_type = MOVE_TYPES[int(rng.integers(len(MOVE_TYPES)))]
        classes = IOClassVector(letters[int(rng.integers(5))] for _ in range(5))
        specs.append(MoveSpec(f"move-{i:0{width}d}", move_type, classes))
    return specs
