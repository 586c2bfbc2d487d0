"""The five-dimensional orientation space, its A-E bands, and band sampling.

Values live in [-1, 1] and are stored on an 8-decimal grid. Bands are
half-open ``[lower, upper)`` for A-D and closed ``[0.6, 1.0]`` for E, so
every value in range has exactly one class.
"""
from __future__ import annotations

import math
from enum import Enum, IntEnum
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError

DECIMALS = 8
SCALE = 10**DECIMALS
N_DIMS = 5


class IODimension(IntEnum):
    WARMTH = 0
    AFFINITY = 1
    LEGITIMACY = 2
    DOMINANCE = 3
    COMPETENCE = 4

    @property
    def label(self) -> str:
        return self.name.capitalize()


class IOClass(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"

    def __str__(self) -> str:
        return self.value


class IOClassBounds(NamedTuple):
    lower: float
    upper: float
    closed_upper: bool = False

    def __contains__(self, value: float) -> bool:
        if self.closed_upper:
            return self.lower <= value <= self.upper
        return self.lower <= value < self.upper


_BOUNDS = {
    IOClass.A: IOClassBounds(-1.0, -0.6),
    IOClass.B: IOClassBounds(-0.6, -0.2),
    IOClass.C: IOClassBounds(-0.2, 0.2),
    IOClass.D: IOClassBounds(0.2, 0.6),
    IOClass.E: IOClassBounds(0.6, 1.0, closed_upper=True),
}

# Same bands on the integer grid (units of 1e-8), upper bound exclusive.
_GRID = {
    IOClass.A: (-100_000_000, -60_000_000),
    IOClass.B: (-60_000_000, -20_000_000),
    IOClass.C: (-20_000_000, 20_000_000),
    IOClass.D: (20_000_000, 60_000_000),
    IOClass.E: (60_000_000, 100_000_001),
}


def bounds_of(cls: IOClass | str) -> IOClassBounds:
    return _BOUNDS[IOClass(cls)]


def quantize(value: float) -> float:
    """Round half-even to the 8-decimal grid."""
    return round(float(value), DECIMALS)


def classify(value: float) -> IOClass:
    """Return the band containing ``value``.

    >>> classify(-0.64693745)
    <IOClass.A: 'A'>
    >>> classify(-0.6)
    <IOClass.B: 'B'>
    """
    value = float(value)
    if not -1.0 <= value <= 1.0:  # also rejects NaN
        raise DomainError(f"IO value {value!r} outside [-1, 1]")
    if value < -0.6:
        return IOClass.A
    if value < -0.2:
        return IOClass.B
    if value < 0.2:
        return IOClass.C
    if value < 0.6:
        return IOClass.D
    return IOClass.E


class IOVector(tuple):
    """An immutable point in IO space: five quantized values in [-1, 1].

    Construction validates length and range and rejects values that are not
    already on the 8-decimal grid unless ``quantize=True`` is passed.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[float], *, quantize: bool = False):
        vals = tuple(float(v) for v in values)
        if len(vals) != N_DIMS:
            raise DomainError(f"IO vector needs {N_DIMS} components, got {len(vals)}")
        if quantize:
            vals = tuple(round(v, DECIMALS) for v in vals)
        for v in vals:
            if not -1.0 <= v <= 1.0:
                raise DomainError(f"IO value {v!r} outside [-1, 1]")
            if round(v, DECIMALS) != v:
                raise DomainError(f"IO value {v!r} has more than {DECIMALS} decimals")
        return super().__new__(cls, vals)

    def __repr__(self) -> str:
        return f"IOVector([{', '.join(f'{v:.8f}' for v in self)}])"

    def format(self) -> str:
        return "[" + " ".join(f"{v:.8f}" for v in self) + "]"


class IOClassVector(tuple):
    __slots__ = ()

    def __new__(cls, classes: Iterable[IOClass | str]):
        vals = tuple(IOClass(str(c).strip().upper()) if not isinstance(c, IOClass) else c
                     for c in classes)
        if len(vals) != N_DIMS:
            raise DomainError(f"class vector needs {N_DIMS} letters, got {len(vals)}")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str) -> "IOClassVector":
        """Accept ``"ABCDE"`` or ``"A,B,C,D,E"``."""
        letters = [t for t in text.replace(",", " ").split()]
        if len(letters) == 1:
            letters = list(letters[0])
        try:
            return cls(letters)
        except ValueError as exc:
            raise DomainError(f"bad class vector {text!r}: {exc}") from None

    def __str__(self) -> str:
        return "".join(c.value for c in self)

    def __repr__(self) -> str:
        return f"IOClassVector({str(self)!r})"


def sample_value(cls: IOClass | str, rng) -> float:
    lo, hi = _GRID[IOClass(cls)]
    return int(rng.integers(lo, hi)) / SCALE


def sample_io(classes: Sequence[IOClass | str], rng) -> IOVector:
    """Draw one value per dimension uniformly from its band.

    Draws land directly on the 8-decimal grid, one ``rng.integers`` call per
    dimension in Warmth-to-Competence order, so every result classifies back
    to ``classes`` without rejection.
    """
    classes = IOClassVector(classes)
    return IOVector(sample_value(c, rng) for c in classes)


def classify_vector(v: Sequence[float]) -> IOClassVector:
    return IOClassVector(classify(x) for x in v)


def parse_io(text: str) -> IOVector:
    """Parse five comma- or space-separated decimals into an IOVector."""
    parts = text.replace(",", " ").strip().strip("[]").split()
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise DomainError(f"bad IO vector {text!r}") from None
    if any(math.isnan(v) for v in vals):
        raise DomainError(f"bad IO vector {text!r}")
    return IOVector(vals, quantize=True)
