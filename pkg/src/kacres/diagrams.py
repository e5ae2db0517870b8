"""Core diagram data model.

A weight diagram is the integer number line with ``n`` distinct marked
positions ("dots"), stored as a strictly increasing tuple.  It encodes a
dominant integral weight through the staircase shift: reading the dominant
coefficients in reverse and adding 0, 1, 2, ... produces the dot positions.
Everything downstream (the move calculus, the resolution recursion, the
generating functions) speaks this currency, so the operations here are kept
small, pure and heavily cross-checked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DiagramError, checked_int64

__all__ = [
    "WeightDiagram",
    "diagram_from_dominant",
    "dominant_from_diagram",
    "runs",
    "atypicality",
    "odd_run_count",
    "is_isolated",
    "is_left_isolated",
    "relative_length_at",
    "relative_length",
    "leq",
    "shift",
    "normal_form",
    "parse_diagram",
    "format_diagram",
    "render_ascii",
    "parse_runs",
]


@dataclass(frozen=True)
class WeightDiagram:
    """Strictly increasing tuple of dot positions; the engine's universal currency."""

    dots: tuple[int, ...]

    def __post_init__(self) -> None:
        dots = self.dots
        if not isinstance(dots, tuple):
            object.__setattr__(self, "dots", tuple(dots))
            dots = self.dots
        if len(dots) == 0:
            raise DiagramError("a weight diagram needs at least one dot")
        for a, b in zip(dots, dots[1:]):
            if a >= b:
                raise DiagramError(f"dots must be strictly increasing, got {list(dots)}")
        for a in dots:
            if not isinstance(a, int) or isinstance(a, bool):
                raise DiagramError(f"dot positions must be integers, got {a!r}")
        checked_int64(dots[0], "dot position")
        checked_int64(dots[-1], "dot position")

    @classmethod
    def of(cls, *dots: int) -> "WeightDiagram":
        return cls(tuple(dots))

    @property
    def n(self) -> int:
        return len(self.dots)

    def has_dot(self, p: int) -> bool:
        return p in self.dots

    def __str__(self) -> str:
        return format_diagram(self)


def diagram_from_dominant(coeffs: Sequence[int]) -> WeightDiagram:
    """Convert weakly decreasing dominant coefficients to dot positions.

    The k-th dot (0-based, left to right) is ``coeffs[n-1-k] + k``; weak
    decrease of the coefficients makes the result strictly increasing.
    """
    coeffs = tuple(coeffs)
    if len(coeffs) == 0:
        raise DiagramError("a dominant weight needs at least one coefficient")
    for a, b in zip(coeffs, coeffs[1:]):
        if a < b:
            raise DiagramError(f"coefficients must be weakly decreasing, got {list(coeffs)}")
    n = len(coeffs)
    return WeightDiagram(tuple(coeffs[n - 1 - k] + k for k in range(n)))


def dominant_from_diagram(d: WeightDiagram) -> tuple[int, ...]:
    """Exact inverse of :func:`diagram_from_dominant`."""
    n = d.n
    return tuple(d.dots[n - 1 - i] - (n - 1 - i) for i in range(n))


def _blocks(d: WeightDiagram) -> list[int]:
    """Sizes of maximal consecutive blocks, left to right."""
    sizes = [1]
    for a, b in zip(d.dots, d.dots[1:]):
        if b == a + 1:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sizes


def runs(d: WeightDiagram) -> tuple[int, ...]:
    """Run sizes (maximal consecutive dot blocks), listed right to left."""
    return tuple(reversed(_blocks(d)))


def atypicality(d: WeightDiagram) -> int:
    """Number of adjacent dot pairs; zero means typical."""
    return d.n - len(_blocks(d))


def odd_run_count(d: WeightDiagram) -> int:
    return sum(1 for size in _blocks(d) if size % 2 == 1)


def _require_dot(d: WeightDiagram, p: int) -> None:
    if not d.has_dot(p):
        raise DiagramError(f"{p} is not a dot of {format_diagram(d)}")


def is_isolated(d: WeightDiagram, p: int) -> bool:
    """True when neither neighbor position of the dot ``p`` carries a dot."""
    _require_dot(d, p)
    return not d.has_dot(p - 1) and not d.has_dot(p + 1)


def is_left_isolated(d: WeightDiagram, p: int) -> bool:
    """True when the position left of the dot ``p`` carries no dot."""
    _require_dot(d, p)
    return not d.has_dot(p - 1)


def _require_same_size(lam: WeightDiagram, mu: WeightDiagram) -> None:
    if lam.n != mu.n:
        raise DiagramError(
            f"diagram size mismatch: {format_diagram(lam)} has {lam.n} dots, "
            f"{format_diagram(mu)} has {mu.n}"
        )


def relative_length_at(lam: WeightDiagram, mu: WeightDiagram, t: int) -> int:
    """Count of ``lam`` dots at most ``t`` minus count of ``mu`` dots at most ``t``."""
    _require_same_size(lam, mu)
    return sum(1 for a in lam.dots if a <= t) - sum(1 for b in mu.dots if b <= t)


def relative_length(lam: WeightDiagram, mu: WeightDiagram) -> int:
    """Total leftward displacement from ``mu`` to ``lam``.

    Summing :func:`relative_length_at` over every position telescopes to the
    difference of coordinate sums; both formulas are kept (this one here, the
    per-position one above) and property-tested against each other.
    """
    _require_same_size(lam, mu)
    return sum(mu.dots) - sum(lam.dots)


def leq(mu: WeightDiagram, lam: WeightDiagram) -> bool:
    """Partial order: true when every sorted coordinate of ``lam`` is <= ``mu``'s."""
    _require_same_size(lam, mu)
    return all(a <= b for a, b in zip(lam.dots, mu.dots))


def shift(d: WeightDiagram, c: int) -> WeightDiagram:
    """Translate every dot by ``c`` (checked against the 64-bit contract)."""
    return WeightDiagram(tuple(checked_int64(a + c, "shifted dot") for a in d.dots))


def normal_form(d: WeightDiagram) -> tuple[WeightDiagram, int]:
    """Translate so the minimum dot is 0; returns (normal form, offset).

    ``shift(normal, offset)`` recovers ``d``.  Every operation in the engine is
    translation-equivariant, so this collapses the memo space.
    """
    offset = d.dots[0]
    return shift(d, -offset), offset


_DIAGRAM_RE = re.compile(r"\A\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*\Z")


def parse_diagram(text: str) -> WeightDiagram:
    """Parse the bracket format ``[a1,a2,...,an]`` (ascending integers)."""
    m = _DIAGRAM_RE.match(text)
    if m is None:
        raise DiagramError(f"cannot parse diagram {text!r}; expected e.g. [-1,0,2]")
    dots = tuple(int(part) for part in m.group(1).split(","))
    return WeightDiagram(dots)


def format_diagram(d: WeightDiagram) -> str:
    return "[" + ",".join(str(a) for a in d.dots) + "]"


def render_ascii(d: WeightDiagram) -> str:
    """Two-line rendering: an index ruler over a row of '.' ticks and 'o' dots."""
    lo, hi = d.dots[0] - 1, d.dots[-1] + 1
    width = max(len(str(p)) for p in (lo, hi))
    ruler = " ".join(str(p).rjust(width) for p in range(lo, hi + 1))
    row = " ".join(("o" if d.has_dot(p) else ".").rjust(width) for p in range(lo, hi + 1))
    return ruler + "\n" + row


def parse_runs(text: str) -> tuple[int, ...]:
    """Parse a comma-separated composition such as ``"4,4"`` (positive parts)."""
    parts: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not re.fullmatch(r"\d+", chunk or ""):
            raise DiagramError(f"cannot parse run sizes {text!r}; expected e.g. 2,1,1")
        part = int(chunk)
        if part < 1:
            raise DiagramError(f"run sizes must be positive, got {part}")
        parts.append(part)
    return tuple(parts)


def validate_runs(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate an already-parsed composition (every part a positive integer)."""
    out = tuple(parts)
    if len(out) == 0:
        raise DiagramError("a run composition needs at least one part")
    for part in out:
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise DiagramError(f"run sizes must be positive integers, got {part!r}")
    return out
