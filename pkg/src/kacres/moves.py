"""Local rewrite moves on dot-matching functions between weight diagrams.

A matching sends every dot of its source diagram to a dot of its target,
never rightward.  Three local rewrites act on matchings:

* ``Move1`` slides a fixed dot (present in both diagrams, matched to itself)
  one site right in both diagrams.
* ``Move2`` slides a source dot right onto an occupied target column, kicking
  the displaced target dot two sites left and rewiring the two arrows.
* ``Move3`` slides an isolated adjacent source pair one site right, leaving
  the target alone.

Every application checks the move's site pattern (raising
:class:`PreconditionError` with the failing pattern named) and then asserts
the bookkeeping deltas - displacement and crossing change - that each move
must produce; a mismatch means the implementation itself is broken and raises
:class:`InternalInvariantError`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable, Sequence

from .diagrams import (
    WeightDiagram,
    atypicality,
    format_diagram,
    leq,
    relative_length,
)
from .errors import DiagramError, InternalInvariantError, PreconditionError


class MoveKind(Enum):
    """Wire identifiers for the three rewrites; the values are frozen."""

    MOVE1 = "Move1"
    MOVE2 = "Move2"
    MOVE3 = "Move3"


@dataclass(frozen=True)
class MoveRecord:
    """One rewrite step: the kind, its site ``j``, and (``Move2`` only) ``k``."""

    kind: MoveKind
    j: int
    k: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.kind, MoveKind):
            raise DiagramError(f"move kind must be a MoveKind, got {self.kind!r}")
        if not isinstance(self.j, int) or isinstance(self.j, bool):
            raise DiagramError(f"move site must be an integer, got {self.j!r}")
        if self.kind is MoveKind.MOVE2:
            if not isinstance(self.k, int) or isinstance(self.k, bool):
                raise DiagramError("Move2 records need an integer second site k")
        elif self.k is not None:
            raise DiagramError(f"{self.kind.value} records take no second site")


@dataclass(frozen=True)
class AllowableFunction:
    """A dot matching with the trace of moves that built it.

    ``pairing[t]`` is the image of the ``t``-th source dot (in increasing
    order).  The constructor enforces that the images are exactly the target
    dots, that no dot moves right, and hence that the target lies below the
    source in the dominance order.  Total displacement being even is *not*
    required here - intermediate rewrite states may be lopsided - it is
    checked where a degree is actually taken.
    """

    source: WeightDiagram
    target: WeightDiagram
    pairing: tuple[int, ...]
    trace: tuple[MoveRecord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairing", tuple(self.pairing))
        object.__setattr__(self, "trace", tuple(self.trace))
        if len(self.pairing) != self.source.n:
            raise DiagramError(
                f"pairing has {len(self.pairing)} entries for "
                f"{self.source.n} source dots"
            )
        if tuple(sorted(self.pairing)) != self.target.dots:
            raise DiagramError(
                f"pairing values {self.pairing} are not the dots of "
                f"{format_diagram(self.target)}"
            )
        for a, fa in zip(self.source.dots, self.pairing):
            if fa > a:
                raise DiagramError(
                    f"dot {a} may not map rightward to {fa} "
                    f"({format_diagram(self.source)} -> {format_diagram(self.target)})"
                )
        if not leq(self.source, self.target):
            raise DiagramError(
                f"target {format_diagram(self.target)} does not lie below "
                f"source {format_diagram(self.source)}"
            )
        for rec in self.trace:
            if not isinstance(rec, MoveRecord):
                raise DiagramError(f"trace entries must be MoveRecords, got {rec!r}")

    @property
    def n(self) -> int:
        return self.source.n

    def image_of(self, a: int) -> int:
        """Image of the source dot at ``a``."""
        try:
            return self.pairing[self.source.dots.index(a)]
        except ValueError:
            raise DiagramError(
                f"{format_diagram(self.source)} has no dot at {a}"
            ) from None

    def preimage_of(self, b: int) -> int:
        """Source dot mapping to the target dot at ``b``."""
        try:
            return self.source.dots[self.pairing.index(b)]
        except ValueError:
            raise DiagramError(
                f"no source dot maps to {b} in {self.pairing}"
            ) from None

    def as_mapping(self) -> dict[int, int]:
        return dict(zip(self.source.dots, self.pairing))

    def without_trace(self) -> "AllowableFunction":
        return replace(self, trace=())

    def __str__(self) -> str:
        arrows = ", ".join(
            f"{a}->{fa}" for a, fa in zip(self.source.dots, self.pairing)
        )
        return f"{{{arrows}}}"


def identity_function(d: WeightDiagram) -> AllowableFunction:
    return AllowableFunction(source=d, target=d, pairing=d.dots)


def shift_function(f: AllowableFunction, c: int) -> AllowableFunction:
    """Translate a matching (diagrams, images and trace sites) by ``c``."""
    from .diagrams import shift

    if c == 0:
        return f
    return AllowableFunction(
        source=shift(f.source, c),
        target=shift(f.target, c),
        pairing=tuple(v + c for v in f.pairing),
        trace=tuple(
            MoveRecord(r.kind, r.j + c, None if r.k is None else r.k + c)
            for r in f.trace
        ),
    )


# ---------------------------------------------------------------------------
# crossing number


def count_inversions(values: Sequence[int]) -> int:
    """Quadratic inversion count; the reference implementation."""
    total = 0
    for t, a in enumerate(values):
        for b in values[t + 1 :]:
            if a > b:
                total += 1
    return total


def count_inversions_merge(values: Sequence[int]) -> int:
    """Merge-sort inversion count; kept as an independent cross-check."""

    def recurse(vals: list[int]) -> tuple[list[int], int]:
        if len(vals) <= 1:
            return vals, 0
        mid = len(vals) // 2
        left, nl = recurse(vals[:mid])
        right, nr = recurse(vals[mid:])
        merged: list[int] = []
        count = nl + nr
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                # every remaining left element jumps over right[j]
                count += len(left) - i
                merged.append(right[j])
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return recurse(list(values))[1]


def crossing_count(f: AllowableFunction) -> int:
    """Number of arrow crossings when the matching is drawn between two rows."""
    return count_inversions(f.pairing)


def degree(f: AllowableFunction) -> int:
    """Half the total displacement minus the crossing number."""
    ell = relative_length(f.target, f.source)
    if ell % 2:
        raise DiagramError(
            f"displacement {ell} is odd for {format_diagram(f.source)} -> "
            f"{format_diagram(f.target)}; no degree is defined"
        )
    return ell // 2 - crossing_count(f)


# ---------------------------------------------------------------------------
# forward moves


def _rebuild(
    mapping: dict[int, int], trace: tuple[MoveRecord, ...]
) -> AllowableFunction:
    src = tuple(sorted(mapping))
    tgt = tuple(sorted(mapping.values()))
    return AllowableFunction(
        source=WeightDiagram(src),
        target=WeightDiagram(tgt),
        pairing=tuple(mapping[a] for a in src),
        trace=trace,
    )


def _fail(rec: MoveRecord, f: AllowableFunction, pattern: str) -> None:
    raise PreconditionError(
        f"{rec.kind.value} at j={rec.j}"
        + (f", k={rec.k}" if rec.k is not None else "")
        + f": {pattern} (source {format_diagram(f.source)}, "
        f"target {format_diagram(f.target)}, pairing {f.pairing})"
    )


def _apply_move1(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j = rec.j
    for name, diag in (("source", f.source), ("target", f.target)):
        if not diag.has_dot(j - 1):
            _fail(rec, f, f"{name} needs a dot at {j - 1}")
        if diag.has_dot(j - 2):
            _fail(rec, f, f"{name} must be empty at {j - 2}")
        if diag.has_dot(j):
            _fail(rec, f, f"{name} must be empty at {j}")
    mapping = f.as_mapping()
    if mapping[j - 1] != j - 1:
        _fail(rec, f, f"the dot at {j - 1} must be matched to itself")
    del mapping[j - 1]
    mapping[j] = j
    return mapping


def _apply_move2(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j, k = rec.j, rec.k
    assert k is not None
    if not f.source.has_dot(j - 1):
        _fail(rec, f, f"source needs a dot at {j - 1}")
    if f.source.has_dot(j - 2):
        _fail(rec, f, f"source must be empty at {j - 2}")
    if f.source.has_dot(j):
        _fail(rec, f, f"source must be empty at {j}")
    if not f.target.has_dot(j - 1):
        _fail(rec, f, f"target needs a dot at {j - 1}")
    if not f.target.has_dot(j):
        _fail(rec, f, f"target needs a dot at {j}")
    if f.target.has_dot(j - 2):
        _fail(rec, f, f"target must be empty at {j - 2}")
    mapping = f.as_mapping()
    if mapping[j - 1] != j - 1:
        _fail(rec, f, f"the dot at {j - 1} must be matched to itself")
    if not f.source.has_dot(k):
        _fail(rec, f, f"source needs a dot at k={k}")
    if k <= j:
        _fail(rec, f, f"k={k} must lie right of j={j}")
    if mapping[k] != j:
        _fail(rec, f, f"the dot at k={k} must be matched to {j}")
    del mapping[j - 1]
    mapping[j] = j
    mapping[k] = j - 2
    return mapping


def _apply_move3(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j = rec.j
    if not (f.source.has_dot(j - 1) and f.source.has_dot(j)):
        _fail(rec, f, f"source needs the adjacent pair {j - 1},{j}")
    if f.source.has_dot(j - 2):
        _fail(rec, f, f"source must be empty at {j - 2}")
    if f.source.has_dot(j + 1):
        _fail(rec, f, f"source must be empty at {j + 1}")
    mapping = f.as_mapping()
    if mapping[j - 1] >= mapping[j]:
        _fail(rec, f, f"images of the pair {j - 1},{j} must increase")
    lower = mapping.pop(j - 1)
    upper = mapping.pop(j)
    mapping[j] = lower
    mapping[j + 1] = upper
    return mapping


_APPLIERS: dict[MoveKind, Callable[[AllowableFunction, MoveRecord], dict[int, int]]] = {
    MoveKind.MOVE1: _apply_move1,
    MoveKind.MOVE2: _apply_move2,
    MoveKind.MOVE3: _apply_move3,
}

# (displacement delta, crossing delta) that each rewrite must produce.
_EXPECTED_DELTAS = {
    MoveKind.MOVE1: (0, 0),
    MoveKind.MOVE2: (2, 1),
    MoveKind.MOVE3: (2, 0),
}


def apply_move(f: AllowableFunction, rec: MoveRecord) -> AllowableFunction:
    """Apply one rewrite, appending it to the trace.

    Raises :class:`PreconditionError` when the site pattern is not met and
    :class:`InternalInvariantError` if the rewrite fails to produce its
    contractual displacement/crossing deltas.
    """
    mapping = _APPLIERS[rec.kind](f, rec)
    try:
        out = _rebuild(mapping, f.trace + (rec,))
    except DiagramError as exc:
        raise InternalInvariantError(
            f"applying {rec} to {f} produced an invalid matching: {exc}"
        ) from exc
    d_ell = relative_length(out.target, out.source) - relative_length(
        f.target, f.source
    )
    d_cross = crossing_count(out) - crossing_count(f)
    if (d_ell, d_cross) != _EXPECTED_DELTAS[rec.kind]:
        raise InternalInvariantError(
            f"{rec.kind.value} at j={rec.j} changed (displacement, crossings) "
            f"by {(d_ell, d_cross)}, expected {_EXPECTED_DELTAS[rec.kind]}"
        )
    return out


_KIND_ORDER = {MoveKind.MOVE1: 0, MoveKind.MOVE2: 1, MoveKind.MOVE3: 2}


def applicable_moves(f: AllowableFunction) -> list[MoveRecord]:
    """All rewrites whose site patterns match ``f``, sorted by (j, kind)."""
    found: list[MoveRecord] = []
    candidates: list[MoveRecord] = []
    for a in f.source.dots:
        j = a + 1
        candidates.append(MoveRecord(MoveKind.MOVE1, j=j))
        if f.target.has_dot(j) and j in f.pairing:
            candidates.append(MoveRecord(MoveKind.MOVE2, j=j, k=f.preimage_of(j)))
        candidates.append(MoveRecord(MoveKind.MOVE3, j=a))
    for rec in candidates:
        try:
            _APPLIERS[rec.kind](f, rec)
        except PreconditionError:
            continue
        if rec not in found:
            found.append(rec)
    found.sort(key=lambda r: (r.j, _KIND_ORDER[r.kind], r.k or 0))
    return found


# ---------------------------------------------------------------------------
# inverse moves (exact un-application, used for replay and the search)


def _unapply_move1(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j = rec.j
    for name, diag in (("source", f.source), ("target", f.target)):
        if not diag.has_dot(j):
            _fail(rec, f, f"undo: {name} needs a dot at {j}")
        if diag.has_dot(j - 1):
            _fail(rec, f, f"undo: {name} must be empty at {j - 1}")
        if diag.has_dot(j - 2):
            _fail(rec, f, f"undo: {name} must be empty at {j - 2}")
    mapping = f.as_mapping()
    if mapping[j] != j:
        _fail(rec, f, f"undo: the dot at {j} must be matched to itself")
    del mapping[j]
    mapping[j - 1] = j - 1
    return mapping


def _unapply_move2(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j, k = rec.j, rec.k
    assert k is not None
    if not f.source.has_dot(j):
        _fail(rec, f, f"undo: source needs a dot at {j}")
    if f.source.has_dot(j - 1) or f.source.has_dot(j - 2):
        _fail(rec, f, f"undo: source must be empty at {j - 1} and {j - 2}")
    if not f.target.has_dot(j):
        _fail(rec, f, f"undo: target needs a dot at {j}")
    if not f.target.has_dot(j - 2):
        _fail(rec, f, f"undo: target needs a dot at {j - 2}")
    if f.target.has_dot(j - 1):
        _fail(rec, f, f"undo: target must be empty at {j - 1}")
    mapping = f.as_mapping()
    if mapping[j] != j:
        _fail(rec, f, f"undo: the dot at {j} must be matched to itself")
    if not f.source.has_dot(k) or k <= j:
        _fail(rec, f, f"undo: k={k} must be a source dot right of j={j}")
    if mapping[k] != j - 2:
        _fail(rec, f, f"undo: the dot at k={k} must be matched to {j - 2}")
    del mapping[j]
    mapping[j - 1] = j - 1
    mapping[k] = j
    return mapping


def _unapply_move3(f: AllowableFunction, rec: MoveRecord) -> dict[int, int]:
    j = rec.j
    if not (f.source.has_dot(j) and f.source.has_dot(j + 1)):
        _fail(rec, f, f"undo: source needs the adjacent pair {j},{j + 1}")
    if f.source.has_dot(j - 1) or f.source.has_dot(j - 2):
        _fail(rec, f, f"undo: source must be empty at {j - 1} and {j - 2}")
    mapping = f.as_mapping()
    if mapping[j] >= mapping[j + 1]:
        _fail(rec, f, f"undo: images of the pair {j},{j + 1} must increase")
    lower = mapping.pop(j)
    upper = mapping.pop(j + 1)
    mapping[j - 1] = lower
    mapping[j] = upper
    return mapping


_UNAPPLIERS = {
    MoveKind.MOVE1: _unapply_move1,
    MoveKind.MOVE2: _unapply_move2,
    MoveKind.MOVE3: _unapply_move3,
}


def unapply_move(f: AllowableFunction, rec: MoveRecord) -> AllowableFunction:
    """Exact inverse of :func:`apply_move` (the trace is left empty)."""
    mapping = _UNAPPLIERS[rec.kind](f, rec)
    return _rebuild(mapping, ())


def replay_moves(
    start: WeightDiagram, records: Iterable[MoveRecord]
) -> AllowableFunction:
    """Fold the records over the identity matching on ``start``."""
    f = identity_function(start)
    for rec in records:
        f = apply_move(f, rec)
    return f


def trace_start(f: AllowableFunction, records: Sequence[MoveRecord]) -> WeightDiagram:
    """Walk the records backward from ``f`` to the diagram they started on.

    The records must end in an identity matching; anything else means they do
    not describe ``f`` and raises :class:`DiagramError`.
    """
    state = f.without_trace()
    for rec in reversed(records):
        try:
            state = unapply_move(state, rec)
        except (PreconditionError, DiagramError) as exc:
            raise DiagramError(f"records do not rewind {f}: {exc}") from exc
    if state.source != state.target or state.pairing != state.source.dots:
        raise DiagramError(
            f"rewinding the records left {state}, not an identity matching"
        )
    return state.source


# ---------------------------------------------------------------------------
# enumeration and the membership test


def enumerate_allowable(
    mu: WeightDiagram, max_degree: int
) -> dict[int, list[AllowableFunction]]:
    """All allowable matchings out of ``mu`` up to ``max_degree``, by degree.

    Degrees with no matchings are omitted.  Each matching carries the trace
    of rewrites that produced it, starting from an identity on a typical
    diagram.
    """
    from . import resolution

    res = resolution.resolve_with_functions(mu, max_degree)
    out: dict[int, list[AllowableFunction]] = {}
    for term in res.terms:
        assert term.functions is not None
        fns = [
            fn
            for lam in sorted(term.functions, key=lambda d: d.dots)
            for fn in term.functions[lam]
        ]
        if fns:
            out[term.degree] = fns
    return out


def is_allowable(f: AllowableFunction) -> bool:
    """Whether ``f`` occurs among the enumerated matchings at its degree."""
    ell = relative_length(f.target, f.source)
    if ell < 0 or ell % 2:
        return False
    deg = degree(f)
    if deg < 0:
        return False
    for g in enumerate_allowable(f.source, deg).get(deg, []):
        if g.target == f.target and g.pairing == f.pairing:
            return True
    return False


# ---------------------------------------------------------------------------
# certificate search


def _inverse_candidates(f: AllowableFunction) -> list[MoveRecord]:
    mapping = f.as_mapping()
    preimage = {v: a for a, v in mapping.items()}
    recs: list[MoveRecord] = []
    # Budget-consuming undos first: they shrink the displacement.
    for a in f.source.dots:
        if f.source.has_dot(a + 1):
            recs.append(MoveRecord(MoveKind.MOVE3, j=a))
        if mapping[a] == a and f.target.has_dot(a - 2):
            k = preimage.get(a - 2)
            if k is not None and k > a:
                recs.append(MoveRecord(MoveKind.MOVE2, j=a, k=k))
    for a in f.source.dots:
        if mapping[a] == a:
            recs.append(MoveRecord(MoveKind.MOVE1, j=a))
    return recs


def reduce_to_identity(
    f: AllowableFunction,
    *,
    margin: int | None = None,
    node_limit: int = 500_000,
) -> list[MoveRecord] | None:
    """Search for a rewrite sequence building ``f`` from a typical identity.

    Returns the records in forward (replay) order, or ``None`` when no
    sequence was found inside the search window - which is evidence, not
    proof, that ``f`` is not allowable.  The window keeps every dot within
    ``margin`` of the coordinates appearing in ``f`` (default twice the dot
    count).
    """
    ell = relative_length(f.target, f.source)
    if ell < 0 or ell % 2:
        return None
    if margin is None:
        margin = 2 * f.source.n
    coords = f.source.dots + f.target.dots
    lo, hi = min(coords) - margin, max(coords) + margin
    visited: set[tuple] = set()
    nodes = 0

    def is_goal(state: AllowableFunction) -> bool:
        return (
            state.source == state.target
            and state.pairing == state.source.dots
            and atypicality(state.source) == 0
        )

    def dfs(state: AllowableFunction, budget: int) -> list[MoveRecord] | None:
        nonlocal nodes
        if is_goal(state):
            return []
        key = (state.source.dots, state.pairing)
        if key in visited:
            return None
        visited.add(key)
        nodes += 1
        if nodes > node_limit:
            return None
        for rec in _inverse_candidates(state):
            cost = 0 if rec.kind is MoveKind.MOVE1 else 1
            if cost > budget:
                continue
            try:
                prev = unapply_move(state, rec)
            except (PreconditionError, DiagramError):
                continue
            if prev.source.dots[0] < lo or prev.target.dots[0] < lo:
                continue
            if prev.source.dots[-1] > hi or prev.target.dots[-1] > hi:
                continue
            tail = dfs(prev, budget - cost)
            if tail is not None:
                tail.append(rec)
                return tail
        return None

    found = dfs(f.without_trace(), ell // 2)
    if found is None:
        return None
    start = trace_start(f, found)
    if replay_moves(start, found).without_trace() != f.without_trace():
        raise InternalInvariantError(
            f"certificate for {f} does not replay to it"
        )
    return found
