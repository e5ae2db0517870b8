"""Recursive construction of the projective term ladder over a weight diagram.

Each step looks at the leftmost adjacent dot pair whose left neighbour site is
free and either

* ``SPLIT``: recurse on two strictly smaller inputs - the diagram with the
  pair's left dot pulled one site left, and the diagram with the whole pair
  pulled left (the latter contributing one degree higher) - gluing the first
  branch back through the projective translation at the pair; or
* ``CARRY``: recurse once on the diagram with a single eligible dot further
  left pulled back, transporting every resulting summand through the
  projective translation at that dot; or
* ``TYPICAL``: stop - a typical diagram is its own ladder.

Results are memoized per translation class (minimum dot pinned to 0), keyed
so a deep run also answers all shallower requests.  A custom step chooser
bypasses the memo entirely: any offered choice yields the same multiset of
summands, but traces and intermediate work differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .diagrams import (
    WeightDiagram,
    atypicality,
    format_diagram,
    normal_form,
    shift,
)
from .errors import (
    DiagramError,
    InternalInvariantError,
    PreconditionError,
    checked_int64,
)
from .moves import (
    AllowableFunction,
    MoveKind,
    MoveRecord,
    apply_move,
    identity_function,
    shift_function,
)

Chooser = Callable[[WeightDiagram, list[tuple[int, int]]], tuple[int, int]]


# ---------------------------------------------------------------------------
# the two translation operations


def translate_projective(j: int, d: WeightDiagram) -> WeightDiagram:
    """Slide the dot at ``j - 1`` right, bouncing to ``j - 2`` if ``j`` is taken."""
    if not d.has_dot(j - 1):
        raise PreconditionError(
            f"projective translation at j={j}: needs a dot at {j - 1} "
            f"in {format_diagram(d)}"
        )
    if d.has_dot(j - 2):
        raise PreconditionError(
            f"projective translation at j={j}: site {j - 2} must be empty "
            f"in {format_diagram(d)}"
        )
    dots = set(d.dots)
    dots.remove(j - 1)
    dots.add(j - 2 if d.has_dot(j) else j)
    return WeightDiagram(tuple(sorted(dots)))


@dataclass(frozen=True)
class StandardImage:
    """Image of the standard translation: one diagram, or a (lower, upper) pair."""

    diagrams: tuple[WeightDiagram, ...]

    @property
    def is_single(self) -> bool:
        return len(self.diagrams) == 1


def translate_standard(j: int, d: WeightDiagram) -> StandardImage:
    """Fill the free site ``j`` from the dot at ``j - 1`` (or split with ``j + 1``)."""
    if not d.has_dot(j - 1):
        raise PreconditionError(
            f"standard translation at j={j}: needs a dot at {j - 1} "
            f"in {format_diagram(d)}"
        )
    if d.has_dot(j):
        raise PreconditionError(
            f"standard translation at j={j}: site {j} must be empty "
            f"in {format_diagram(d)}"
        )
    dots = set(d.dots)
    if not d.has_dot(j + 1):
        dots.remove(j - 1)
        dots.add(j)
        return StandardImage((WeightDiagram(tuple(sorted(dots))),))
    lower = set(dots)
    lower.remove(j + 1)
    lower.add(j)
    upper = set(dots)
    upper.remove(j - 1)
    upper.add(j)
    return StandardImage(
        (
            WeightDiagram(tuple(sorted(lower))),
            WeightDiagram(tuple(sorted(upper))),
        )
    )


# ---------------------------------------------------------------------------
# step planning


class StepCase(Enum):
    TYPICAL = "typical"
    SPLIT = "split"
    CARRY = "carry"


@dataclass(frozen=True)
class StepPlan:
    case: StepCase
    i: int | None = None
    j: int | None = None
    nu: WeightDiagram | None = None
    mu_prime: WeightDiagram | None = None


def _move_dot(d: WeightDiagram, src: int, dst: int) -> WeightDiagram:
    dots = set(d.dots)
    dots.remove(src)
    if dst in dots:
        raise InternalInvariantError(
            f"moving {src} -> {dst} collides in {format_diagram(d)}"
        )
    dots.add(dst)
    return WeightDiagram(tuple(sorted(dots)))


def _move_pair(d: WeightDiagram, i: int) -> WeightDiagram:
    """Both dots of the adjacent pair at ``i`` slide one site left together."""
    dots = set(d.dots)
    dots.remove(i)
    dots.remove(i + 1)
    if i - 1 in dots:
        raise InternalInvariantError(
            f"pair move at {i} collides in {format_diagram(d)}"
        )
    dots.add(i - 1)
    dots.add(i)
    return WeightDiagram(tuple(sorted(dots)))


def step_options(mu: WeightDiagram) -> list[tuple[int, int]]:
    """Every legal ``(i, j)`` step choice; empty exactly for typical diagrams.

    ``i`` indexes an adjacent dot pair with a free left neighbour; ``j == i``
    names the split there, ``j < i`` names a carry through an isolated dot
    with two free sites on its left and one on its right.
    """
    options: list[tuple[int, int]] = []
    for i in mu.dots:
        if mu.has_dot(i - 1) or not mu.has_dot(i + 1):
            continue
        if not mu.has_dot(i - 2):
            options.append((i, i))
            continue
        for j in sorted((a for a in mu.dots if a < i), reverse=True):
            if (
                not mu.has_dot(j - 2)
                and not mu.has_dot(j - 1)
                and not mu.has_dot(j + 1)
            ):
                options.append((i, j))
    return options


def plan_step(
    mu: WeightDiagram, choice: tuple[int, int] | None = None
) -> StepPlan:
    """Expand one step at the default (first) or an explicitly chosen option."""
    options = step_options(mu)
    if not options:
        if atypicality(mu) != 0:
            raise InternalInvariantError(
                f"{format_diagram(mu)} is atypical but offers no step"
            )
        if choice is not None:
            raise PreconditionError(
                f"{format_diagram(mu)} is typical; no step choice {choice} exists"
            )
        return StepPlan(StepCase.TYPICAL)
    if choice is None:
        choice = options[0]
    else:
        choice = (int(choice[0]), int(choice[1]))
        if choice not in options:
            raise PreconditionError(
                f"step choice {choice} is not offered for {format_diagram(mu)}; "
                f"options are {options}"
            )
    i, j = choice
    nu = _move_dot(mu, j, j - 1)
    if j == i:
        mu_prime = _move_pair(mu, i)
        return StepPlan(StepCase.SPLIT, i=i, j=j, nu=nu, mu_prime=mu_prime)
    return StepPlan(StepCase.CARRY, i=i, j=j, nu=nu)


# ---------------------------------------------------------------------------
# resolution containers


@dataclass
class ResolutionTerm:
    degree: int
    summands: dict[WeightDiagram, int]
    functions: dict[WeightDiagram, tuple[AllowableFunction, ...]] | None = None


@dataclass
class Resolution:
    mu: WeightDiagram
    max_degree: int
    terms: list[ResolutionTerm]

    def counts(self) -> list[int]:
        return [sum(t.summands.values()) for t in self.terms]


# ---------------------------------------------------------------------------
# the recursion

_COUNT_MEMO: dict[tuple[int, ...], tuple[int, list[dict[WeightDiagram, int]]]] = {}
_LABEL_MEMO: dict[
    tuple[int, ...],
    tuple[int, list[dict[WeightDiagram, tuple[AllowableFunction, ...]]]],
] = {}


def reset_memo() -> None:
    _COUNT_MEMO.clear()
    _LABEL_MEMO.clear()


def _carry_bound(mu: WeightDiagram, depth: int) -> int:
    span = mu.dots[-1] - mu.dots[0] + 1
    return mu.n * (span + 2 * depth + 4)


def _check_depth(max_degree: int) -> int:
    if not isinstance(max_degree, int) or isinstance(max_degree, bool):
        raise DiagramError(f"maximum degree must be an integer, got {max_degree!r}")
    if max_degree < 0:
        raise DiagramError(f"maximum degree must be >= 0, got {max_degree}")
    return max_degree


def _plan_for(mu: WeightDiagram, chooser: Chooser | None) -> StepPlan:
    if chooser is None:
        return plan_step(mu)
    options = step_options(mu)
    if not options:
        return plan_step(mu)
    return plan_step(mu, choice=chooser(mu, list(options)))


def _theta_image(j: int, lam: WeightDiagram) -> WeightDiagram:
    try:
        return translate_projective(j, lam)
    except PreconditionError as exc:
        raise InternalInvariantError(
            f"recursion produced summand {format_diagram(lam)} that the "
            f"projective translation at j={j} rejects: {exc}"
        ) from exc


def _counts_step(
    mu: WeightDiagram, depth: int, chooser: Chooser | None, carries: int, bound: int
) -> list[dict[WeightDiagram, int]]:
    plan = _plan_for(mu, chooser)
    terms: list[dict[WeightDiagram, int]] = [{} for _ in range(depth + 1)]
    if plan.case is StepCase.TYPICAL:
        terms[0][mu] = 1
        return terms
    if plan.case is StepCase.CARRY:
        carries += 1
        if carries > bound:
            raise InternalInvariantError(
                f"carry chain exceeded {bound} steps at {format_diagram(mu)}"
            )
        inner = _counts(plan.nu, depth, chooser, carries, bound)
        for d in range(depth + 1):
            for lam, m in inner[d].items():
                img = _theta_image(plan.j, lam)
                terms[d][img] = checked_int64(
                    terms[d].get(img, 0) + m, "summand multiplicity"
                )
        return terms
    # SPLIT
    assert plan.nu is not None and plan.mu_prime is not None
    q = _counts(plan.nu, depth, chooser, 0, bound)
    u = _counts(plan.mu_prime, depth - 1, chooser, 0, bound) if depth >= 1 else []
    for d in range(depth + 1):
        for lam, m in q[d].items():
            img = _theta_image(plan.j, lam)
            terms[d][img] = checked_int64(
                terms[d].get(img, 0) + m, "summand multiplicity"
            )
        if d >= 1:
            for lam, m in u[d - 1].items():
                terms[d][lam] = checked_int64(
                    terms[d].get(lam, 0) + m, "summand multiplicity"
                )
    return terms


def _counts(
    mu: WeightDiagram, depth: int, chooser: Chooser | None, carries: int, bound: int
) -> list[dict[WeightDiagram, int]]:
    if chooser is not None:
        return _counts_step(mu, depth, chooser, carries, bound)
    nf, off = normal_form(mu)
    hit = _COUNT_MEMO.get(nf.dots)
    if hit is None or hit[0] < depth:
        computed = _counts_step(nf, depth, None, carries, bound)
        _COUNT_MEMO[nf.dots] = (depth, [dict(t) for t in computed])
        hit = _COUNT_MEMO[nf.dots]
    stored = hit[1][: depth + 1]
    if off == 0:
        return [dict(t) for t in stored]
    return [{shift(lam, off): m for lam, m in t.items()} for t in stored]


def resolve(
    mu: WeightDiagram, max_degree: int, chooser: Chooser | None = None
) -> Resolution:
    """Summands with multiplicity in every degree up to ``max_degree``."""
    depth = _check_depth(max_degree)
    bound = _carry_bound(mu, depth)
    terms = _counts(mu, depth, chooser, 0, bound)
    return Resolution(
        mu=mu,
        max_degree=depth,
        terms=[ResolutionTerm(degree=d, summands=terms[d]) for d in range(depth + 1)],
    )


def summand_counts(mu: WeightDiagram, max_degree: int) -> list[int]:
    return resolve(mu, max_degree).counts()


# ---------------------------------------------------------------------------
# the same recursion, threading matchings along


def _wrap_apply(
    g: AllowableFunction, rec: MoveRecord, context: str
) -> AllowableFunction:
    try:
        return apply_move(g, rec)
    except PreconditionError as exc:
        raise InternalInvariantError(
            f"threading {context} rejected {rec} on {g}: {exc}"
        ) from exc


def _labels_step(
    mu: WeightDiagram, depth: int, chooser: Chooser | None, carries: int, bound: int
) -> list[dict[WeightDiagram, tuple[AllowableFunction, ...]]]:
    plan = _plan_for(mu, chooser)
    terms: list[dict[WeightDiagram, list[AllowableFunction]]] = [
        {} for _ in range(depth + 1)
    ]

    def add(d: int, fn: AllowableFunction) -> None:
        terms[d].setdefault(fn.target, []).append(fn)

    def carry_branch(j: int, inner, context: str) -> None:
        for d in range(depth + 1):
            for lam, fns in inner[d].items():
                img = _theta_image(j, lam)
                for g in fns:
                    if lam.has_dot(j):
                        rec = MoveRecord(MoveKind.MOVE2, j=j, k=g.preimage_of(j))
                    else:
                        rec = MoveRecord(MoveKind.MOVE1, j=j)
                    out = _wrap_apply(g, rec, context)
                    if out.target != img:
                        raise InternalInvariantError(
                            f"threading landed on {format_diagram(out.target)}, "
                            f"translation predicts {format_diagram(img)}"
                        )
                    add(d, out)

    if plan.case is StepCase.TYPICAL:
        add(0, identity_function(mu))
    elif plan.case is StepCase.CARRY:
        carries += 1
        if carries > bound:
            raise InternalInvariantError(
                f"carry chain exceeded {bound} steps at {format_diagram(mu)}"
            )
        inner = _labels(plan.nu, depth, chooser, carries, bound)
        carry_branch(plan.j, inner, f"carry at {format_diagram(mu)}")
    else:
        assert plan.nu is not None and plan.mu_prime is not None
        q = _labels(plan.nu, depth, chooser, 0, bound)
        carry_branch(plan.j, q, f"split at {format_diagram(mu)}")
        if depth >= 1:
            u = _labels(plan.mu_prime, depth - 1, chooser, 0, bound)
            rec = MoveRecord(MoveKind.MOVE3, j=plan.j)
            for d in range(1, depth + 1):
                for fns in u[d - 1].values():
                    for g in fns:
                        add(d, _wrap_apply(g, rec, f"split at {format_diagram(mu)}"))

    frozen: list[dict[WeightDiagram, tuple[AllowableFunction, ...]]] = []
    for d, layer in enumerate(terms):
        for lam, fns in layer.items():
            if len({fn.pairing for fn in fns}) != len(fns):
                raise InternalInvariantError(
                    f"duplicate matchings onto {format_diagram(lam)} in degree {d} "
                    f"of {format_diagram(mu)}"
                )
        frozen.append({lam: tuple(fns) for lam, fns in layer.items()})
    return frozen


def _labels(
    mu: WeightDiagram, depth: int, chooser: Chooser | None, carries: int, bound: int
) -> list[dict[WeightDiagram, tuple[AllowableFunction, ...]]]:
    if chooser is not None:
        return _labels_step(mu, depth, chooser, carries, bound)
    nf, off = normal_form(mu)
    hit = _LABEL_MEMO.get(nf.dots)
    if hit is None or hit[0] < depth:
        computed = _labels_step(nf, depth, None, carries, bound)
        _LABEL_MEMO[nf.dots] = (depth, [dict(t) for t in computed])
        hit = _LABEL_MEMO[nf.dots]
    stored = hit[1][: depth + 1]
    if off == 0:
        return [dict(t) for t in stored]
    return [
        {
            shift(lam, off): tuple(shift_function(fn, off) for fn in fns)
            for lam, fns in t.items()
        }
        for t in stored
    ]


def resolve_with_functions(
    mu: WeightDiagram, max_degree: int, chooser: Chooser | None = None
) -> Resolution:
    """Like :func:`resolve`, with every summand labelled by its matchings."""
    depth = _check_depth(max_degree)
    bound = _carry_bound(mu, depth)
    layers = _labels(mu, depth, chooser, 0, bound)
    terms = []
    for d in range(depth + 1):
        terms.append(
            ResolutionTerm(
                degree=d,
                summands={lam: len(fns) for lam, fns in layers[d].items()},
                functions=layers[d],
            )
        )
    return Resolution(mu=mu, max_degree=depth, terms=terms)
