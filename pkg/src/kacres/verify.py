"""Named self-checks that cross-validate independent computation paths.

Each check runs over a seeded corpus of diagrams (every run composition up
to a size bound, placed both tightly and with randomized gaps inside a fixed
window) and compares quantities that are computed by unrelated code paths:

* ``series-counts`` — recursive resolution multiplicities against the closed
  generating-series coefficients.
* ``enumeration-counts`` — the function enumeration against both of the
  above, plus per-function coherence (declared layer equals computed degree,
  distinct matchings, correct source).
* ``order-independence`` — seeded random step choosers against the default
  strategy; the per-degree summand multisets must be identical.
* ``reduction`` — every enumerated function must reduce to an identity on a
  typical diagram by inverse moves.

Checks never abort on the first problem: counterexamples are collected (up
to a cap) so a failure report always names concrete inputs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .diagrams import WeightDiagram, atypicality, format_diagram, runs
from .errors import InternalInvariantError
from .moves import degree, enumerate_allowable, reduce_to_identity, trace_start
from .resolution import reset_memo, resolve, resolve_with_functions
from .series import series_coeffs

__all__ = [
    "CheckResult",
    "CHECK_NAMES",
    "compositions",
    "compositions_up_to",
    "canonical_diagram",
    "corpus_diagrams",
    "run_check",
    "run_checks",
]

WINDOW_LO = 0
WINDOW_HI = 12
MAX_REPORTED = 5


# ---------------------------------------------------------------------------
# corpora


def compositions(n: int) -> list[tuple[int, ...]]:
    """All ordered sequences of positive integers summing to ``n``."""
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return out


def compositions_up_to(max_n: int) -> list[tuple[int, ...]]:
    return [parts for n in range(1, max_n + 1) for parts in compositions(n)]


def canonical_diagram(parts: Sequence[int]) -> WeightDiagram:
    """Tightest placement starting at 0 whose run sizes (right to left) are
    ``parts``."""
    dots: list[int] = []
    pos = 0
    for size in reversed(tuple(parts)):
        dots.extend(range(pos, pos + size))
        pos += size + 1
    return WeightDiagram.of(*dots)


def gap_diagram(
    parts: Sequence[int], rng: random.Random, lo: int = WINDOW_LO, hi: int = WINDOW_HI
) -> WeightDiagram:
    """Random placement of the same runs inside ``[lo, hi]``."""
    parts = tuple(parts)
    n = sum(parts)
    min_span = n + len(parts) - 1
    slack = (hi - lo + 1) - min_span
    if slack < 0:
        raise ValueError(f"runs {parts} do not fit in [{lo}, {hi}]")
    dots: list[int] = []
    pos = lo + rng.randint(0, slack)
    slack -= pos - lo
    for index, size in enumerate(reversed(parts)):
        if index > 0:
            extra = rng.randint(0, slack)
            slack -= extra
            pos += 1 + extra
        dots.extend(range(pos, pos + size))
        pos += size
    return WeightDiagram.of(*dots)


def corpus_diagrams(
    max_n: int, seed: int = 0, gap_placements: int = 2
) -> Iterator[WeightDiagram]:
    """Canonical plus seeded gap placements for every composition up to
    ``max_n`` dots, all inside the standard window."""
    for parts in compositions_up_to(max_n):
        yield canonical_diagram(parts)
        for k in range(gap_placements):
            rng = random.Random((seed, parts, k).__repr__())
            yield gap_diagram(parts, rng)


# ---------------------------------------------------------------------------
# harness


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    failures: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "ok" if self.passed else "FAIL"
        line = f"{status:4s} {self.name}  ({self.cases} cases, {self.seconds:.2f}s)"
        for failure in self.failures[:MAX_REPORTED]:
            line += f"\n       counterexample: {failure}"
        return line


@dataclass
class CheckConfig:
    max_n: int = 5
    max_degree: int = 6
    trials: int = 20
    seed: int = 0
    gap_placements: int = 2


Observations = tuple[int, list[str]]
Check = Callable[[CheckConfig], Observations]


def _guarded(per_diagram, cfg: CheckConfig) -> Observations:
    """Run a per-diagram closure over the corpus, converting crashes into
    recorded failures rather than aborting the sweep."""
    cases = 0
    failures: list[str] = []
    for mu in corpus_diagrams(cfg.max_n, cfg.seed, cfg.gap_placements):
        cases += 1
        try:
            failures.extend(per_diagram(mu))
        except InternalInvariantError as exc:
            failures.append(f"{format_diagram(mu)}: internal invariant tripped: {exc}")
        if len(failures) >= MAX_REPORTED:
            break
    return cases, failures


def _check_series_counts(cfg: CheckConfig) -> Observations:
    def per_diagram(mu: WeightDiagram) -> list[str]:
        got = resolve(mu, cfg.max_degree).counts()
        want = series_coeffs(runs(mu), cfg.max_degree)
        if got != want:
            return [f"{format_diagram(mu)}: resolution counts {got} != series {want}"]
        return []

    return _guarded(per_diagram, cfg)


def _check_enumeration_counts(cfg: CheckConfig) -> Observations:
    def per_diagram(mu: WeightDiagram) -> list[str]:
        bad: list[str] = []
        labeled = resolve_with_functions(mu, cfg.max_degree)
        enumerated = enumerate_allowable(mu, cfg.max_degree)
        series = series_coeffs(runs(mu), cfg.max_degree)
        for term in labeled.terms:
            d = term.degree
            fns = [f for fs in (term.functions or {}).values() for f in fs]
            from_enum = enumerated.get(d, [])
            if len(fns) != series[d] or len(from_enum) != series[d]:
                bad.append(
                    f"{format_diagram(mu)} degree {d}: resolution lists {len(fns)}, "
                    f"enumeration lists {len(from_enum)}, series says {series[d]}"
                )
                continue
            keys = {(f.target.dots, f.pairing) for f in fns}
            if keys != {(f.target.dots, f.pairing) for f in from_enum}:
                bad.append(
                    f"{format_diagram(mu)} degree {d}: enumeration and resolution "
                    "disagree on the matchings"
                )
            for f in fns:
                if f.source != mu or degree(f) != d:
                    bad.append(
                        f"{format_diagram(mu)} degree {d}: function {f} has "
                        f"degree {degree(f)}"
                    )
                    break
        return bad

    return _guarded(per_diagram, cfg)


def _check_order_independence(cfg: CheckConfig) -> Observations:
    def per_diagram(mu: WeightDiagram) -> list[str]:
        base = [dict(t.summands) for t in resolve(mu, cfg.max_degree).terms]
        for trial in range(cfg.trials):
            rng = random.Random(f"{cfg.seed}:{trial}:{mu.dots}")
            chooser = lambda _mu, options: rng.choice(options)
            got = [
                dict(t.summands)
                for t in resolve(mu, cfg.max_degree, chooser=chooser).terms
            ]
            if got != base:
                first = next(d for d in range(len(base)) if base[d] != got[d])
                return [
                    f"{format_diagram(mu)} trial {trial} (seed {cfg.seed}): "
                    f"summands differ first in degree {first}"
                ]
        return []

    return _guarded(per_diagram, cfg)


def _check_reduction(cfg: CheckConfig) -> Observations:
    depth = min(cfg.max_degree, 3)

    def per_diagram(mu: WeightDiagram) -> list[str]:
        for fns in enumerate_allowable(mu, depth).values():
            for f in fns:
                cert = reduce_to_identity(f)
                if cert is None:
                    return [f"{format_diagram(mu)}: no reduction found for {f}"]
                start = trace_start(f, cert)
                if atypicality(start) != 0:
                    return [
                        f"{format_diagram(mu)}: reduction of {f} starts at "
                        f"atypical {format_diagram(start)}"
                    ]
        return []

    small = CheckConfig(
        max_n=min(cfg.max_n, 4),
        max_degree=depth,
        trials=cfg.trials,
        seed=cfg.seed,
        gap_placements=cfg.gap_placements,
    )
    return _guarded(per_diagram, small)


CHECKS: dict[str, Check] = {
    "series-counts": _check_series_counts,
    "enumeration-counts": _check_enumeration_counts,
    "order-independence": _check_order_independence,
    "reduction": _check_reduction,
}

CHECK_NAMES = tuple(CHECKS)


def run_check(name: str, cfg: CheckConfig | None = None) -> CheckResult:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    cfg = cfg or CheckConfig()
    reset_memo()
    started = time.perf_counter()
    cases, failures = CHECKS[name](cfg)
    elapsed = time.perf_counter() - started
    return CheckResult(
        name=name,
        passed=not failures,
        cases=cases,
        seconds=elapsed,
        failures=failures,
    )


def run_checks(
    names: Sequence[str] | None = None, cfg: CheckConfig | None = None
) -> list[CheckResult]:
    return [run_check(name, cfg) for name in (names or CHECK_NAMES)]
