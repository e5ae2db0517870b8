"""Exact generating-function layer.

Polynomials are plain coefficient lists (index = power of u, trailing zeros
trimmed, empty list = zero).  Everything is exact integer arithmetic with the
64-bit guard applied to results; desk-scale degrees keep coefficients tiny.

The central objects are the per-run numerator polynomials defined by

    g(0) = g(1) = 1,
    g(2k)   = (1-u) g(2k-1) + u g(2k-2),
    g(2k+1) = g(2k) + u g(2k-1),

and the truncated series for a run composition pi, whose coefficients count
summands per degree: numerator = product of g(part), denominator (1-u)^m with
m = sum of part//2.  Division by (1-u)^m is m iterated prefix sums.
"""

from __future__ import annotations

from math import comb

from .diagrams import validate_runs
from .errors import DiagramError, InternalInvariantError, checked_int64

__all__ = [
    "poly_trim",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "numerator_poly",
    "numerator_poly_closed",
    "series_coeffs",
    "z_complexity",
    "complexity",
    "rank_variety_dim",
    "support_variety_dim",
    "growth_exponent",
]

Coeffs = list[int]


def poly_trim(p: Coeffs) -> Coeffs:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def poly_add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim([checked_int64(c, "polynomial coefficient") for c in out])


def poly_eval(p: Coeffs, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def numerator_poly(r: int) -> Coeffs:
    """Per-run numerator polynomial via the two-term recursion."""
    if r < 0:
        raise DiagramError(f"run size index must be nonnegative, got {r}")
    prev, cur = [1], [1]  # values at r-1 = 0 and r = 1 after the loop warmup
    if r <= 1:
        return [1]
    for s in range(2, r + 1):
        if s % 2 == 0:
            nxt = poly_add(poly_mul([1, -1], cur), poly_mul([0, 1], prev))
        else:
            nxt = poly_add(cur, poly_mul([0, 1], prev))
        prev, cur = cur, nxt
    return cur


# Discriminant polynomial of the recursion's transfer matrix.
_DISCRIMINANT: Coeffs = [1, 2, -3]
_ONE_PLUS_U: Coeffs = [1, 1]
_ONE_MINUS_U: Coeffs = [1, -1]


def numerator_poly_closed(r: int) -> Coeffs:
    """Closed form: two binomial sums in (1+u) and the discriminant, over 2^k.

    Splitting the binomial expansion of the transfer-matrix eigenpowers into
    even and odd index parts keeps every exponent nonnegative; the odd part
    carries one extra factor of (1-u) for even r and (1+u) for odd r.  The
    final division by 2^k must be exact; a remainder signals a transcription
    bug and raises.
    """
    if r < 0:
        raise DiagramError(f"run size index must be nonnegative, got {r}")
    k = r // 2
    total: Coeffs = []
    for i in range(0, k + 1):
        term = poly_mul([comb(k, i)], _poly_pow(_ONE_PLUS_U, k - i))
        if i % 2 == 0:
            term = poly_mul(term, _poly_pow(_DISCRIMINANT, i // 2))
        else:
            extra = _ONE_MINUS_U if r % 2 == 0 else _ONE_PLUS_U
            term = poly_mul(term, extra)
            term = poly_mul(term, _poly_pow(_DISCRIMINANT, (i - 1) // 2))
        total = poly_add(total, term)
    scale = 2**k
    out: Coeffs = []
    for c in total:
        if c % scale != 0:
            raise InternalInvariantError(
                f"closed form for r={r} produced coefficient {c} not divisible by {scale}"
            )
        out.append(c // scale)
    return poly_trim(out)


def _poly_pow(p: Coeffs, e: int) -> Coeffs:
    out: Coeffs = [1]
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def z_complexity(parts) -> int:
    """Half the count of dots in even runs: sum of part//2."""
    parts = validate_runs(parts)
    return sum(part // 2 for part in parts)


def series_coeffs(parts, max_degree: int) -> list[int]:
    """First max_degree+1 summand counts for a run composition.

    Numerator = product of the per-run polynomials; the (1-u)^m denominator is
    divided out as m iterated prefix sums on the truncated coefficient list.
    """
    parts = validate_runs(parts)
    if max_degree < 0:
        raise DiagramError(f"max degree must be nonnegative, got {max_degree}")
    numerator: Coeffs = [1]
    for part in parts:
        numerator = poly_mul(numerator, numerator_poly(part))
    m = z_complexity(parts)
    coeffs = numerator[: max_degree + 1]
    coeffs += [0] * (max_degree + 1 - len(coeffs))
    for _ in range(m):
        acc = 0
        for d in range(max_degree + 1):
            acc = checked_int64(acc + coeffs[d], "series coefficient")
            coeffs[d] = acc
    if coeffs[0] != 1 or any(c < 0 for c in coeffs):
        raise InternalInvariantError(
            f"series for runs {parts} produced a non-positive expansion {coeffs}"
        )
    return coeffs


def complexity(n: int, o: int) -> int:
    """Growth-rate formula C(n,2) - C(o,2) for n dots with o odd runs."""
    _check_parity(n, o)
    return n * (n - 1) // 2 - o * (o - 1) // 2


def rank_variety_dim(n: int, l: int) -> int:
    """Dimension l(2n-2l-1) of the rank filtration stratum."""
    if not (0 <= 2 * l <= n):
        raise DiagramError(f"need 0 <= 2*l <= n, got n={n}, l={l}")
    return l * (2 * n - 2 * l - 1)


def support_variety_dim(n: int, o: int) -> int:
    """Support-variety dimension for the detecting subalgebra: (n-o)/2."""
    _check_parity(n, o)
    return (n - o) // 2


def growth_exponent(parts) -> int:
    """Pole order of the series at u=1; no cancellation since the numerator
    is positive there (checked)."""
    parts = validate_runs(parts)
    numerator: Coeffs = [1]
    for part in parts:
        numerator = poly_mul(numerator, numerator_poly(part))
    if poly_eval(numerator, 1) <= 0:
        raise InternalInvariantError(
            f"numerator for runs {parts} vanishes at u=1; pole order undefined"
        )
    return z_complexity(parts)


def _check_parity(n: int, o: int) -> None:
    if not (0 <= o <= n) or (n - o) % 2 != 0:
        raise DiagramError(f"need 0 <= o <= n with n-o even, got n={n}, o={o}")
