"""Error taxonomy shared by the library, the CLI and the HTTP service.

The split matters operationally:

* :class:`DiagramError` — the input itself is malformed (unparseable diagram
  string, non-increasing dots, bad composition).  CLI exit 2, HTTP 400.
* :class:`PreconditionError` — well-formed input, but the requested operation's
  local pattern does not hold (inapplicable move, invalid step site,
  unsupported translation configuration).  HTTP 422.
* :class:`CapExceededError` — a degree request above the configured cap.
  CLI exit 3, HTTP 413.
* :class:`InternalInvariantError` — a "this cannot happen" check fired
  (arithmetic delta mismatch, chain safety counter, inexact division,
  coefficient overflow).  Always a bug, never user error.  CLI exit 4,
  HTTP 500.
"""

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class DiagramError(ValueError):
    """Malformed diagram / weight / composition input."""


class PreconditionError(ValueError):
    """A local pattern required by the operation does not hold.

    The message always names the violated pattern so callers (and the HTTP
    422 body) can show which configuration was expected.
    """


class CapExceededError(RuntimeError):
    """Requested degree exceeds the configured cap."""


class InternalInvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug."""


def checked_int64(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged if it fits in a signed 64-bit integer.

    Python integers never wrap, so this is the explicit guard that keeps the
    engine inside its documented numeric contract instead of silently growing.
    """
    if not (INT64_MIN <= value <= INT64_MAX):
        raise InternalInvariantError(f"{what} {value} exceeds the 64-bit range")
    return value
