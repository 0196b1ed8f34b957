"""Exception types shared across the library and mapped to CLI exit codes."""

from __future__ import annotations


class EsymlabError(Exception):
    """Base class for all library-specific errors."""


class SubMultisetViolation(EsymlabError, ValueError):
    """Multiset difference requested with a subtrahend that is not contained."""


class NotDivisible(EsymlabError, ValueError):
    """Partition division by k requested while some part is not a multiple of k."""


class ExpansionCap(EsymlabError, ValueError):
    """A subset-product expansion would exceed the configured part-count cap."""


class UnsupportedJ(EsymlabError, ValueError):
    """The closed-form evaluation is only available for j in {2, 3}."""


class IdentityMismatch(EsymlabError):
    """Two routes that must agree by identity produced different values (a bug)."""


class RingMismatch(EsymlabError, ValueError):
    """Operation mixing series over different coefficient rings."""


class NotSupported(EsymlabError, ValueError):
    """Power-substitution extraction hit a nonzero coefficient off the grid."""


class ParseError(EsymlabError, ValueError):
    """Expression text rejected; carries the offending position."""

    def __init__(self, message: str, pos: int, expected: tuple[str, ...] = ()):
        self.pos = pos
        self.expected = expected
        detail = f"parse error at position {pos}: {message}"
        if expected:
            detail += " (expected " + " or ".join(expected) + ")"
        super().__init__(detail)


class NoPeriodFound(EsymlabError):
    """No period up to window/4 satisfied the acceptance margin."""


class PrefixTooShort(EsymlabError, ValueError):
    """Recurrence extension needs at least `order` seed values."""


class UnknownSequence(EsymlabError, KeyError):
    """Sequence name not present in the registry."""


class BadRange(EsymlabError, ValueError):
    """Requested index range is empty or outside the sequence's domain."""


class CacheError(EsymlabError):
    """Cache file is malformed or inconsistent with the request."""
