"""Exceptions raised by the Elnitsky toolkit.

Every exception carries a stable ``code`` so the CLI can emit a
machine-readable error object without inspecting messages.
"""

from __future__ import annotations

from typing import Any, Dict


class ElnitskyError(RuntimeError):
    """Base class for domain errors."""

    code = "ELNITSKY_ERROR"

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": str(self)}


class NotABijection(ElnitskyError):
    """Raised when one-line notation is not a permutation of 1..n."""

    code = "NOT_A_BIJECTION"


class BadPositions(ElnitskyError):
    """Raised when a pair of positions is not 1 <= i < j <= n."""

    code = "BAD_POSITIONS"


class LetterOutOfRange(ElnitskyError):
    """Raised when a word uses a generator outside 1..n-1."""

    code = "LETTER_OUT_OF_RANGE"


class NotReduced(ElnitskyError):
    """Raised when a word is longer than the permutation it evaluates to."""

    code = "NOT_REDUCED"


class SizeLimitExceeded(ElnitskyError):
    """Raised when an enumeration would exceed its configured cap."""

    code = "SIZE_LIMIT_EXCEEDED"


class MixedPermutations(ElnitskyError):
    """Raised when words handed to one partition evaluate differently."""

    code = "MIXED_PERMUTATIONS"


class NotFullySupported(ElnitskyError):
    """Raised when a polygon would pinch because a prefix is {1..r}."""

    code = "NOT_FULLY_SUPPORTED"


class ClassPermutationMismatch(ElnitskyError):
    """Raised when a commutation class does not belong to the permutation."""

    code = "CLASS_PERMUTATION_MISMATCH"


class DomainViolation(ElnitskyError):
    """Raised when phi or its inverse gets an argument outside its domain."""

    code = "DOMAIN_VIOLATION"


class UnknownTheorem(ElnitskyError):
    """Raised when the verification harness has no check under that name."""

    code = "UNKNOWN_THEOREM"


class ConsistencyError(ElnitskyError):
    """Raised when two formulations of one condition disagree at runtime."""

    code = "CONSISTENCY_ERROR"


class RenderWriteError(ElnitskyError):
    """Raised when an SVG document cannot be written."""

    code = "IO_ERROR"
