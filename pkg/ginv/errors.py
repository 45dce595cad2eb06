# ginv/errors.py
from typing import Iterable, Optional


class GinvError(Exception):
    """Base error; ``reason`` is the machine-readable code the CLI reports."""

    exit_code = 1
    reason = "error"

    def __init__(self, message: str, reason: Optional[str] = None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class HypothesisViolation(GinvError):
    exit_code = 2
    reason = "hypothesis_violation"


class ClassViolation(HypothesisViolation):
    """Input digraph is outside the class the formula paths require."""

    reason = "not_in_class_d"


class NoGroupInverse(HypothesisViolation):
    reason = "no_group_inverse"

    def __init__(self, message: str, reason: Optional[str] = None,
                 vanished: Iterable[int] = ()):
        super().__init__(message, reason)
        self.vanished = sorted(vanished)


class MatrixFormatError(GinvError):
    reason = "parse_error"


class DimensionMismatch(GinvError, ValueError):
    reason = "dimension_mismatch"


class VertexOutOfRange(GinvError, ValueError):
    reason = "vertex_out_of_range"


class BruteForceLimitExceeded(GinvError):
    reason = "brute_force_limit"


class GenerationError(GinvError):
    reason = "generation_failed"


class InvariantViolation(GinvError):
    """A runtime theorem check failed; always a bug in the formula code."""

    reason = "invariant_violation"
