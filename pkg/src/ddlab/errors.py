"""Exception types shared across the package."""

from __future__ import annotations


class DdlabError(Exception):
    """Base class for all package-specific errors."""


class FormatError(DdlabError):
    """Malformed rational literal or input file."""


class EmptyResultError(DdlabError):
    """Pruning has nothing to work with (no usable points)."""


class GenerationExhaustedError(DdlabError):
    """Random generation ran out of its resampling budget."""


class InvalidCountError(DdlabError):
    """A generator was asked for a nonpositive number of points."""


class DegenerateHyperbolaError(DdlabError):
    """An ordered pair with equal squared axis distances; the curve would be a line pair."""

    def __init__(self, p_idx: int, q_idx: int) -> None:
        super().__init__(f"degenerate curve for pair ({p_idx}, {q_idx}): gamma = 0")
        self.pair = (p_idx, q_idx)


class DuplicateCurveError(DdlabError):
    """Two ordered pairs produced the same (alpha, beta, gamma) triple."""


class BijectionViolationError(DdlabError):
    """Cross-column energy and incidence count disagree (implementation bug)."""


class NotIncidentError(DdlabError):
    """Branch classification was asked about a point not on the curve."""


class WrongSignError(DdlabError):
    """Branch classification with the wrong gamma sign for the requested split."""


class IdenticalCurvesError(DdlabError):
    """Pairwise intersection needs two distinct curves."""


class TooLargeError(DdlabError):
    """Brute-force oracle guard tripped; input exceeds the desk-scale budget."""
