"""Exception hierarchy shared by all fsprank modules.

Every error carries a stable machine-readable ``code`` so front ends (CLI,
HTTP service) can map failures without string matching.
"""

from __future__ import annotations


class FsprankError(Exception):
    """Base class for all fsprank domain errors."""

    code = "ERROR"


class GradeOutOfRangeError(FsprankError):
    """Grade value below 0 or above 1."""

    code = "GRADE_OUT_OF_RANGE"


class GradePrecisionError(FsprankError):
    """Grade has more fractional digits than the fixed-point format allows."""

    code = "GRADE_PRECISION"


class DimensionMismatchError(FsprankError):
    """Grade matrix shape does not match the declared id lists."""

    code = "DIMENSION_MISMATCH"


class DuplicateIdError(FsprankError):
    """Alternative or attribute id occurs more than once."""

    code = "DUPLICATE_ID"


class InvalidIdError(FsprankError):
    """Alternative or attribute id is empty or blank."""

    code = "INVALID_ID"


class EmptyUniverseError(FsprankError):
    """No alternatives were supplied."""

    code = "EMPTY_UNIVERSE"


class EmptyAttributeSetError(FsprankError):
    """No attributes were supplied, or an operation would remove them all."""

    code = "EMPTY_ATTRIBUTE_SET"


class UnknownAlternativeError(FsprankError):
    """Referenced alternative id is not part of the fuzzy soft set."""

    code = "UNKNOWN_ALTERNATIVE"


class UnknownAttributeError(FsprankError):
    """Referenced attribute id is not part of the fuzzy soft set."""

    code = "UNKNOWN_ATTRIBUTE"


class DegenerateScoresError(FsprankError):
    """Cumulative scores cannot feed the decision measures (zero divisor
    or totals inconsistent with the instance dimensions)."""

    code = "DEGENERATE_SCORES"


class ParseError(FsprankError):
    """Malformed CSV/JSON input; message is position-annotated where possible."""

    code = "PARSE_ERROR"
