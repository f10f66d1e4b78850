"""Exact-arithmetic engine for pairwise-dominance ranking over fuzzy soft sets.

A fuzzy soft set is a complete matrix of membership grades in [0, 1], indexed
by (alternative, attribute).  For every ordered pair of alternatives the engine
derives the attribute sets where the first dominates (grade >= opponent's),
is subjected (grade <= opponent's), or ties exactly; cumulative counts of these
sets feed three decision measures:

    gamma1 = dom / sub * equity      (equity-weighted domination ratio)
    gamma2 = dom - sub               (domination surplus)
    gamma3 = (dom + sub) / equity    (attribute total scaled by equity)

All grades are fixed-point decimals and all measures are exact rationals, so
comparisons, tie detection and rankings are bit-identical across platforms.
Every type is an immutable value and every operation is a pure function.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DegenerateScoresError,
    DimensionMismatchError,
    DuplicateIdError,
    EmptyAttributeSetError,
    EmptyUniverseError,
    GradeOutOfRangeError,
    GradePrecisionError,
    InvalidIdError,
    ParseError,
    UnknownAlternativeError,
    UnknownAttributeError,
)

#: Fixed-point denominator: grades carry at most 4 fractional digits.
GRADE_SCALE = 10_000

GradeLike = Union["Grade", str, int, float, Decimal]


@dataclass(frozen=True, order=True)
class Grade:
    """Membership grade in [0, 1], stored as ``units / GRADE_SCALE``.

    Equality and ordering compare the integer numerator, never floats.
    """

    units: int

    def __post_init__(self) -> None:
        if not isinstance(self.units, int):
            raise GradePrecisionError(f"grade units must be an integer, got {self.units!r}")
        if self.units < 0 or self.units > GRADE_SCALE:
            raise GradeOutOfRangeError(
                f"grade {self.units / GRADE_SCALE} outside [0, 1]"
            )

    @classmethod
    def parse(cls, text: str) -> "Grade":
        """Parse a plain decimal string ("0.7", "1", "0.1250") exactly."""
        try:
            value = Decimal(text.strip())
        except InvalidOperation:
            raise ParseError(f"not a decimal grade: {text!r}") from None
        return cls._from_decimal(value, text)

    @classmethod
    def of(cls, value: GradeLike) -> "Grade":
        """Coerce a grade-like value.

        Floats are accepted through their shortest decimal repr, so 0.7 is
        exact while an accumulated binary artefact like 0.30000000000000004
        is rejected rather than silently rounded.
        """
        if isinstance(value, Grade):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, bool):
            raise ParseError(f"not a decimal grade: {value!r}")
        if isinstance(value, int):
            return cls._from_decimal(Decimal(value), str(value))
        if isinstance(value, float):
            return cls._from_decimal(Decimal(str(value)), str(value))
        if isinstance(value, Decimal):
            return cls._from_decimal(value, str(value))
        raise ParseError(f"cannot interpret {value!r} as a grade")

    @classmethod
    def _from_decimal(cls, value: Decimal, text: str) -> "Grade":
        if not value.is_finite():
            raise ParseError(f"not a decimal grade: {text!r}")
        scaled = value * GRADE_SCALE
        units = int(scaled)
        if units != scaled:
            raise GradePrecisionError(
                f"grade {text.strip()!r} has more than 4 fractional digits"
            )
        if units < 0 or units > GRADE_SCALE:
            raise GradeOutOfRangeError(f"grade {text.strip()} outside [0, 1]")
        return cls(units)

    @property
    def text(self) -> str:
        """Canonical decimal text, e.g. "0.7", "1.0", "0.0012"."""
        whole, frac = divmod(self.units, GRADE_SCALE)
        if frac == 0:
            return f"{whole}.0"
        return f"{whole}.{f'{frac:04d}'.rstrip('0')}"

    def as_fraction(self) -> Fraction:
        return Fraction(self.units, GRADE_SCALE)

    def __str__(self) -> str:
        return self.text


class Measure(str, Enum):
    """Selector for the measure that orders a decision table."""

    G1 = "G1"
    G2 = "G2"
    G3 = "G3"

    @classmethod
    def from_text(cls, text: str) -> "Measure":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ParseError(f"unknown measure {text!r}; expected one of g1, g2, g3") from None


def _check_ids(ids: Sequence[str], kind: str) -> None:
    seen = set()
    for i in ids:
        if not isinstance(i, str) or not i.strip():
            raise InvalidIdError(f"blank {kind} id {i!r}")
        if i in seen:
            raise DuplicateIdError(f"duplicate {kind} id {i!r}")
        seen.add(i)


@dataclass(frozen=True)
class FuzzySoftSet:
    """Complete grade matrix over ordered alternatives and attributes.

    Incomplete information is modelled by eliminating whole attribute columns
    (see :func:`restrict_attributes`), never by missing cells.  Instances are
    validated on construction and immutable afterwards.
    """

    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]
    grades: tuple[tuple[Grade, ...], ...]
    attribute_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.alternatives) == 0:
            raise EmptyUniverseError("at least one alternative is required")
        if len(self.attributes) == 0:
            raise EmptyAttributeSetError("at least one attribute is required")
        _check_ids(self.alternatives, "alternative")
        _check_ids(self.attributes, "attribute")
        if len(self.grades) != len(self.alternatives):
            raise DimensionMismatchError(
                f"{len(self.grades)} grade rows for {len(self.alternatives)} alternatives"
            )
        m = len(self.attributes)
        for alt, row in zip(self.alternatives, self.grades):
            if len(row) != m:
                raise DimensionMismatchError(
                    f"row {alt!r} has {len(row)} grades, expected {m}"
                )
        if self.attribute_labels is not None and len(self.attribute_labels) != m:
            raise DimensionMismatchError(
                f"{len(self.attribute_labels)} labels for {m} attributes"
            )

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def alternative_position(self, alternative: str) -> int:
        try:
            return self.alternatives.index(alternative)
        except ValueError:
            raise UnknownAlternativeError(f"unknown alternative {alternative!r}") from None

    def attribute_position(self, attribute: str) -> int:
        try:
            return self.attributes.index(attribute)
        except ValueError:
            raise UnknownAttributeError(f"unknown attribute {attribute!r}") from None

    def grade(self, alternative: str, attribute: str) -> Grade:
        return self.grades[self.alternative_position(alternative)][
            self.attribute_position(attribute)
        ]

    def label_for(self, attribute: str) -> str:
        pos = self.attribute_position(attribute)
        if self.attribute_labels is None:
            return attribute
        return self.attribute_labels[pos]

    def digest(self) -> str:
        """Content hash over ids and grade units (labels excluded)."""
        h = hashlib.sha256()
        for part in self.alternatives:
            h.update(part.encode("utf-8") + b"\x1f")
        h.update(b"\x1e")
        for part in self.attributes:
            h.update(part.encode("utf-8") + b"\x1f")
        h.update(b"\x1e")
        for row in self.grades:
            h.update(",".join(str(g.units) for g in row).encode("ascii") + b";")
        return "sha256:" + h.hexdigest()


def new_fuzzy_soft_set(
    alternatives: Sequence[str],
    attributes: Sequence[str],
    grades: Sequence[Sequence[GradeLike]],
    attribute_labels: Sequence[str] | None = None,
) -> FuzzySoftSet:
    """Build a validated :class:`FuzzySoftSet` from grade-like cell values."""
    rows = tuple(tuple(Grade.of(cell) for cell in row) for row in grades)
    return FuzzySoftSet(
        alternatives=tuple(alternatives),
        attributes=tuple(attributes),
        grades=rows,
        attribute_labels=tuple(attribute_labels) if attribute_labels is not None else None,
    )


@dataclass(frozen=True)
class ComparisonCell:
    """Domination / subjection attribute sets for one ordered pair.

    ``rho`` holds the attributes where the row alternative's grade is >= the
    column's, ``chi`` those where it is <=; their intersection is the exact
    tie set.  Together they always cover the full attribute set.
    """

    row: str
    col: str
    rho: frozenset[str]
    chi: frozenset[str]

    @property
    def eq(self) -> frozenset[str]:
        return self.rho & self.chi


def compare(fss: FuzzySoftSet, i: str, j: str) -> ComparisonCell:
    """Compare two alternatives attribute by attribute (i == j is allowed)."""
    ri = fss.grades[fss.alternative_position(i)]
    rj = fss.grades[fss.alternative_position(j)]
    rho = frozenset(
        e for e, a, b in zip(fss.attributes, ri, rj) if a.units >= b.units
    )
    chi = frozenset(
        e for e, a, b in zip(fss.attributes, ri, rj) if a.units <= b.units
    )
    return ComparisonCell(row=i, col=j, rho=rho, chi=chi)


def comparison_matrix(fss: FuzzySoftSet) -> list[list[ComparisonCell]]:
    """Full n x n matrix of :func:`compare` cells in alternative order."""
    return [
        [compare(fss, i, j) for j in fss.alternatives] for i in fss.alternatives
    ]


@dataclass(frozen=True)
class CumulativeScores:
    """Per-alternative totals of domination/subjection/equity cardinalities.

    Sums range over every opponent including the alternative itself, so each
    total is at least the attribute count.
    """

    alternative: str
    dom: int
    sub: int
    equity: int


def cumulative_scores(fss: FuzzySoftSet) -> list[CumulativeScores]:
    """Cumulative scores for every alternative, in input order.

    Counts cardinalities directly (without materialising attribute sets) and
    exploits the >=/<= duality: the pair (i, j) fixes (j, i) for free.
    """
    n = fss.n_alternatives
    m = fss.n_attributes
    rows = [tuple(g.units for g in row) for row in fss.grades]
    dom = [m] * n  # diagonal pair contributes the full attribute set
    sub = [m] * n
    equity = [m] * n
    for i in range(n):
        row_i = rows[i]
        for j in range(i + 1, n):
            ge = 0
            le = 0
            for a, b in zip(row_i, rows[j]):
                if a >= b:
                    ge += 1
                if a <= b:
                    le += 1
            eq = ge + le - m
            dom[i] += ge
            sub[i] += le
            dom[j] += le
            sub[j] += ge
            equity[i] += eq
            equity[j] += eq
    return [
        CumulativeScores(alternative=a, dom=dom[k], sub=sub[k], equity=equity[k])
        for k, a in enumerate(fss.alternatives)
    ]


def decision_measures(
    scores: CumulativeScores, n_alternatives: int, n_attributes: int
) -> tuple[Fraction, int, Fraction]:
    """All three decision measures for one alternative's cumulative scores.

    gamma1 and gamma3 are reduced exact rationals; gamma2 is a signed integer.
    Raises :class:`DegenerateScoresError` when a divisor is zero or the totals
    cannot come from an (n_alternatives x n_attributes) instance.
    """
    if scores.sub <= 0 or scores.equity <= 0:
        raise DegenerateScoresError(
            f"scores for {scores.alternative!r} have zero subjection or equity"
        )
    if scores.dom + scores.sub != n_alternatives * n_attributes + scores.equity:
        raise DegenerateScoresError(
            f"scores for {scores.alternative!r} violate dom + sub = n*m + equity"
        )
    gamma1 = Fraction(scores.dom * scores.equity, scores.sub)
    gamma2 = scores.dom - scores.sub
    gamma3 = Fraction(scores.dom + scores.sub, scores.equity)
    return gamma1, gamma2, gamma3


@dataclass(frozen=True)
class DecisionRow:
    """One alternative's measure values plus its position in the ranking."""

    alternative: str
    gamma1: Fraction
    gamma2: int
    gamma3: Fraction
    rank: int
    tie_group: int

    def value(self, measure: Measure) -> Fraction | int:
        if measure is Measure.G1:
            return self.gamma1
        if measure is Measure.G2:
            return self.gamma2
        return self.gamma3


@dataclass(frozen=True)
class DecisionTable:
    """Alternatives sorted by the selected measure, ties grouped explicitly."""

    measure: Measure
    rows: tuple[DecisionRow, ...]
    source_digest: str

    def row_for(self, alternative: str) -> DecisionRow:
        for row in self.rows:
            if row.alternative == alternative:
                return row
        raise UnknownAlternativeError(f"unknown alternative {alternative!r}")


def rank(fss: FuzzySoftSet, measure: Measure = Measure.G1) -> DecisionTable:
    """Rank all alternatives by the selected measure, descending.

    The sort is stable, so alternatives with exactly equal measure values keep
    their input order and share a tie group id.  All three measure values are
    populated on every row regardless of the selected measure.
    """
    n = fss.n_alternatives
    m = fss.n_attributes
    scores = cumulative_scores(fss)
    measured = [decision_measures(s, n, m) for s in scores]

    def key(k: int) -> Fraction | int:
        g1, g2, g3 = measured[k]
        return {Measure.G1: g1, Measure.G2: g2, Measure.G3: g3}[measure]

    order = sorted(range(n), key=key, reverse=True)
    rows = []
    tie_group = 0
    previous = None
    for position, k in enumerate(order):
        value = key(k)
        if previous is None or value != previous:
            tie_group += 1
        previous = value
        g1, g2, g3 = measured[k]
        rows.append(
            DecisionRow(
                alternative=fss.alternatives[k],
                gamma1=g1,
                gamma2=g2,
                gamma3=g3,
                rank=position + 1,
                tie_group=tie_group,
            )
        )
    return DecisionTable(measure=measure, rows=tuple(rows), source_digest=fss.digest())


def restrict_attributes(fss: FuzzySoftSet, keep: Iterable[str]) -> FuzzySoftSet:
    """Project onto a subset of attributes, preserving column order.

    Models incomplete information: an undecided or unknown criterion is
    eliminated wholesale rather than left as a hole in the matrix.
    """
    keep_set = set(keep)
    if not keep_set:
        raise EmptyAttributeSetError("cannot restrict to an empty attribute set")
    known = set(fss.attributes)
    for attribute in sorted(keep_set):
        if attribute not in known:
            raise UnknownAttributeError(f"unknown attribute {attribute!r}")
    positions = [k for k, e in enumerate(fss.attributes) if e in keep_set]
    return FuzzySoftSet(
        alternatives=fss.alternatives,
        attributes=tuple(fss.attributes[k] for k in positions),
        grades=tuple(tuple(row[k] for k in positions) for row in fss.grades),
        attribute_labels=(
            tuple(fss.attribute_labels[k] for k in positions)
            if fss.attribute_labels is not None
            else None
        ),
    )


@dataclass(frozen=True)
class OpponentComparison:
    """rho/chi/eq of one pairing, with attributes in source column order."""

    opponent: str
    rho: tuple[str, ...]
    chi: tuple[str, ...]
    eq: tuple[str, ...]


@dataclass(frozen=True)
class ExplanationReport:
    """Why an alternative ranks where it does: its comparison row, cumulative
    scores and all three measure values."""

    alternative: str
    attributes: tuple[str, ...]
    attribute_labels: tuple[str, ...] | None
    opponents: tuple[OpponentComparison, ...]
    scores: CumulativeScores
    gamma1: Fraction
    gamma2: int
    gamma3: Fraction


def explain(fss: FuzzySoftSet, alternative: str) -> ExplanationReport:
    """Per-opponent comparison sets plus scores and measures for one alternative."""
    pos = fss.alternative_position(alternative)
    ordered = {e: k for k, e in enumerate(fss.attributes)}

    def in_order(attrs: frozenset[str]) -> tuple[str, ...]:
        return tuple(sorted(attrs, key=ordered.__getitem__))

    opponents = []
    for other in fss.alternatives:
        if other == alternative:
            continue
        cell = compare(fss, alternative, other)
        opponents.append(
            OpponentComparison(
                opponent=other,
                rho=in_order(cell.rho),
                chi=in_order(cell.chi),
                eq=in_order(cell.eq),
            )
        )
    scores = cumulative_scores(fss)[pos]
    gamma1, gamma2, gamma3 = decision_measures(
        scores, fss.n_alternatives, fss.n_attributes
    )
    return ExplanationReport(
        alternative=alternative,
        attributes=fss.attributes,
        attribute_labels=fss.attribute_labels,
        opponents=tuple(opponents),
        scores=scores,
        gamma1=gamma1,
        gamma2=gamma2,
        gamma3=gamma3,
    )
