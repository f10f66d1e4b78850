"""Stable CSV and JSON wire formats for assessments and decision tables.

CSV dialect: comma separated, UTF-8, LF line endings, first header cell empty,
attribute ids across the header, one alternative per row.  Grade text is kept
verbatim in :class:`AssessmentDocument` so parse(emit(doc)) round-trips without
ever touching binary floating point.

JSON schema for assessments::

    {
      "alternatives": ["a1", ...],
      "attributes": [{"id": "e1", "label": "optional text"}, ...],
      "grades": [["0.7", "1.0", ...], ...],
      "metadata": {"key": "value", ...}
    }

Decision tables are emitted with rationals in both exact "p/q" form and as
4-place decimals; identical inputs always produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .core import DecisionTable, ExplanationReport, FuzzySoftSet, Grade, new_fuzzy_soft_set
from .errors import ParseError, FsprankError

CSV_FORMAT = "csv"
JSON_FORMAT = "json"


def format_fraction(value: Fraction | int, places: int = 4) -> str:
    """Decimal text of an exact rational, rounded (half-even) to ``places``."""
    scaled = Fraction(value) * 10**places
    units = round(scaled)  # exact: Fraction.__round__ is integer arithmetic
    sign = "-" if units < 0 else ""
    digits = str(abs(units)).zfill(places + 1)
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def fraction_ratio(value: Fraction | int) -> str:
    """Exact "p/q" text of a rational (denominator kept even when 1)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class AssessmentDocument:
    """Parsed assessment with grade text preserved to its declared precision."""

    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]
    grades: tuple[tuple[str, ...], ...]
    labels: tuple[str, ...] | None = None
    metadata: Mapping[str, str] = field(default_factory=dict)
    format: str = CSV_FORMAT

    def to_fuzzy_soft_set(self) -> FuzzySoftSet:
        return new_fuzzy_soft_set(
            self.alternatives, self.attributes, self.grades, self.labels
        )


def document_from_fss(
    fss: FuzzySoftSet,
    metadata: Mapping[str, str] | None = None,
    format: str = CSV_FORMAT,
) -> AssessmentDocument:
    """Snapshot a fuzzy soft set as a document with canonical grade text."""
    return AssessmentDocument(
        alternatives=fss.alternatives,
        attributes=fss.attributes,
        grades=tuple(tuple(g.text for g in row) for row in fss.grades),
        labels=fss.attribute_labels,
        metadata=dict(metadata or {}),
        format=format,
    )


def _require_format(format: str) -> str:
    if format not in (CSV_FORMAT, JSON_FORMAT):
        raise ParseError(f"unknown format {format!r}; expected 'csv' or 'json'")
    return format


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data


def _parse_csv_document(text: str) -> AssessmentDocument:
    rows = list(csv.reader(text.splitlines()))
    rows = [r for r in rows if r]  # ignore trailing blank lines
    if not rows:
        raise ParseError("row 1: empty document")
    header = rows[0]
    if header[0].strip():
        raise ParseError("row 1, column 1: expected an empty corner cell")
    attributes = [cell.strip() for cell in header[1:]]
    for c, attribute in enumerate(attributes, start=2):
        if not attribute:
            raise ParseError(f"row 1, column {c}: missing cell")
    alternatives: list[str] = []
    grades: list[tuple[str, ...]] = []
    expected = len(header)
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != expected:
            column = min(len(row) + 1, expected)
            raise ParseError(
                f"row {r}, column {column}: expected {expected - 1} grades, got {len(row) - 1}"
            )
        alternative = row[0].strip()
        if not alternative:
            raise ParseError(f"row {r}, column 1: missing alternative id")
        cells = []
        for c, cell in enumerate(row[1:], start=2):
            cell = cell.strip()
            if not cell:
                raise ParseError(f"row {r}, column {c}: missing cell")
            try:
                Grade.parse(cell)
            except FsprankError as exc:
                raise type(exc)(f"row {r}, column {c}: {exc}") from None
            cells.append(cell)
        alternatives.append(alternative)
        grades.append(tuple(cells))
    return AssessmentDocument(
        alternatives=tuple(alternatives),
        attributes=tuple(attributes),
        grades=tuple(grades),
        labels=None,
        metadata={},
        format=CSV_FORMAT,
    )


def _parse_json_document(text: str) -> AssessmentDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(payload, dict):
        raise ParseError("top-level JSON value must be an object")

    alternatives = payload.get("alternatives")
    if not isinstance(alternatives, list) or not all(isinstance(a, str) for a in alternatives):
        raise ParseError("field 'alternatives' must be an array of strings")

    raw_attributes = payload.get("attributes")
    if not isinstance(raw_attributes, list):
        raise ParseError("field 'attributes' must be an array")
    attributes: list[str] = []
    labels: list[str] = []
    labelled = False
    for k, entry in enumerate(raw_attributes):
        if isinstance(entry, str):
            attributes.append(entry)
            labels.append(entry)
        elif isinstance(entry, dict) and isinstance(entry.get("id"), str):
            attributes.append(entry["id"])
            label = entry.get("label", entry["id"])
            if not isinstance(label, str):
                raise ParseError(f"attributes[{k}].label must be a string")
            if "label" in entry:
                labelled = True
            labels.append(label)
        else:
            raise ParseError(f"attributes[{k}] must be a string or an object with an 'id'")

    raw_grades = payload.get("grades")
    if not isinstance(raw_grades, list):
        raise ParseError("field 'grades' must be an array of arrays")
    grades: list[tuple[str, ...]] = []
    for r, row in enumerate(raw_grades):
        if not isinstance(row, list):
            raise ParseError(f"grades[{r}] must be an array")
        cells = []
        for c, cell in enumerate(row):
            if isinstance(cell, str):
                text_cell = cell
            elif isinstance(cell, (int, float)) and not isinstance(cell, bool):
                text_cell = repr(cell)
            else:
                raise ParseError(f"grades[{r}][{c}] must be a decimal string")
            try:
                Grade.parse(text_cell)
            except FsprankError as exc:
                raise type(exc)(f"grades[{r}][{c}]: {exc}") from None
            cells.append(text_cell)
        grades.append(tuple(cells))

    metadata = payload.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise ParseError("field 'metadata' must be an object of string values")

    return AssessmentDocument(
        alternatives=tuple(alternatives),
        attributes=tuple(attributes),
        grades=tuple(grades),
        labels=tuple(labels) if labelled else None,
        metadata=dict(metadata),
        format=JSON_FORMAT,
    )


def parse_assessment_document(data: bytes | str, format: str = CSV_FORMAT) -> AssessmentDocument:
    """Parse assessment bytes into a document without validating the matrix."""
    _require_format(format)
    text = _as_text(data)
    if format == CSV_FORMAT:
        return _parse_csv_document(text)
    return _parse_json_document(text)


def parse_assessment(data: bytes | str, format: str = CSV_FORMAT) -> FuzzySoftSet:
    """Parse and validate an assessment into a :class:`FuzzySoftSet`."""
    return parse_assessment_document(data, format).to_fuzzy_soft_set()


def emit_assessment(doc: AssessmentDocument, format: str | None = None) -> bytes:
    """Serialize a document; defaults to the format it was parsed from."""
    format = _require_format(format or doc.format)
    if format == CSV_FORMAT:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([""] + list(doc.attributes))
        for alternative, row in zip(doc.alternatives, doc.grades):
            writer.writerow([alternative] + list(row))
        return out.getvalue().encode("utf-8")
    attributes: list[Any] = []
    for k, attribute in enumerate(doc.attributes):
        if doc.labels is not None:
            attributes.append({"id": attribute, "label": doc.labels[k]})
        else:
            attributes.append({"id": attribute})
    payload = {
        "alternatives": list(doc.alternatives),
        "attributes": attributes,
        "grades": [list(row) for row in doc.grades],
        "metadata": dict(doc.metadata),
    }
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


_TABLE_FIELDS = (
    "rank",
    "alternative",
    "tie_group",
    "gamma1",
    "gamma1_decimal",
    "gamma2",
    "gamma3",
    "gamma3_decimal",
)


def _table_row_payload(row) -> dict[str, Any]:
    return {
        "rank": row.rank,
        "alternative": row.alternative,
        "tie_group": row.tie_group,
        "gamma1": fraction_ratio(row.gamma1),
        "gamma1_decimal": format_fraction(row.gamma1),
        "gamma2": row.gamma2,
        "gamma3": fraction_ratio(row.gamma3),
        "gamma3_decimal": format_fraction(row.gamma3),
    }


def emit_decision_table(table: DecisionTable, format: str = CSV_FORMAT) -> bytes:
    """Serialize a decision table deterministically, rows in rank order."""
    _require_format(format)
    if format == CSV_FORMAT:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_TABLE_FIELDS)
        for row in table.rows:
            payload = _table_row_payload(row)
            writer.writerow([payload[name] for name in _TABLE_FIELDS])
        return out.getvalue().encode("utf-8")
    payload = {
        "measure": table.measure.value,
        "source_digest": table.source_digest,
        "rows": [_table_row_payload(row) for row in table.rows],
    }
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def explanation_payload(report: ExplanationReport) -> dict[str, Any]:
    """JSON-ready view of an explanation (shared by the CLI and the service)."""
    return {
        "alternative": report.alternative,
        "scores": {
            "dom": report.scores.dom,
            "sub": report.scores.sub,
            "equity": report.scores.equity,
        },
        "gamma1": fraction_ratio(report.gamma1),
        "gamma1_decimal": format_fraction(report.gamma1),
        "gamma2": report.gamma2,
        "gamma3": fraction_ratio(report.gamma3),
        "gamma3_decimal": format_fraction(report.gamma3),
        "opponents": [
            {
                "opponent": o.opponent,
                "rho": list(o.rho),
                "chi": list(o.chi),
                "eq": list(o.eq),
            }
            for o in report.opponents
        ],
        "attribute_labels": {
            e: (report.attribute_labels[k] if report.attribute_labels else e)
            for k, e in enumerate(report.attributes)
        },
    }
