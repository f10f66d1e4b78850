import json
from fractions import Fraction

import pytest

import golden
from fsprank import (
    DuplicateIdError,
    GradeOutOfRangeError,
    Measure,
    ParseError,
    rank,
)
from fsprank import io as fio
from conftest import fixture_path


def test_parse_csv_fixture(example_csv_bytes, example_fss):
    fss = fio.parse_assessment(example_csv_bytes, "csv")
    assert fss == example_fss
    assert fss.alternatives == golden.ALTS


def test_parse_json_fixture(example_json_bytes, example_fss):
    assert fio.parse_assessment(example_json_bytes, "json") == example_fss


def test_csv_round_trip(example_csv_bytes):
    doc = fio.parse_assessment_document(example_csv_bytes, "csv")
    assert fio.parse_assessment_document(fio.emit_assessment(doc), "csv") == doc


def test_json_round_trip_with_labels_and_metadata():
    doc = fio.AssessmentDocument(
        alternatives=("a", "b"),
        attributes=("e1", "e2"),
        grades=(("0.70", "1.0"), ("0.2", "0.9")),
        labels=("first criterion", "second criterion"),
        metadata={"assessor": "panel", "round": "2"},
        format="json",
    )
    emitted = fio.emit_assessment(doc)
    parsed = fio.parse_assessment_document(emitted, "json")
    assert parsed == doc
    # grade text survives verbatim, including trailing zeros
    assert parsed.grades[0][0] == "0.70"


def test_fss_round_trip_by_value(example_fss):
    doc = fio.document_from_fss(example_fss, format="json")
    again = fio.parse_assessment(fio.emit_assessment(doc), "json")
    assert again == example_fss


def test_csv_missing_cell_names_position():
    text = b",e1,e2\na,0.1\n"
    with pytest.raises(ParseError, match=r"row 2, column 3"):
        fio.parse_assessment_document(text, "csv")


def test_csv_empty_cell_names_position():
    text = b",e1,e2\na,0.1,\n"
    with pytest.raises(ParseError, match=r"row 2, column 3"):
        fio.parse_assessment_document(text, "csv")


def test_csv_bad_grade_carries_position():
    text = b",e1\na,1.2\n"
    with pytest.raises(GradeOutOfRangeError, match=r"row 2, column 2"):
        fio.parse_assessment_document(text, "csv")


def test_csv_corner_cell_must_be_empty():
    with pytest.raises(ParseError, match=r"row 1, column 1"):
        fio.parse_assessment_document(b"id,e1\na,0.1\n", "csv")


def test_csv_duplicate_alternative():
    text = b",e1\na,0.1\na,0.2\n"
    with pytest.raises(DuplicateIdError):
        fio.parse_assessment(text, "csv")


def test_json_syntax_error_position():
    with pytest.raises(ParseError, match=r"line 1"):
        fio.parse_assessment_document(b"{not json", "json")


def test_json_schema_errors():
    with pytest.raises(ParseError, match="alternatives"):
        fio.parse_assessment_document(b'{"attributes": [], "grades": []}', "json")
    bad_grade = {"alternatives": ["a"], "attributes": ["e"], "grades": [[None]]}
    with pytest.raises(ParseError, match=r"grades\[0\]\[0\]"):
        fio.parse_assessment_document(json.dumps(bad_grade).encode(), "json")


def test_emit_decision_table_golden_csv(example_fss):
    table = rank(example_fss, Measure.G1)
    emitted = fio.emit_decision_table(table, "csv")
    assert emitted == fixture_path("expected/rank_g1.csv").read_bytes()
    first = emitted.decode().splitlines()[1].split(",")
    assert first[1] == "ψ5"
    assert first[4] == "19.2000"
    assert first[5] == "6"
    assert first[7] == "4.1250"


def test_emit_decision_table_golden_json(example_fss):
    table = rank(example_fss, Measure.G1)
    emitted = fio.emit_decision_table(table, "json")
    assert emitted == fixture_path("expected/rank_g1.json").read_bytes()
    payload = json.loads(emitted)
    assert payload["rows"][0]["gamma1"] == "96/5"
    assert payload["measure"] == "G1"
    assert payload["source_digest"] == example_fss.digest()


def test_emit_deterministic(example_fss):
    table = rank(example_fss, Measure.G2)
    assert fio.emit_decision_table(table, "csv") == fio.emit_decision_table(table, "csv")
    assert fio.emit_decision_table(table, "json") == fio.emit_decision_table(table, "json")


def test_emitted_json_reparses_to_same_structure(example_fss):
    table = rank(example_fss, Measure.G3)
    payload = json.loads(fio.emit_decision_table(table, "json"))
    assert [r["alternative"] for r in payload["rows"]] == list(golden.G3_ORDER)
    assert [r["rank"] for r in payload["rows"]] == [1, 2, 3, 4, 5]
    again = json.loads(fio.emit_decision_table(table, "json"))
    assert again == payload


def test_format_fraction():
    assert fio.format_fraction(Fraction(96, 5)) == "19.2000"
    assert fio.format_fraction(Fraction(130, 11)) == "11.8182"
    assert fio.format_fraction(Fraction(-3)) == "-3.0000"
    assert fio.format_fraction(Fraction(1, 3), places=2) == "0.33"
    assert fio.format_fraction(Fraction(1, 80)) == "0.0125"
    assert fio.format_fraction(0) == "0.0000"


def test_fraction_ratio():
    assert fio.fraction_ratio(Fraction(96, 5)) == "96/5"
    assert fio.fraction_ratio(7) == "7/1"
    assert fio.fraction_ratio(Fraction(-6, 4)) == "-3/2"


def test_unknown_formats_rejected(example_fss):
    with pytest.raises(ParseError):
        fio.parse_assessment(b"", "xml")
    with pytest.raises(ParseError):
        fio.emit_decision_table(rank(example_fss), "yaml")
