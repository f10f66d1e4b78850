from pathlib import Path

import pytest

from fsprank import io as fio

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def example_csv_bytes() -> bytes:
    return (FIXTURES / "example.csv").read_bytes()


@pytest.fixture(scope="session")
def example_json_bytes() -> bytes:
    return (FIXTURES / "example.json").read_bytes()


@pytest.fixture(scope="session")
def example_fss(example_csv_bytes):
    return fio.parse_assessment(example_csv_bytes, "csv")


def fixture_path(name: str) -> Path:
    return FIXTURES / name
