import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
FIXTURES = TESTS_DIR.parent / "fixtures"

sys.path.insert(0, str(TESTS_DIR))

from dnl.model import parse_label  # noqa: E402


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def covid_bytes() -> bytes:
    return (FIXTURES / "covid.label.json").read_bytes()


@pytest.fixture(scope="session")
def evictions_bytes() -> bytes:
    return (FIXTURES / "evictions.label.json").read_bytes()


@pytest.fixture
def covid_label(covid_bytes):
    return parse_label(covid_bytes)


@pytest.fixture
def evictions_label(evictions_bytes):
    return parse_label(evictions_bytes)
