import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from yutsis.catalog import build_catalog  # noqa: E402
from yutsis.enumeration import enumerate_cubic  # noqa: E402

ACCEPTANCE_RESULTS: dict = {}


@pytest.fixture(scope="session")
def catalog12():
    return build_catalog(12)


@pytest.fixture(scope="session")
def catalog14():
    return build_catalog(14)


@pytest.fixture(scope="session")
def graphs():
    return {n: enumerate_cubic(n) for n in (4, 6, 8, 10, 12, 14)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
