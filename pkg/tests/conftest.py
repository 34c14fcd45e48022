import time
from functools import lru_cache

import pytest

from indgen.analyze import analyze_database
from indgen.search import enumerate_classes

# Lines collected by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def enumerated(n: int):
    """(database, seconds) for a plain canonical-path enumeration."""
    t = time.perf_counter()
    db = enumerate_classes(n)
    return db, time.perf_counter() - t


@lru_cache(maxsize=None)
def analysed(n: int):
    return analyze_database(enumerated(n)[0])


@pytest.fixture(scope="session")
def dbs():
    return analysed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
