import re
from functools import lru_cache

import pytest

from numdup.semigroup import enumerate_by_genus

_ACCEPTANCE = {}


@lru_cache(maxsize=None)
def corpus(genus_max):
    return tuple(enumerate_by_genus(genus_max))


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


@pytest.fixture(scope="session")
def corpus8():
    return corpus(8)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        _ACCEPTANCE[key] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {n} [{name.replace('_', ' ')}]: {outcome}")
