import pytest

from judicious.core import Hypergraph3, Tripartition
from judicious.generators import grid3, grid3_rows, named, tight15

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, text = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (text, "PASS" if report.passed else report.outcome.upper())


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")


@pytest.fixture
def g_grid():
    return grid3()


@pytest.fixture
def g_tight():
    return tight15()


@pytest.fixture
def single_edge():
    return Hypergraph3(3, ((0, 1, 2),))


@pytest.fixture
def rows_partition():
    return Tripartition.from_parts(9, grid3_rows())


@pytest.fixture
def tight_partition():
    return Tripartition.from_parts(7, (named("adg"), named("be"), named("cf")))
