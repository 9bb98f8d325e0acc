import re
import time

import pytest

_START = time.perf_counter()
_CRITERIA: dict[int, tuple[str, float]] = {}
_NAME = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


@pytest.fixture(scope="session")
def session_clock() -> float:
    """perf_counter value taken when the test session was configured."""
    return _START


def pytest_collection_modifyitems(items):
    # the wall-clock criterion has to see every other test finish first
    last = [i for i in items if i.name.startswith("test_criterion_10")]
    rest = [i for i in items if i not in last]
    items[:] = rest + last


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        verdict, secs = _CRITERIA.get(n, ("PASS", 0.0))
        if not report.passed:
            verdict = "FAIL"
        _CRITERIA[n] = (verdict, secs + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        verdict, secs = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {verdict} ({secs:.2f}s)")
    terminalreporter.write_line(f"session wall clock so far: {time.perf_counter() - _START:.1f}s")
