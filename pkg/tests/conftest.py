import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when != "call" and not report.failed:
        return
    # Parametrized criteria pass only if every case passes; durations add up.
    status = "FAIL" if report.failed else ("SKIP" if report.skipped else "PASS")
    previous, _, spent = _CRITERIA.get(number, ("PASS", title, 0.0))
    if previous == "FAIL":
        status = "FAIL"
    _CRITERIA[number] = (status, title, spent + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, duration = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({duration:.2f}s)")
