import sys
from pathlib import Path

import pytest

# helper modules (kostka oracle) live next to the tests
sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or rep.failed:
        prev = _CRITERIA.get(number)
        passed = rep.passed and (prev is None or prev[1])
        _CRITERIA[number] = (title, passed, rep.duration if rep.when == "call" else 0.0)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, secs = _CRITERIA[number]
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{tag} criterion {number:2d}: {title} ({secs:.2f}s)")
