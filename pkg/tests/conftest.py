from __future__ import annotations

import pytest
from hypothesis import settings

# exact rational arithmetic makes example timings uneven
settings.register_profile("permgrowth", deadline=None)
settings.load_profile("permgrowth")

_criteria: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, text = marker.args
    measured = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    _criteria[number] = ("PASS" if report.passed else "FAIL", text, measured)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        flag, text, measured = _criteria[number]
        line = f"[{flag}] {number:2d}. {text}"
        if measured:
            line += f" | {measured}"
        terminalreporter.write_line(line)
