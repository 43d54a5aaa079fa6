"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

import pytest

_outcomes: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or rep.failed or rep.skipped:
        verdict = "PASS" if rep.passed and not hasattr(rep, "wasxfail") else "FAIL"
        previous = _outcomes.get(number, ("PASS", title))[0]
        # several tests may share a criterion; any failure fails it
        _outcomes[number] = ("FAIL" if "FAIL" in (verdict, previous) else "PASS", title)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        verdict, title = _outcomes[number]
        terminalreporter.write_line(f"{verdict} criterion {number}: {title}")
