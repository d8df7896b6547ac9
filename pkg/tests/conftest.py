import random

import pytest

SAMPLE_TEXT = "caaacaabaabaabcabc"

_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        number, title = marker
        ok = report.outcome == "passed"
        _criteria[number] = (title, _criteria.get(number, (None, True))[1] and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def sample_text():
    return SAMPLE_TEXT


def random_text(rng: random.Random, n: int, sigma: int) -> bytes:
    alphabet = bytes(range(ord("a"), ord("a") + sigma))
    return bytes(rng.choice(alphabet) for _ in range(n))
