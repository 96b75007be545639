import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): an acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, text = mark.args
            item.user_properties.append(("criterion", (number, text)))


def pytest_runtest_logreport(report):
    if report.when != "call" and report.outcome == "passed":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), outcome in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {text}")


@pytest.fixture
def rng():
    import random

    return random.Random(20240607)
