import re

_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\w+)", report.nodeid)
    if m and report.when == "call":
        _results.append((m.group(1), "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _results:
        number, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {number.lstrip('0')} ({label.replace('_', ' ')}): {outcome}")
