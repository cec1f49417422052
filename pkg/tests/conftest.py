import pytest

from powersum import bernoulli_numbers, build_table

_acceptance_lines = []


@pytest.fixture(scope="session")
def table100():
    return build_table(100)


@pytest.fixture(scope="session")
def bernoulli100():
    return bernoulli_numbers(100)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "acceptance" not in report.keywords:
        return
    label = dict(report.user_properties).get("criterion", report.nodeid)
    status = "PASS" if report.passed else "FAIL"
    _acceptance_lines.append(f"{status}  {label}  ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
