"""Collects the per-pair acceptance results and prints one line per criterion."""
import pytest

from acceptance_log import RESULTS, summary_lines


@pytest.fixture(scope="session")
def acceptance_results():
    return RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
