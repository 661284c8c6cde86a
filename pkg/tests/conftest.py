from pathlib import Path

import pytest

from surround.graph import read_graph6_lines

DATA = Path(__file__).parent / "data"

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on at most 6 vertices (143 graphs)."""
    return read_graph6_lines((DATA / "connected_le6.g6").read_text())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
