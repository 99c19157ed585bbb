import pytest

from bhgreedy import Params, classic_greedy, strong_greedy

#: The (h, g) generation grid exercised by the acceptance suite.
GRID = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]


@pytest.fixture(scope="session")
def grid_strong_30():
    """Strong runs at 30 terms on the full grid, generated once."""
    return {(h, g): strong_greedy(Params(h, g, 30)) for h, g in GRID}


@pytest.fixture(scope="session")
def pair_2_1_50():
    """strong and classic runs at (h=2, g=1, 50 terms)."""
    return (
        strong_greedy(Params(2, 1, 50)),
        classic_greedy(Params(2, 1, 50)),
    )


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    lines = []
    for status in ("passed", "failed"):
        for rep in tr.stats.get(status, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], status.upper()))
    if lines:
        tr.write_sep("=", "acceptance criteria")
        for name, status in sorted(lines):
            tr.write_line(f"{name}: {status}")
