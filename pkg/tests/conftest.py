import random

import pytest

from oatgraph import Graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph for oracle cross-checks."""
    rng = random.Random(f"gnp-{n}-{p}-{seed}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def gnp():
    return random_graph


# Verdict lines recorded by test_acceptance.py, echoed after capture ends.
acceptance_verdicts: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_verdicts:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_verdicts:
            terminalreporter.write_line(line)
