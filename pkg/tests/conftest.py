import random

import pytest

from walkmat.graphs import Graph, random_graph

ACCEPTANCE_LINES = []


def record_criterion(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20221)


def small_graphs(rng, count, n_max, n_min=1):
    return [random_graph(rng.randint(n_min, n_max), rng) for _ in range(count)]


K1 = Graph(1)
K2 = Graph(2, frozenset({(0, 1)}))
C3 = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
# the five F* members on six vertices found by the exhaustive corpus scan
FSTAR_6 = ["EANg", "EELg", "EGcw", "EHuw", "EPVW"]
