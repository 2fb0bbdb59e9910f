from __future__ import annotations

import random

import pytest

from spiderslide import build_tree, spider_from_legs

# criterion lines collected by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_graph(n: int):
    return build_tree(n, [(k, k + 1) for k in range(n - 1)])


def random_tree(n: int, rng: random.Random):
    edges = [(k, rng.randrange(k)) for k in range(1, n)]
    return build_tree(n, edges)


@pytest.fixture
def spider222():
    """Three legs of length two: a = (1, 2), b = (3, 4), c = (5, 6)."""
    return spider_from_legs([2, 2, 2])


@pytest.fixture
def spider112():
    """Body 1 with legs (0), (2) and (3, 4)."""
    from spiderslide import build_spider

    return build_spider(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
