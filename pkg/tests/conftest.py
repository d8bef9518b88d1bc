"""Shared fixtures and brute-force helpers.

The helpers here deliberately avoid the package's search code: automorphisms
come from ``itertools.permutations`` and distinguishing tests from checking
every group element.
"""

from __future__ import annotations

from itertools import permutations, product

import pytest

from distpoly.corpus import small_graphs
from distpoly.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = g.edges
    out = []
    for f in permutations(range(g.n)):
        if all((min(f[u], f[v]), max(f[u], f[v])) in edges for u, v in edges):
            out.append(f)
    return out


def brute_is_distinguishing(group, c) -> bool:
    n = len(c)
    ident = tuple(range(n))
    return not any(
        f != ident and all(c[f[v]] == c[v] for v in range(n)) for f in group
    )


def brute_count(g: Graph, k: int) -> int:
    group = brute_automorphisms(g)
    return sum(
        brute_is_distinguishing(group, c) for c in product(range(1, k + 1), repeat=g.n)
    )


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return small_graphs(6)


@pytest.fixture(scope="session")
def connected_corpus() -> list[Graph]:
    return small_graphs(6, connected_only=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
