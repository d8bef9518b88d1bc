"""Bundled test corpus: every simple graph on 1..6 vertices, one per
isomorphism class, in graph6 (208 graphs)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph import Graph, is_connected, parse_graph6_lines

# graphs per order n = 1..6, and connected ones
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


@lru_cache(maxsize=None)
def _bundled() -> tuple[Graph, ...]:
    text = resources.files(__package__).joinpath("data/graphs_upto6.g6").read_text()
    return tuple(parse_graph6_lines(text))


def small_graphs(max_n: int = 6, connected_only: bool = False) -> list[Graph]:
    return [
        g
        for g in _bundled()
        if g.n <= max_n and (not connected_only or is_connected(g))
    ]
