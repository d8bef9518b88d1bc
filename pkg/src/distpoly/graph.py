"""Simple undirected graphs on vertices ``0..n-1`` and their text formats."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    Edges are stored once, as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, images: Sequence[int]) -> Graph:
        """Image of this graph under the vertex bijection ``i -> images[i]``."""
        return Graph(self.n, frozenset((images[u], images[v]) for u, v in self.edges))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            frozenset(
                (index[u], index[v]) for u, v in self.edges if u in index and v in index
            ),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# -- constructors ---------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """Star with ``leaves + 1`` vertices; vertex 0 is the centre."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = set(), 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    cross = {(a, g.n + b) for a in range(g.n) for b in range(h.n)}
    return Graph(u.n, u.edges | cross)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return complement(disjoint_union(*(complete_graph(s) for s in sizes)))


def wheel_graph(spokes: int) -> Graph:
    """Cycle C_spokes joined with one hub (the hub is the last vertex)."""
    return join(cycle_graph(spokes), Graph(1))


# -- structure ------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(
        g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges)
    )


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected pieces ordered by smallest original vertex.

    Each piece comes with the tuple of original vertex indices, so that
    vertex ``i`` of the piece is ``vmap[i]`` of ``g``.
    """
    seen = [False] * g.n
    pieces = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        vmap = tuple(sorted(comp))
        pieces.append((g.induced(vmap), vmap))
    return pieces


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# -- edge-list text format ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    n = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"expected 'n <count>', got {raw.strip()!r}", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}: {raw.strip()!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode N(n); returns (n, bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"graph6 byte {b} at offset {pos} outside 63..126")
    n, off = _g6_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 length mismatch: n={n} needs {(nbits + 5) // 6} data bytes, got {len(body)}"
        )
    edges = set()
    bit = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.add((u, v))
            bit += 1
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (u, v) in g.edges else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-blank line."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return graphs
