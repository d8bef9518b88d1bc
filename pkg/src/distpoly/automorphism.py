"""Automorphism groups, isomorphism and coloring/automorphism interaction.

One backtracking engine (``_iter_maps``) serves every search here: it maps
the vertices of graph A onto graph B, restricted to vertices with equal
stable colour-refinement cells.  Automorphisms use A = B; isomorphism runs
refinement on the disjoint pair so both sides share cell ids; the
colour-preserving search seeds refinement with the coloring.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import GroupTooLarge
from .graph import Graph

Permutation = tuple[int, ...]
Coloring = Sequence[int]

DEFAULT_CAP = 10**6


# -- permutations ---------------------------------------------------------------


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """``f o g``: apply g first, then f."""
    return tuple(f[x] for x in g)


def inverse(f: Permutation) -> Permutation:
    inv = [0] * len(f)
    for i, x in enumerate(f):
        inv[x] = i
    return tuple(inv)


def is_permutation(f: Sequence[int]) -> bool:
    return sorted(f) == list(range(len(f)))


def is_automorphism(g: Graph, f: Permutation) -> bool:
    if len(f) != g.n or not is_permutation(f):
        return False
    return all((min(f[u], f[v]), max(f[u], f[v])) in g.edges for u, v in g.edges)


@dataclass(frozen=True)
class AutGroup:
    """Explicit list of permutations of ``range(n)``, lexicographically sorted."""

    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f) -> bool:
        return tuple(f) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        # frozen dataclass: memoize through __dict__ directly
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = frozenset(self.elements)
            self.__dict__["_lookup_cache"] = cache
        return cache

    def is_group(self) -> bool:
        """Identity present, closed under composition and inverses."""
        if identity(self.n) not in self:
            return False
        for f in self.elements:
            if inverse(f) not in self:
                return False
            for g in self.elements:
                if compose(f, g) not in self:
                    return False
        return True


# -- refinement + backtracking ----------------------------------------------------


def _rank(items: Sequence) -> list[int]:
    table = {x: i for i, x in enumerate(sorted(set(items)))}
    return [table[x] for x in items]


def refine(adj: Sequence[frozenset[int]], labels: Sequence) -> list[int]:
    """Iterated colour refinement to a stable partition.

    Cell ids depend only on the labelled graph up to isomorphism, so two
    graphs refined together as a disjoint union get comparable ids.
    """
    n = len(adj)
    cells = _rank(list(labels))
    count = len(set(cells))
    while True:
        sig = [(cells[v], tuple(sorted(cells[u] for u in adj[v]))) for v in range(n)]
        new = _rank(sig)
        new_count = len(set(new))
        if new_count == count:
            return new
        cells, count = new, new_count


def _search_order(adj, cells, first: Sequence[int]) -> list[int]:
    """Greedy order: forced vertices, then most already-placed neighbours."""
    n = len(adj)
    size = defaultdict(int)
    for c in cells:
        size[c] += 1
    order = list(first)
    placed = [False] * n
    links = [0] * n
    for v in order:
        placed[v] = True
        for u in adj[v]:
            links[u] += 1
    while len(order) < n:
        v = min(
            (u for u in range(n) if not placed[u]),
            key=lambda u: (-links[u], size[cells[u]], u),
        )
        order.append(v)
        placed[v] = True
        for u in adj[v]:
            links[u] += 1
    return order


def _iter_maps(
    adj_a: Sequence[frozenset[int]],
    adj_b: Sequence[frozenset[int]],
    cells_a: Sequence[int],
    cells_b: Sequence[int],
    fixed: dict[int, int] | None = None,
) -> Iterator[Permutation]:
    """All bijections A -> B that preserve adjacency and cell ids."""
    n = len(adj_a)
    if n != len(adj_b) or sorted(cells_a) != sorted(cells_b):
        return
    fixed = fixed or {}
    for v, w in fixed.items():
        if cells_a[v] != cells_b[w]:
            return
    by_cell = defaultdict(list)
    for w in range(n):
        by_cell[cells_b[w]].append(w)
    order = _search_order(adj_a, cells_a, list(fixed))
    mapping = [-1] * n
    used = [False] * n

    def candidates(v):
        if v in fixed:
            return (fixed[v],)
        return by_cell[cells_a[v]]

    def consistent(v, w):
        images = [mapping[u] for u in adj_a[v] if mapping[u] >= 0]
        nb = adj_b[w]
        if any(x not in nb for x in images):
            return False
        return sum(1 for x in nb if used[x]) == len(images)

    def rec(depth):
        if depth == n:
            yield tuple(mapping)
            return
        v = order[depth]
        for w in candidates(v):
            if used[w] or not consistent(v, w):
                continue
            mapping[v], used[w] = w, True
            yield from rec(depth + 1)
            mapping[v], used[w] = -1, False

    yield from rec(0)


def automorphisms(g: Graph, cap: int = DEFAULT_CAP) -> AutGroup:
    """Full automorphism group by backtracking; raises ``GroupTooLarge`` past ``cap``."""
    cells = refine(g.adj, [0] * g.n)
    found = []
    for f in _iter_maps(g.adj, g.adj, cells, cells):
        found.append(f)
        if len(found) > cap:
            raise GroupTooLarge(cap, len(found))
    return AutGroup(g.n, tuple(sorted(found)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n == 0:
        return True
    # refine the disjoint pair so cell ids are shared
    shift = g.n
    adj = list(g.adj) + [frozenset(x + shift for x in nb) for nb in h.adj]
    cells = refine(adj, [0] * (2 * g.n))
    adj_b = tuple(h.adj)
    return next(_iter_maps(g.adj, adj_b, cells[:shift], cells[shift:]), None) is not None


def find_isomorphism(g: Graph, h: Graph) -> Permutation | None:
    """A vertex map f with f(g) = h, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    shift = g.n
    adj = list(g.adj) + [frozenset(x + shift for x in nb) for nb in h.adj]
    cells = refine(adj, [0] * (2 * g.n))
    return next(_iter_maps(g.adj, h.adj, cells[:shift], cells[shift:]), None)


def orbits(group: AutGroup | Sequence[Permutation], n: int) -> list[tuple[int, ...]]:
    """Vertex orbits of a permutation group, blocks sorted by least element."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in group:
        for v in range(n):
            a, b = find(v), find(f[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks = defaultdict(list)
    for v in range(n):
        blocks[find(v)].append(v)
    return sorted(tuple(b) for b in blocks.values())


def vertex_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Orbits of Aut(g) without materialising the group.

    Tests, per refinement cell, whether some automorphism maps the cell's
    representative to each other member.  Works for groups far beyond the
    enumeration cap (K_12 and the like).
    """
    cells = refine(g.adj, [0] * g.n)
    members = defaultdict(list)
    for v in range(g.n):
        members[cells[v]].append(v)
    blocks = []
    for vs in members.values():
        pending = list(vs)
        while pending:
            rep = pending.pop(0)
            block, rest = [rep], []
            for w in pending:
                hit = next(_iter_maps(g.adj, g.adj, cells, cells, {rep: w}), None)
                (block if hit is not None else rest).append(w)
            blocks.append(tuple(sorted(block)))
            pending = rest
    return sorted(blocks)


# -- colorings ------------------------------------------------------------------


def supports(c: Coloring, f: Permutation) -> bool:
    """True iff c(f(v)) = c(v) for every vertex v."""
    if len(c) != len(f):
        raise ValueError("coloring and permutation lengths differ")
    return all(c[f[v]] == c[v] for v in range(len(f)))


def stabilizer(group: AutGroup, c: Coloring) -> AutGroup:
    return AutGroup(group.n, tuple(f for f in group.elements if supports(c, f)))


def equivalent_coloring(c: Coloring, f: Permutation) -> tuple[int, ...]:
    """The coloring c' with c'(f(v)) = c(v)."""
    out = [0] * len(c)
    for v, x in enumerate(f):
        out[x] = c[v]
    return tuple(out)


def has_color_preserving_automorphism(g: Graph, c: Coloring) -> bool:
    """True iff some non-identity automorphism of g is supported by c.

    Searches only colour-class-respecting maps; no group is precomputed.
    c is distinguishing exactly when this is False.
    """
    if len(c) != g.n:
        raise ValueError("coloring length does not match the graph")
    cells = refine(g.adj, c)
    if len(set(cells)) == g.n:
        return False
    ident = identity(g.n)
    return any(f != ident for f in _iter_maps(g.adj, g.adj, cells, cells))


def is_distinguishing(g: Graph, c: Coloring) -> bool:
    return not has_color_preserving_automorphism(g, c)


# -- dihedral group of C_n ------------------------------------------------------


class DihedralLabel(NamedTuple):
    """``kind`` is "rotation" (index = shift), "vertex" (rho_i, 1-based i) or
    "edge" (rho_{i,i+1}, 1-based i, even n only)."""

    kind: str
    index: int

    def __str__(self) -> str:
        if self.kind == "rotation":
            return f"r{self.index}"
        if self.kind == "vertex":
            return f"rho_{self.index}"
        return f"rho_{self.index},{self.index + 1}"


def rotation(n: int, shift: int) -> Permutation:
    return tuple((v + shift) % n for v in range(n))


def reflection(n: int, kind: str, i: int) -> Permutation:
    """rho_i ("vertex") or rho_{i,i+1} ("edge") on C_n, vertices labelled 1..n."""
    a = (i - 1) % n
    if kind == "vertex":
        return tuple((2 * a - v) % n for v in range(n))
    if kind == "edge":
        if n % 2:
            raise ValueError("edge-type reflections are only used for even n")
        return tuple((2 * a + 1 - v) % n for v in range(n))
    raise ValueError(f"unknown reflection kind {kind!r}")


@dataclass(frozen=True)
class DihedralGroup(AutGroup):
    labels: tuple[DihedralLabel, ...] = ()

    def label_of(self, f: Permutation) -> DihedralLabel:
        return self.labels[self.elements.index(tuple(f))]

    @property
    def rotations(self) -> list[Permutation]:
        return [f for f, lab in zip(self.elements, self.labels) if lab.kind == "rotation"]

    @property
    def reflections(self) -> list[Permutation]:
        return [f for f, lab in zip(self.elements, self.labels) if lab.kind != "rotation"]


def dihedral_elements(n: int) -> DihedralGroup:
    """The 2n symmetries of C_n.

    For even n, rho_i = rho_{i+n/2}, so vertex-type reflections are labelled
    by i in 1..n/2 and likewise edge-type ones.  For odd n every reflection
    passes through a vertex and is labelled rho_i, i in 1..n.
    """
    if n < 3:
        raise ValueError("dihedral_elements needs n >= 3")
    items = [(rotation(n, r), DihedralLabel("rotation", r)) for r in range(n)]
    if n % 2:
        items += [(reflection(n, "vertex", i), DihedralLabel("vertex", i)) for i in range(1, n + 1)]
    else:
        half = n // 2
        items += [(reflection(n, "vertex", i), DihedralLabel("vertex", i)) for i in range(1, half + 1)]
        items += [(reflection(n, "edge", i), DihedralLabel("edge", i)) for i in range(1, half + 1)]
    items.sort()
    return DihedralGroup(n, tuple(f for f, _ in items), tuple(lab for _, lab in items))
