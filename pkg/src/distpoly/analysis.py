"""Orbit-level structure of distinguishing colorings.

Two distinguishing colorings are *similar* when they split every vertex
orbit into the same blocks.  The number of colorings sharing a given split
is a product of falling factorials, one per orbit, each divisible by k; this
is what forces k^q to divide the distinguishing polynomial.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Sequence

from .automorphism import Coloring, has_color_preserving_automorphism, vertex_orbits
from .graph import Graph
from .polynomial import IntPoly, falling_value, zero_multiplicity

Signature = tuple[tuple[tuple[int, ...], ...], ...]


def orbit_partition_signature(orbit_blocks: Sequence[Sequence[int]], c: Coloring) -> Signature:
    """Per orbit, the partition c induces on it (blocks sorted by least vertex)."""
    sig = []
    for orbit in orbit_blocks:
        groups: dict[int, list[int]] = {}
        for v in sorted(orbit):
            groups.setdefault(c[v], []).append(v)
        sig.append(tuple(sorted(tuple(b) for b in groups.values())))
    return tuple(sig)


def similar(
    g: Graph,
    c1: Coloring,
    c2: Coloring,
    orbit_blocks: Sequence[Sequence[int]] | None = None,
) -> bool:
    for c in (c1, c2):
        if has_color_preserving_automorphism(g, c):
            raise ValueError(f"coloring {tuple(c)} is not distinguishing")
    if orbit_blocks is None:
        orbit_blocks = vertex_orbits(g)
    return orbit_partition_signature(orbit_blocks, c1) == orbit_partition_signature(
        orbit_blocks, c2
    )


def similarity_class_size(
    g: Graph,
    c: Coloring,
    k: int,
    orbit_blocks: Sequence[Sequence[int]] | None = None,
) -> int:
    """Number of k-colorings inducing the same orbit partitions as c."""
    if orbit_blocks is None:
        orbit_blocks = vertex_orbits(g)
    size = 1
    for parts in orbit_partition_signature(orbit_blocks, c):
        size *= falling_value(k, len(parts))
    return size


def similarity_classes(
    g: Graph, k: int, orbit_blocks: Sequence[Sequence[int]] | None = None
) -> dict[Signature, tuple[tuple[int, ...], int]]:
    """Exhaustive: signature -> (first distinguishing coloring seen, class count).

    Intended for small graphs only (visits all k^n colorings).
    """
    if orbit_blocks is None:
        orbit_blocks = vertex_orbits(g)
    reps: dict[Signature, tuple[int, ...]] = {}
    counts: Counter = Counter()
    for c in product(range(1, k + 1), repeat=g.n):
        if has_color_preserving_automorphism(g, c):
            continue
        sig = orbit_partition_signature(orbit_blocks, c)
        reps.setdefault(sig, c)
        counts[sig] += 1
    return {sig: (reps[sig], counts[sig]) for sig in reps}


def verify_multiplicity_theorem(
    g: Graph, dpoly: IntPoly, q: int | None = None
) -> tuple[int, int, bool]:
    """(orbit count q, multiplicity of the root k = 0, mult >= q)."""
    if q is None:
        q = len(vertex_orbits(g))
    mult = zero_multiplicity(dpoly)
    return q, mult, mult >= q
