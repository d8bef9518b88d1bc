"""Cross-check suites run by ``distpoly verify``.

Each suite yields ``Check`` records; a failing check names its case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .analysis import verify_multiplicity_theorem
from .automorphism import automorphisms
from .closed_forms import (
    complete_multipartite_poly,
    complete_poly,
    compute_dist_poly,
    cycle_poly,
    cycle_reflection_count_poly,
    cycle_rotation_count_poly,
    family_orbit_count,
    path_poly,
    segment_support_count,
    star_poly,
)
from .corpus import small_graphs
from .graph import (
    Graph,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
    to_graph6,
)
from .oracle import (
    DEFAULT_BUDGET,
    classify_cycle_noncolorings,
    count_distinguishing,
    count_segment_supported,
    dist_poly_oracle,
    distinguishing_number,
    distinguishing_number_from_poly,
    phi_values,
)
from .polynomial import zero_multiplicity

FAMILY_MAX_N = 12


@dataclass
class Check:
    suite: str
    case: str
    ok: bool
    detail: str = ""


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def suite_oracle(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    cases: list[tuple[str, Graph, object]] = []
    cases += [(f"P{n}", path_graph(n), path_poly(n)) for n in range(1, max_n + 1)]
    cases += [(f"C{n}", cycle_graph(n), cycle_poly(n)) for n in range(3, max_n + 1)]
    cases += [(f"K{n}", complete_graph(n), complete_poly(n)) for n in range(1, min(max_n, 6) + 1)]
    cases += [(f"S{m}", star_graph(m), star_poly(m)) for m in range(1, max_n)]
    for parts in ([(2, 1), (3, 1)], [(3, 2)], [(2, 3)], [(1, 2), (2, 1)]):
        sizes = [s for s, m in parts for _ in range(m)]
        if sum(sizes) <= max_n:
            name = "K_{" + ",".join(map(str, sizes)) + "}"
            cases.append((name, complete_multipartite(sizes), complete_multipartite_poly(parts)))
    unions = {
        "2K2": disjoint_union(complete_graph(2), complete_graph(2)),
        "3K2": disjoint_union(*[complete_graph(2)] * 3),
        "2K3": disjoint_union(complete_graph(3), complete_graph(3)),
        "K2+K3": disjoint_union(complete_graph(2), complete_graph(3)),
        "P4+K1": disjoint_union(path_graph(4), Graph(1)),
        "C5+K1": disjoint_union(cycle_graph(5), Graph(1)),
    }
    for name, g in unions.items():
        if g.n <= max_n:
            cases.append((name, g, compute_dist_poly(g, budget).poly))
    for name, g, expected in cases:
        got = dist_poly_oracle(g, budget)
        yield Check("oracle", name, got == expected, f"oracle {got} vs closed form {expected}")


def suite_cycles(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for n in range(3, max(3, min(max_n, 8)) + 1):
        m_poly, n_poly = cycle_reflection_count_poly(n), cycle_rotation_count_poly(n)
        for k in range(2, max_k + 1):
            m, r = classify_cycle_noncolorings(n, k, budget)
            d = count_distinguishing(cycle_graph(n), k, budget)
            ok = (m, r) == (m_poly(k), n_poly(k)) and k**n == d + m + r
            yield Check("cycles", f"C{n} k={k}", ok, f"M={m} N={r} D={d}")


def suite_segments(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for n in (4, 6, 8):
        if n > max(max_n, 4):
            continue
        for d in _divisors(n):
            for k in range(2, max_k + 1):
                bad = []
                for kind in ("vertex", "edge"):
                    want = segment_support_count(d, k, kind)
                    for i in range(1, n + 1):
                        got = count_segment_supported(n, d, k, (kind, i), budget)
                        if got != want:
                            bad.append(f"{kind} {i}: {got} != {want}")
                yield Check("segments", f"n={n} d={d} k={k}", not bad, "; ".join(bad))


def _corpus(max_n: int) -> list[Graph]:
    return small_graphs(min(max_n, 6))


def suite_complement(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for g in _corpus(max_n):
        a, b = dist_poly_oracle(g, budget), dist_poly_oracle(complement(g), budget)
        yield Check("complement", _name(g), a == b, f"{a} vs {b}")


def suite_monic(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for g in small_graphs(min(max_n, 6), connected_only=True):
        p = dist_poly_oracle(g, budget)
        yield Check("monic", _name(g), p.degree == g.n and p.is_monic(), str(p))
    for name, p, n in _family_polys():
        yield Check("monic", name, p.degree == n and p.is_monic(), str(p))


def suite_multiplicity(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for g in _corpus(max_n):
        q, mult, ok = verify_multiplicity_theorem(g, dist_poly_oracle(g, budget))
        yield Check("multiplicity", _name(g), ok, f"q={q} mult={mult}")
    for name, p, q in _family_orbits():
        mult = zero_multiplicity(p)
        yield Check("multiplicity", name, mult >= q, f"q={q} mult={mult}")


def suite_phi(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for g in _corpus(max_n):
        p = dist_poly_oracle(g, budget)
        try:
            phis = phi_values(g, p, automorphisms(g).order)
            yield Check("phi", _name(g), True, str(phis))
        except AssertionError as exc:
            yield Check("phi", _name(g), False, str(exc))


def suite_dnumber(max_n: int, max_k: int, budget: int) -> Iterator[Check]:
    for g in _corpus(max_n):
        a = distinguishing_number_from_poly(dist_poly_oracle(g, budget))
        b = distinguishing_number(g, budget)
        yield Check("dnumber", _name(g), a == b, f"poly {a} vs search {b}")


def _name(g: Graph) -> str:
    return f"n={g.n} g6={to_graph6(g)}"


def _family_polys():
    for n in range(1, FAMILY_MAX_N + 1):
        yield f"P{n}", path_poly(n), n
        yield f"C{n}", cycle_poly(n), n
        yield f"K{n}", complete_poly(n), n
        if n >= 2:
            yield f"S{n - 1}", star_poly(n - 1), n
    for parts in ([(2, 1), (3, 1)], [(3, 2)], [(2, 3)], [(1, 3), (3, 1)], [(4, 3)], [(1, 2), (2, 2), (3, 2)]):
        n = sum(s * m for s, m in parts)
        yield f"multipartite {parts}", complete_multipartite_poly(parts), n


def _family_orbits():
    for n in range(1, FAMILY_MAX_N + 1):
        yield f"P{n}", path_poly(n), family_orbit_count("path", n)
        yield f"C{n}", cycle_poly(n), family_orbit_count("cycle", n)
        yield f"K{n}", complete_poly(n), family_orbit_count("complete", n)
        if n >= 2:
            yield f"S{n - 1}", star_poly(n - 1), family_orbit_count("star", n - 1)
    for parts in ([(2, 1), (3, 1)], [(3, 2)], [(2, 3)], [(1, 3), (3, 1)], [(4, 3)]):
        yield f"multipartite {parts}", complete_multipartite_poly(parts), len(parts)


SUITES: dict[str, Callable[[int, int, int], Iterator[Check]]] = {
    "oracle": suite_oracle,
    "cycles": suite_cycles,
    "segments": suite_segments,
    "complement": suite_complement,
    "monic": suite_monic,
    "multiplicity": suite_multiplicity,
    "phi": suite_phi,
    "dnumber": suite_dnumber,
}


def run_suites(
    names: list[str] | None = None,
    max_n: int = 7,
    max_k: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> list[Check]:
    names = names or list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    checks = []
    for name in names:
        checks.extend(SUITES[name](max_n, max_k, budget))
    return checks
