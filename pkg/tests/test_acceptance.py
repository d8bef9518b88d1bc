"""Acceptance criteria, one test per criterion, all at exact equality.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and inline with ``-s``).  Run on its own with

    pytest tests/test_acceptance.py
"""

from __future__ import annotations

import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES

from distpoly.analysis import similarity_class_size, similarity_classes, verify_multiplicity_theorem
from distpoly.automorphism import automorphisms, vertex_orbits
from distpoly.closed_forms import (
    ComponentProfile,
    complete_multipartite_poly,
    complete_poly,
    compute_dist_poly,
    cycle_poly,
    cycle_reflection_count_poly,
    cycle_rotation_count_poly,
    disjoint_union_poly,
    family_aut_order,
    family_orbit_count,
    multipartite_aut_order,
    path_poly,
    segment_support_count,
    star_poly,
)
from distpoly.corpus import small_graphs
from distpoly.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from distpoly.oracle import (
    checked_phi,
    checked_phi_values,
    classify_cycle_noncolorings,
    count_distinguishing,
    count_segment_supported,
    dist_poly_oracle,
    distinguishing_number,
    distinguishing_number_from_poly,
)
from distpoly.polynomial import IntPoly, RatPoly, zero_multiplicity

K = IntPoly.k()
FAMILY_MAX_N = 12
MULTIPARTITE = [
    [(2, 1), (3, 1)],
    [(3, 2)],
    [(2, 3)],
    [(1, 3), (3, 1)],
    [(4, 3)],
    [(1, 2), (2, 2), (3, 2)],
    [(5, 1), (7, 1)],
]


def kp(e: int) -> IntPoly:
    return IntPoly.monomial(e)


@contextmanager
def criterion(num: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"FAIL  criterion {num}: {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"PASS  criterion {num}: {title} ({time.perf_counter() - start:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def family_cases():
    """(name, polynomial, n, |Aut|, orbit count) for the families up to n = 12."""
    for n in range(1, FAMILY_MAX_N + 1):
        for name, param in (("path", n), ("cycle", n), ("complete", n), ("star", n - 1)):
            if param < 1:
                continue
            poly = {"path": path_poly, "cycle": cycle_poly, "complete": complete_poly, "star": star_poly}[name](param)
            yield f"{name}({param})", poly, n, family_aut_order(name, param), family_orbit_count(name, param)
    for parts in MULTIPARTITE:
        n = sum(s * m for s, m in parts)
        yield f"multipartite{parts}", complete_multipartite_poly(parts), n, multipartite_aut_order(parts), len(parts)


def test_criterion_1_published_polynomials():
    with criterion(1, "closed forms reproduce the published polynomials"):
        start = time.perf_counter()
        assert cycle_poly(4) == kp(4) - kp(3).scale(2) - kp(2) + K.scale(2)
        assert cycle_poly(6) == kp(6) - kp(4).scale(3) - kp(3).scale(4) + kp(2).scale(8) - K.scale(2)
        for p in (3, 5, 7):
            assert cycle_poly(p) == kp(p) - kp((p + 1) // 2).scale(p) + K.scale(p - 1)
        assert cycle_poly(9) == kp(9) - kp(5).scale(9) - kp(3) + kp(2).scale(9)
        assert complete_multipartite_poly([(2, 1), (3, 1)]) == kp(5) - kp(4).scale(4) + kp(3).scale(5) - kp(2).scale(2)
        assert complete_multipartite_poly([(3, 2)]) == (
            kp(6) - kp(5).scale(6) + kp(4).scale(13) - kp(3).scale(18) + kp(2).scale(22) - K.scale(12)
        )
        assert complete_multipartite_poly([(2, 3)]) == (
            kp(6) - kp(5).scale(3) - kp(4).scale(3) + kp(3).scale(11) + kp(2).scale(2) - K.scale(8)
        )
        assert time.perf_counter() - start < 1.0


def test_criterion_2_oracle_matches_closed_forms():
    with criterion(2, "oracle equals closed forms on paths, cycles, complete graphs, stars, unions"):
        start = time.perf_counter()
        for n in range(1, 9):
            assert dist_poly_oracle(path_graph(n)) == path_poly(n), f"P{n}"
        for n in range(3, 9):
            assert dist_poly_oracle(cycle_graph(n)) == cycle_poly(n), f"C{n}"
        for n in range(1, 7):
            assert dist_poly_oracle(complete_graph(n)) == complete_poly(n), f"K{n}"
        for leaves in range(1, 7):
            assert dist_poly_oracle(star_graph(leaves)) == star_poly(leaves), f"S{leaves}"

        k2, k3 = complete_graph(2), complete_graph(3)
        k2p = ComponentProfile(k2, 1, complete_poly(2), 2)
        k3p = ComponentProfile(k3, 1, complete_poly(3), 6)
        unions = [
            (disjoint_union(k2, k2), [ComponentProfile(k2, 2, complete_poly(2), 2)]),
            (disjoint_union(k2, k2, k2), [ComponentProfile(k2, 3, complete_poly(2), 2)]),
            (disjoint_union(k3, k3), [ComponentProfile(k3, 2, complete_poly(3), 6)]),
            (disjoint_union(k2, k3), [k2p, k3p]),
        ]
        for g, profiles in unions:
            assert dist_poly_oracle(g) == disjoint_union_poly(profiles), repr(g)
        # G with one isolated vertex added: k times the polynomial of G
        for g in (path_graph(4), cycle_graph(5), star_graph(3), cycle_graph(6), path_graph(6)):
            assert dist_poly_oracle(disjoint_union(g, Graph(1))) == K * dist_poly_oracle(g), repr(g)
        assert time.perf_counter() - start <= 600


def test_criterion_3_monic_degree_n():
    with criterion(3, "every polynomial is monic of degree n (connected corpus, families to n = 12)"):
        connected = small_graphs(6, connected_only=True)
        assert len(connected) == 143
        for g in connected:
            p = dist_poly_oracle(g)
            assert p.degree == g.n and p.is_monic(), repr(g)
        for g in small_graphs(6):
            p = compute_dist_poly(g).poly
            assert p.degree == g.n and p.is_monic(), repr(g)
        for name, p, n, _, _ in family_cases():
            assert p.degree == n and p.is_monic(), name


def test_criterion_4_complement_invariance():
    with criterion(4, "complement invariance on all graphs with n <= 6"):
        corpus = small_graphs(6)
        assert len(corpus) == 208
        for g in corpus:
            assert dist_poly_oracle(g) == dist_poly_oracle(complement(g)), repr(g)


def test_criterion_5_cycle_decomposition():
    with criterion(5, "k^n = D + M + N for C_n, n in 3..8, k in {2, 3}"):
        for n in range(3, 9):
            m_poly, n_poly = cycle_reflection_count_poly(n), cycle_rotation_count_poly(n)
            for k in (2, 3):
                m, r = classify_cycle_noncolorings(n, k)
                assert (m, r) == (m_poly(k), n_poly(k)), (n, k)
                assert k**n == count_distinguishing(cycle_graph(n), k) + m + r, (n, k)


def test_criterion_6_segment_counts():
    with criterion(6, "segment-generated colorings fixed by one reflection"):
        for n in (4, 6, 8):
            for d in (d for d in range(1, n + 1) if n % d == 0):
                for k in (2, 3):
                    for kind in ("vertex", "edge"):
                        want = segment_support_count(d, k, kind)
                        expected = k ** ((d + 2) // 2) if kind == "vertex" else k ** ((d + 1) // 2)
                        assert want == expected
                        for i in range(1, n + 1):
                            got = count_segment_supported(n, d, k, (kind, i))
                            assert got == want, (n, d, k, kind, i)


def test_criterion_7_phi_consistency():
    with criterion(7, "Phi integral, phi non-negative and reproducing Phi; Phi(P_n) closed form"):
        for g in small_graphs(6):
            checked_phi_values(dist_poly_oracle(g), automorphisms(g).order, g.n)
        for name, p, n, aut, _ in family_cases():
            checked_phi_values(p, aut, n)
        # the closed form needs n >= 2: P_1 = K_1 has polynomial k, not k - k
        for n in range(2, 9):
            phi = checked_phi(dist_poly_oracle(path_graph(n)), automorphisms(path_graph(n)).order, n)
            assert phi == RatPoly(kp(n) - kp((n + 1) // 2), 2), f"P{n}"


def test_criterion_8_multiplicity():
    with criterion(8, "zero multiplicity >= orbit count; similarity classes"):
        for g in small_graphs(6):
            q, mult, ok = verify_multiplicity_theorem(g, dist_poly_oracle(g))
            assert ok, (repr(g), q, mult)
        for name, p, n, _, q in family_cases():
            assert zero_multiplicity(p) >= q, name
        assert len(vertex_orbits(cycle_graph(9))) == 1
        assert verify_multiplicity_theorem(cycle_graph(9), cycle_poly(9)) == (1, 2, True)
        for g in small_graphs(5):
            blocks = vertex_orbits(g)
            q = len(blocks)
            for k in (1, 2, 3):
                sizes = [similarity_class_size(g, rep, k, blocks) for rep, _ in similarity_classes(g, k, blocks).values()]
                assert sum(sizes) == count_distinguishing(g, k), (repr(g), k)
                assert all(s % k**q == 0 for s in sizes), (repr(g), k)


def test_criterion_9_distinguishing_number():
    with criterion(9, "distinguishing numbers"):
        for n in range(1, 7):
            assert distinguishing_number(complete_graph(n)) == n
        assert distinguishing_number(cycle_graph(5)) == 3
        assert distinguishing_number(path_graph(3)) == 2
        for g in small_graphs(6):
            assert distinguishing_number_from_poly(dist_poly_oracle(g)) == distinguishing_number(g), repr(g)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
