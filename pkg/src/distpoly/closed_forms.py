"""Explicit distinguishing polynomials: graph families and composition rules.

Nothing here enumerates colorings except the fallback in
``compute_dist_poly`` for components no formula covers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .automorphism import automorphisms, is_isomorphic
from .errors import CountingError, ResourceError
from .graph import Graph, complement, connected_components
from .oracle import DEFAULT_BUDGET, dist_poly_oracle
from .polynomial import IntPoly, falling_factorial

K = IntPoly.k()
MAX_PRIME_FACTORS = 20


def _kpow(e: int) -> IntPoly:
    return IntPoly.monomial(e)


# -- simple families ------------------------------------------------------------


def complete_poly(n: int) -> IntPoly:
    return falling_factorial(n)


def star_poly(leaves: int) -> IntPoly:
    """Star with ``leaves + 1`` vertices: k * k_(leaves).

    With a single leaf the centre is no longer fixed (S_1 = K_2), so the
    product formula does not apply there.
    """
    if leaves < 1:
        raise ValueError("a star needs at least one leaf")
    if leaves == 1:
        return falling_factorial(2)
    return K * falling_factorial(leaves)


def path_poly(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("path_poly needs n >= 1")
    if n == 1:
        return K
    return _kpow(n) - _kpow((n + 1) // 2)


# -- cycles ---------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition as (prime, exponent) pairs, primes increasing."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.pairs)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.pairs)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    pairs = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        p += 1
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def n_sub_A(f: Factorization, subset: Sequence[int]) -> int:
    """Divisor of n with the exponent of each prime indexed by ``subset``
    (1-based) lowered by one."""
    chosen = set(subset)
    for i in chosen:
        if not 1 <= i <= f.t:
            raise ValueError(f"prime index {i} outside 1..{f.t}")
    return math.prod(
        p ** (e - 1 if i in chosen else e) for i, (p, e) in enumerate(f.pairs, start=1)
    )


def _signed_divisors(n: int) -> list[tuple[int, int]]:
    """(sign, n_A) for every subset A of the prime indices, bitmask order."""
    f = factorize(n)
    if f.t > MAX_PRIME_FACTORS:
        raise ResourceError(f"{n} has more than {MAX_PRIME_FACTORS} distinct primes")
    out = []
    for mask in range(1 << f.t):
        subset = [i + 1 for i in range(f.t) if mask >> i & 1]
        out.append(((-1) ** len(subset), n_sub_A(f, subset)))
    return out


def cycle_rotation_count_poly(n: int) -> IntPoly:
    """Colorings of C_n supporting some non-trivial rotation."""
    if n < 3:
        raise ValueError("needs n >= 3")
    total = IntPoly()
    for sign, d in _signed_divisors(n):
        total = total + _kpow(d).scale(sign)
    return _kpow(n) - total


def cycle_reflection_count_poly(n: int) -> IntPoly:
    """Colorings of C_n supporting exactly one reflection (and no rotation)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    inner = IntPoly()
    for sign, d in _signed_divisors(n):
        inner = inner + (_kpow((d + 2) // 2) + _kpow((d + 1) // 2)).scale(sign)
    # n/2 * inner, carried out as (n * inner) / 2
    doubled = inner.scale(n)
    if any(c % 2 for c in doubled.coeffs):
        raise CountingError(f"reflection count for C_{n} is not integral: {doubled}/2")
    return IntPoly(c // 2 for c in doubled.coeffs)


def cycle_poly(n: int) -> IntPoly:
    """Distinguishing polynomial of C_n; C_1 = K_1 and C_2 = K_2."""
    if n < 1:
        raise ValueError("cycle_poly needs n >= 1")
    if n == 1:
        return K
    if n == 2:
        return falling_factorial(2)
    total = IntPoly()
    for sign, d in _signed_divisors(n):
        if n % 2:
            term = _kpow(d) - _kpow((d + 1) // 2).scale(n)
        else:
            half = n // 2
            term = _kpow(d) - _kpow((d + 2) // 2).scale(half) - _kpow((d + 1) // 2).scale(half)
        total = total + term.scale(sign)
    return total


def segment_support_count(d: int, k: int, kind: str) -> int:
    """Closed count of d-segment-generated colorings of C_n supporting one
    reflection: k^ceil((d+1)/2) through a vertex, k^floor((d+1)/2) through
    an edge midpoint."""
    if kind == "vertex":
        return k ** ((d + 2) // 2)
    if kind == "edge":
        return k ** ((d + 1) // 2)
    raise ValueError(f"unknown reflection kind {kind!r}")


# -- unions and multipartite graphs ----------------------------------------------


@dataclass(frozen=True)
class ComponentProfile:
    rep: Graph
    m: int
    dpoly: IntPoly
    aut_order: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("multiplicity must be >= 1")


def union_same_poly(dpoly: IntPoly, aut_order: int, m: int) -> IntPoly:
    """Polynomial of m disjoint copies of a connected graph."""
    if m < 1:
        raise ValueError("m must be >= 1")
    result = IntPoly.constant(1)
    for i in range(m):
        result = result * (dpoly - i * aut_order)
    return result


def disjoint_union_poly(profiles: Sequence[ComponentProfile]) -> IntPoly:
    result = IntPoly.constant(1)
    for prof in profiles:
        result = result * union_same_poly(prof.dpoly, prof.aut_order, prof.m)
    return result


def union_aut_order(profiles: Sequence[ComponentProfile]) -> int:
    return math.prod(math.factorial(p.m) * p.aut_order**p.m for p in profiles)


def complete_multipartite_poly(parts: Sequence[tuple[int, int]]) -> IntPoly:
    """``parts`` lists (part size, how many parts of that size)."""
    sizes = [s for s, _ in parts]
    if len(set(sizes)) != len(sizes):
        raise ValueError("part sizes must be distinct; merge multiplicities")
    result = IntPoly.constant(1)
    for size, mult in parts:
        if size < 1 or mult < 1:
            raise ValueError("part sizes and multiplicities must be positive")
        ff = falling_factorial(size)
        fact = math.factorial(size)
        for j in range(mult):
            result = result * (ff - j * fact)
    return result


def multipartite_aut_order(parts: Sequence[tuple[int, int]]) -> int:
    return math.prod(math.factorial(m) * math.factorial(s) ** m for s, m in parts)


# -- family recognition -----------------------------------------------------------


@dataclass(frozen=True)
class Family:
    name: str
    param: int

    def poly(self) -> IntPoly:
        return FAMILY_POLY[self.name](self.param)

    def aut_order(self) -> int:
        return family_aut_order(self.name, self.param)

    def orbit_count(self) -> int:
        return family_orbit_count(self.name, self.param)

    def __str__(self) -> str:
        return f"{self.name}({self.param})"


FAMILY_POLY = {
    "complete": complete_poly,
    "path": path_poly,
    "cycle": cycle_poly,
    "star": star_poly,
}


def family_aut_order(name: str, param: int) -> int:
    if name == "complete":
        return math.factorial(param)
    if name == "path":
        return 1 if param == 1 else 2
    if name == "cycle":
        return {1: 1, 2: 2}.get(param, 2 * param)
    if name == "star":
        return 2 if param == 1 else math.factorial(param)
    raise ValueError(f"unknown family {name!r}")


def family_orbit_count(name: str, param: int) -> int:
    if name in ("complete", "cycle"):
        return 1 if param >= 1 else 0
    if name == "path":
        return (param + 1) // 2
    if name == "star":
        return 1 if param == 1 else 2
    raise ValueError(f"unknown family {name!r}")


def recognize_family(g: Graph) -> Family | None:
    """Degree-sequence recognisers: complete, cycle, path, star."""
    n = g.n
    if n == 0:
        return None
    deg = g.degrees()
    if all(d == n - 1 for d in deg):
        return Family("complete", n)
    connected = len(connected_components(g)) == 1
    if not connected:
        return None
    if n >= 3 and all(d == 2 for d in deg):
        return Family("cycle", n)
    if sorted(deg) == [1, 1] + [2] * (n - 2):
        return Family("path", n)
    if n >= 3 and sorted(deg) == [1] * (n - 1) + [n - 1]:
        return Family("star", n - 1)
    return None


# -- orchestration ----------------------------------------------------------------


@dataclass(frozen=True)
class DistPolyResult:
    poly: IntPoly
    aut_order: int
    provenance: tuple[str, ...]


def _group_isomorphic(pieces: Sequence[Graph]) -> list[tuple[Graph, int]]:
    classes: list[list] = []
    for g in pieces:
        for cls in classes:
            if is_isomorphic(cls[0], g):
                cls[1] += 1
                break
        else:
            classes.append([g, 1])
    return [(g, m) for g, m in classes]


def _connected_poly(g: Graph, budget: int) -> DistPolyResult:
    fam = recognize_family(g)
    if fam is not None:
        return DistPolyResult(fam.poly(), fam.aut_order(), (f"closed-form:{fam}",))
    gc = complement(g)
    if len(connected_components(gc)) > 1:
        inner = compute_dist_poly(gc, budget)
        return DistPolyResult(
            inner.poly,
            inner.aut_order,
            tuple(f"complement-reduction/{tag}" for tag in inner.provenance),
        )
    fam = recognize_family(gc)
    if fam is not None:
        return DistPolyResult(
            fam.poly(), fam.aut_order(), (f"complement-reduction/closed-form:{fam}",)
        )
    try:
        poly = dist_poly_oracle(g, budget)
    except ResourceError as exc:
        raise ResourceError(
            f"component with {g.n} vertices matches no closed form and exceeds the oracle budget: {exc}"
        ) from exc
    return DistPolyResult(poly, automorphisms(g).order, ("oracle",))


def compute_dist_poly(g: Graph, budget: int = DEFAULT_BUDGET) -> DistPolyResult:
    """Distinguishing polynomial via complements, unions and closed forms.

    Components are grouped into isomorphism classes and combined with
    ``disjoint_union_poly``; a connected graph whose complement splits is
    handled through the complement; families are recognised on the graph or
    its complement; the enumeration oracle is the last resort.
    """
    if g.n == 0:
        return DistPolyResult(IntPoly.constant(1), 1, ("empty",))
    pieces = [piece for piece, _ in connected_components(g)]
    if len(pieces) == 1:
        return _connected_poly(g, budget)
    profiles, tags = [], []
    for rep, m in _group_isomorphic(pieces):
        sub = _connected_poly(rep, budget)
        profiles.append(ComponentProfile(rep, m, sub.poly, sub.aut_order))
        tags.extend(f"union-composition[x{m}]/{tag}" for tag in sub.provenance)
    return DistPolyResult(disjoint_union_poly(profiles), union_aut_order(profiles), tuple(tags))

