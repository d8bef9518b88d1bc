"""Brute-force ground truth for distinguishing counts.

Every k-coloring is visited in odometer order.  Colorings are processed in
numpy blocks: each block is reduced to the colour *pattern* of every row (its
restricted-growth relabelling, which records which vertices share a colour),
and the distinguishing test, which only depends on that pattern, runs once
per distinct pattern through ``has_color_preserving_automorphism``.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Sequence

import numpy as np

from .automorphism import (
    DihedralLabel,
    automorphisms,
    dihedral_elements,
    has_color_preserving_automorphism,
    reflection,
)
from .errors import BudgetExceeded, CountingError
from .graph import Graph
from .polynomial import IntPoly, RatPoly, div_by_const, interpolate

DEFAULT_BUDGET = 10**8

# int64 cells materialised per block (rows * max(n, k))
_BLOCK_CELLS = 1 << 21
# below this many colorings, worker processes are not worth starting
_PARALLEL_THRESHOLD = 1 << 21


def _check_budget(n: int, k: int, budget: int) -> int:
    total = k**n
    if total > budget:
        raise BudgetExceeded(total, budget)
    return total


def _block_rows(n: int, k: int = 1) -> int:
    return max(1, _BLOCK_CELLS // max(1, n, k))


def _odometer_block(n: int, k: int, lo: int, hi: int) -> np.ndarray:
    """Colorings with odometer indices lo..hi-1, colours 0..k-1, last vertex fastest."""
    idx = np.arange(lo, hi, dtype=np.int64)
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % k


def _pattern_codes(colors: np.ndarray, k: int) -> np.ndarray:
    """Restricted-growth label of each row, packed base k (vertex j at k**j).

    Sweeps the columns once, keeping a per-row colour -> label table.
    """
    m, n = colors.shape
    rows = np.arange(m)
    table = np.full((m, k), -1, dtype=np.int64)
    fresh = np.zeros(m, dtype=np.int64)
    code = np.zeros(m, dtype=np.int64)
    place = 1
    for j in range(n):
        col = colors[:, j]
        lab = table[rows, col]
        new = lab < 0
        lab = np.where(new, fresh, lab)
        table[rows, col] = lab
        fresh += new
        code += lab * place
        place *= k
    return code


def _decode(code: int, n: int, k: int) -> tuple[int, ...]:
    labels = []
    for _ in range(n):
        code, r = divmod(code, k)
        labels.append(r + 1)
    return tuple(labels)


def _pattern_histogram(n: int, k: int, lo: int, hi: int) -> Counter:
    hist: Counter = Counter()
    step = _block_rows(n, k)
    for start in range(lo, hi, step):
        codes = _pattern_codes(_odometer_block(n, k, start, min(hi, start + step)), k)
        uniq, cnt = np.unique(codes, return_counts=True)
        hist.update(dict(zip(uniq.tolist(), cnt.tolist())))
    return hist


def _histogram(n: int, k: int, total: int, workers: int) -> Counter:
    if workers <= 1 or total < _PARALLEL_THRESHOLD:
        return _pattern_histogram(n, k, 0, total)
    bounds = [total * i // workers for i in range(workers + 1)]
    hist: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_pattern_histogram, n, k, bounds[i], bounds[i + 1])
            for i in range(workers)
        ]
        for fut in futures:
            hist.update(fut.result())
    return hist


def count_distinguishing(
    g: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    _memo: dict | None = None,
) -> int:
    """Number of distinguishing colorings of g using at most k colours."""
    if k < 0:
        raise ValueError("k must be non-negative")
    n = g.n
    total = _check_budget(n, k, budget)
    if n == 0:
        return 1
    if k == 0:
        return 0
    memo = {} if _memo is None else _memo
    count = 0
    for code, cnt in _histogram(n, k, total, workers).items():
        pattern = _decode(code, n, k)
        dist = memo.get(pattern)
        if dist is None:
            dist = memo[pattern] = not has_color_preserving_automorphism(g, pattern)
        if dist:
            count += cnt
    return count


@lru_cache(maxsize=4096)
def _oracle_counts(g: Graph, budget: int) -> tuple[int, ...]:
    _check_budget(g.n, g.n, budget)
    memo: dict = {}
    return tuple(count_distinguishing(g, k, budget, _memo=memo) for k in range(g.n + 1))


def oracle_counts(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """count_distinguishing(g, k) for k = 0..n (memoised per graph)."""
    return _oracle_counts(g, budget)


def dist_poly_oracle(g: Graph, budget: int = DEFAULT_BUDGET) -> IntPoly:
    counts = oracle_counts(g, budget)
    n = g.n
    p = interpolate(list(enumerate(counts)), n)
    if p.degree != n or not p.is_monic():
        raise CountingError(f"interpolated polynomial {p} is not monic of degree {n}")
    return p


# -- Phi / phi ------------------------------------------------------------------


def phi_poly(g: Graph, dpoly: IntPoly, aut_order: int) -> RatPoly:
    """Number of non-equivalent distinguishing colorings, as a polynomial in k."""
    return checked_phi(dpoly, aut_order, g.n)


def checked_phi(dpoly: IntPoly, aut_order: int, n: int) -> RatPoly:
    """dpoly / aut_order, checked to be a non-negative integer at k = 0..n."""
    phi = div_by_const(dpoly, aut_order)
    for k in range(n + 1):
        v = phi(k)
        if v.denominator != 1 or v < 0:
            raise CountingError(f"Phi_{k} = {v} is not a non-negative integer")
    return phi


def phi_values(g: Graph, dpoly: IntPoly, aut_order: int) -> list[int]:
    return checked_phi_values(dpoly, aut_order, g.n)


def checked_phi_values(dpoly: IntPoly, aut_order: int, n: int) -> list[int]:
    """phi_0..phi_n by binomial inversion of Phi_k = sum_i C(k, i) phi_i."""
    phi = checked_phi(dpoly, aut_order, n)
    big = [int(phi(j)) for j in range(n + 1)]
    out = []
    for i in range(n + 1):
        v = sum((-1) ** (i - j) * math.comb(i, j) * big[j] for j in range(i + 1))
        if v < 0:
            raise CountingError(f"phi_{i} = {v} is negative")
        out.append(v)
    for k in range(n + 1):
        if sum(math.comb(k, i) * out[i] for i in range(k + 1)) != big[k]:
            raise CountingError(f"phi values do not reproduce Phi_{k}")
    return out


def phi_exact(
    g: Graph,
    i: int,
    dpoly: IntPoly | None = None,
    aut_order: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """phi_i: non-equivalent distinguishing colorings using all i colours."""
    if not 0 <= i <= g.n:
        raise ValueError(f"need 0 <= i <= {g.n}")
    if dpoly is None:
        dpoly = dist_poly_oracle(g, budget)
    if aut_order is None:
        aut_order = automorphisms(g).order
    return phi_values(g, dpoly, aut_order)[i]


# -- distinguishing number ------------------------------------------------------


def distinguishing_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Least k admitting a distinguishing k-coloring, by direct counting."""
    if g.n < 1:
        raise ValueError("distinguishing number needs n >= 1")
    memo: dict = {}
    for k in range(1, g.n + 1):
        if count_distinguishing(g, k, budget, _memo=memo) > 0:
            return k
    raise CountingError("no distinguishing coloring with n colours")


def distinguishing_number_from_poly(dpoly: IntPoly) -> int:
    """Least k >= 1 at which the polynomial is positive."""
    if dpoly.degree < 1:
        raise ValueError("needs a polynomial of degree >= 1")
    for k in range(1, dpoly.degree + 1):
        if dpoly(k) > 0:
            return k
    raise CountingError(f"{dpoly} has no positive value at k = 1..{dpoly.degree}")


# -- cycles ---------------------------------------------------------------------


def _all_colorings(n: int, k: int, budget: int):
    total = _check_budget(n, k, budget)
    step = _block_rows(n)
    for start in range(0, total, step):
        yield _odometer_block(n, k, start, min(total, start + step))


def _supported(colors: np.ndarray, f: Sequence[int]) -> np.ndarray:
    return (colors[:, list(f)] == colors).all(axis=1)


def classify_cycle_noncolorings(
    n: int, k: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """(|M|, |N|) for C_n: non-distinguishing k-colorings supporting exactly
    one reflection and no rotation, and those supporting a rotation.

    Raises ``CountingError`` if a coloring supports two reflections but no
    rotation, which the dihedral structure forbids.
    """
    group = dihedral_elements(n)
    rots = [f for f, lab in zip(group.elements, group.labels) if lab.kind == "rotation" and lab.index]
    refls = group.reflections
    m_count = n_count = 0
    for colors in _all_colorings(n, k, budget):
        rot = np.zeros(len(colors), dtype=bool)
        for f in rots:
            rot |= _supported(colors, f)
        nref = np.zeros(len(colors), dtype=np.int64)
        for f in refls:
            nref += _supported(colors, f)
        if np.any(~rot & (nref >= 2)):
            raise CountingError(f"C_{n}: coloring supports two reflections but no rotation")
        n_count += int(rot.sum())
        m_count += int((~rot & (nref == 1)).sum())
    return m_count, n_count


def count_segment_supported(
    n: int,
    d: int,
    k: int,
    refl: DihedralLabel | tuple[str, int],
    budget: int = DEFAULT_BUDGET,
) -> int:
    """k-colorings of C_n generated by a length-d segment (rotation by d
    fixes them) that also support the given reflection."""
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    kind, i = refl
    f = reflection(n, kind, i)
    shift = [(v + d) % n for v in range(n)]
    total = 0
    for colors in _all_colorings(n, k, budget):
        total += int((_supported(colors, shift) & _supported(colors, f)).sum())
    return total
