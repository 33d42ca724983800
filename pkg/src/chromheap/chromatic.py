"""Chromatic polynomials, exact and cross-checkable several ways.

The default route is deletion-contraction memoized on a canonical
lower-triangular adjacency encoding; a subset dynamic program over
independent sets provides an independent second route, and brute-force
coloring counters a third.  All arithmetic is exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .config import DEFAULT_BUDGET, Budget
from .errors import (
    InternalInvariantViolation,
    NotAClique,
    ResourceBudgetExceeded,
    TooManyVertices,
    VertexOutOfRange,
)
from .graphs import Graph, blowup, independence_table, is_clique, iter_vertices, vset
from .polynomials import BivariatePoly, Poly

DELCON_MAX_VERTICES = 30


def _lower_tri_key(adj: Sequence[int]) -> tuple[int, int]:
    """Canonical key: vertex count plus the lower-triangular adjacency bits."""
    bits = 0
    pos = 0
    for i, row in enumerate(adj):
        bits |= (row & ((1 << i) - 1)) << pos
        pos += i
    return (len(adj), bits)


def _drop_bit(mask: int, i: int) -> int:
    return (mask & ((1 << i) - 1)) | ((mask >> (i + 1)) << i)


def _poly_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _chrom_delcon(adj: tuple[int, ...], memo: dict, budget: Budget) -> tuple[int, ...]:
    key = _lower_tri_key(adj)
    cached = memo.get(key)
    if cached is not None:
        return cached
    n = len(adj)
    best = -1
    best_deg = 0
    for i, row in enumerate(adj):
        d = row.bit_count()
        if d > best_deg:
            best, best_deg = i, d
    if best_deg == 0:
        result: tuple[int, ...] = (0,) * n + (1,)
    else:
        u = best
        v = (adj[u] & -adj[u]).bit_length() - 1
        adj_del = list(adj)
        adj_del[u] &= ~(1 << v)
        adj_del[v] &= ~(1 << u)
        lo, hi = (u, v) if u < v else (v, u)
        merged = (adj[lo] | adj[hi]) & ~((1 << lo) | (1 << hi))
        adj_con = []
        for i in range(n):
            if i == hi:
                continue
            if i == lo:
                row = merged
            else:
                row = adj[i]
                if row >> hi & 1:
                    row = (row & ~(1 << hi)) | (1 << lo)
            adj_con.append(_drop_bit(row, hi))
        result = _poly_sub(
            _chrom_delcon(tuple(adj_del), memo, budget),
            _chrom_delcon(tuple(adj_con), memo, budget),
        )
    if len(memo) >= budget.memo_entries:
        raise ResourceBudgetExceeded(
            f"deletion-contraction memo exceeded {budget.memo_entries} entries"
        )
    memo[key] = result
    return result


def _chromatic_subset_dp(G: Graph) -> Poly:
    """Chromatic polynomial as sum over k of (partitions of the vertex set
    into k nonempty independent blocks) times q falling k."""
    indep = independence_table(G)
    n = G.n
    size = 1 << n
    full = size - 1
    prev = [0] * size
    prev[0] = 1
    poly = Poly.zero()
    ff = Poly.one()
    for k in range(1, n + 1):
        cur = [0] * size
        for V in range(1, size):
            low = V & -V
            rest = V ^ low
            s = 0
            U = rest
            while True:
                cand = U | low
                if indep[cand]:
                    s += prev[V ^ cand]
                if U == 0:
                    break
                U = (U - 1) & rest
            cur[V] = s
        ff = ff * Poly((-(k - 1), 1))
        if cur[full]:
            poly = poly + cur[full] * ff
        prev = cur
    if n == 0:
        poly = Poly.one()
    return poly


@lru_cache(maxsize=None)
def _chromatic_cached(G: Graph) -> Poly:
    memo: dict = {}
    return Poly(_chrom_delcon(G.adj, memo, DEFAULT_BUDGET))


def chromatic_polynomial(
    G: Graph, method: str = "auto", budget: Budget = DEFAULT_BUDGET
) -> Poly:
    """Chromatic polynomial of G, constant coefficient first.

    method "auto" and "deletion_contraction" use memoized deletion-
    contraction (n <= 30); "subset_dp" partitions the vertex set into
    independent blocks (n <= 22).
    """
    if method in ("auto", "deletion_contraction"):
        if G.n > DELCON_MAX_VERTICES:
            raise TooManyVertices(
                f"deletion-contraction capped at n={DELCON_MAX_VERTICES}, got {G.n}"
            )
        if method == "auto" and budget is DEFAULT_BUDGET:
            return _chromatic_cached(G)
        memo: dict = {}
        return Poly(_chrom_delcon(G.adj, memo, budget))
    if method == "subset_dp":
        return _chromatic_subset_dp(G)
    raise ValueError(f"unknown method {method!r}")


def count_proper_colorings(G: Graph, q: int) -> int:
    """Brute-force count of proper colorings with colors 1..q."""
    if q < 0:
        raise VertexOutOfRange("color count must be nonnegative")
    n = G.n
    lower = [G.adj[i] & ((1 << i) - 1) for i in range(n)]
    colors = [0] * n
    def rec(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for c in range(1, q + 1):
            ok = True
            m = lower[i]
            while m:
                j = (m & -m).bit_length() - 1
                if colors[j] == c:
                    ok = False
                    break
                m &= m - 1
            if ok:
                colors[i] = c
                total += rec(i + 1)
        colors[i] = 0
        return total
    return rec(0)


def count_independent_tuples(G: Graph, q: int) -> int:
    """Ordered q-tuples of pairwise disjoint independent sets covering V.

    Equals the chromatic polynomial at q; computed by subset recursion so
    it is an oracle independent of both polynomial routes.
    """
    indep = independence_table(G)
    @lru_cache(maxsize=None)
    def count(V: int, k: int) -> int:
        if k == 0:
            return 1 if V == 0 else 0
        s = 0
        U = V
        while True:
            if indep[U]:
                s += count(V ^ U, k - 1)
            if U == 0:
                break
            U = (U - 1) & V
        return s
    result = count(G.full_mask, q)
    count.cache_clear()
    return result


def chi_hat(G: Graph, d: int, budget: Budget = DEFAULT_BUDGET) -> Poly:
    """Chromatic polynomial divided exactly by q(q-1)...(q-d+1).

    Requires vertices 1..d to be pairwise adjacent; the division is then
    exact, and a nonzero remainder raises InternalInvariantViolation.
    """
    if d < 0 or d > G.n:
        raise VertexOutOfRange(f"d={d} not in 0..{G.n}")
    if not is_clique(G, vset(range(1, d + 1))):
        raise NotAClique(f"vertices 1..{d} are not pairwise adjacent")
    chi = chromatic_polynomial(G, budget=budget)
    return chi.divide_exact(Poly.falling_factorial(d))


def bivariate_polynomial(G: Graph, budget: Budget = DEFAULT_BUDGET) -> BivariatePoly:
    """Two-variable coloring polynomial: sum over vertex subsets W of
    chi_{G[W]}(q) * r^(n - |W|).

    At (q, r) it counts colorings with q proper colors and r free colors,
    where only the proper colors carry adjacency constraints.
    """
    if G.n > 16:
        raise TooManyVertices(f"bivariate polynomial capped at n=16, got {G.n}")
    memo: dict = {}
    out = BivariatePoly()
    n = G.n
    for W in range(1 << n):
        vertices = []
        m = W
        while m:
            vertices.append((m & -m).bit_length() - 1)
            m &= m - 1
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            new = 0
            mm = G.adj[v] & W
            while mm:
                w = (mm & -mm).bit_length() - 1
                new |= 1 << index[w]
                mm &= mm - 1
            adj.append(new)
        coeffs = _chrom_delcon(tuple(adj), memo, budget)
        j = n - W.bit_count()
        for i, c in enumerate(coeffs):
            out.add_term(i, j, c)
    return out


def count_bivariate_colorings(G: Graph, q: int, r: int) -> int:
    """Brute-force count of maps into q proper plus r free colors where
    adjacent vertices never share a proper color."""
    n = G.n
    lower = [G.adj[i] & ((1 << i) - 1) for i in range(n)]
    colors = [0] * n
    def rec(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for c in range(1, q + r + 1):
            ok = True
            if c <= q:
                m = lower[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    if colors[j] == c:
                        ok = False
                        break
                    m &= m - 1
            if ok:
                colors[i] = c
                total += rec(i + 1)
        colors[i] = 0
        return total
    return rec(0)


def multicolor_polynomial(
    G: Graph, m: Sequence[int], budget: Budget = DEFAULT_BUDGET
) -> Poly:
    """Multicoloring polynomial: chromatic polynomial of the blow-up graph
    divided by the product of the multiplicity factorials.

    The quotient has rational coefficients but integer values at integers;
    this is checked at q = 0..|m|+1.
    """
    total = sum(m)
    if total > 22:
        raise TooManyVertices(f"multicolor polynomial capped at |m|=22, got {total}")
    B = blowup(G, m)
    chi = chromatic_polynomial(B, budget=budget)
    scale = Fraction(1)
    for k in m:
        scale /= math.factorial(k)
    out = chi * scale
    for q in range(total + 2):
        value = out.evaluate(q)
        if Fraction(value).denominator != 1:
            raise InternalInvariantViolation(
                f"multicolor polynomial non-integer at q={q}: {value}"
            )
    return out


def count_multicolorings(G: Graph, m: Sequence[int], q: int) -> int:
    """Brute-force count of assignments of an m_v-subset of 1..q to each
    vertex v with adjacent vertices receiving disjoint sets."""
    from itertools import combinations

    if len(m) != G.n:
        raise VertexOutOfRange("multiplicity vector length mismatch")
    n = G.n
    lower = [G.adj[i] & ((1 << i) - 1) for i in range(n)]
    chosen: list[int] = [0] * n
    subsets = [
        [vset(c) for c in combinations(range(1, q + 1), mult)] for mult in m
    ]
    def rec(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for s in subsets[i]:
            ok = True
            mm = lower[i]
            while mm:
                j = (mm & -mm).bit_length() - 1
                if chosen[j] & s:
                    ok = False
                    break
                mm &= mm - 1
            if ok:
                chosen[i] = s
                total += rec(i + 1)
        chosen[i] = 0
        return total
    return rec(0)
