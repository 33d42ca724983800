"""Seeded graph families for the property suite.

The generators here are deterministic: the random family is driven by a
fixed seed through `random.Random`, so test runs and failure reports are
reproducible.  All graphs stay at n <= 6, the regime where every identity
in the package has an affordable brute-force oracle.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import Graph, from_edge_list

FAMILY_SEED = 104729
FAMILY_SIZE = 208
MAX_FAMILY_VERTICES = 6


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edge_list(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def star_graph(n: int) -> Graph:
    """Star with center 1 and n-1 leaves."""
    return from_edge_list(n, [(1, v) for v in range(2, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    edges = [(u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)]
    return from_edge_list(a + b, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return from_edge_list(n, edges)


def fixed_family() -> list[tuple[str, Graph]]:
    """Hand-picked structured graphs covering the degenerate shapes."""
    out: list[tuple[str, Graph]] = [
        ("k1", complete_graph(1)),
        ("k2", complete_graph(2)),
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("k5", complete_graph(5)),
        ("k6", complete_graph(6)),
        ("e2", empty_graph(2)),
        ("e4", empty_graph(4)),
        ("p3", path_graph(3)),
        ("p4", path_graph(4)),
        ("p5", path_graph(5)),
        ("p6", path_graph(6)),
        ("c3", cycle_graph(3)),
        ("c4", cycle_graph(4)),
        ("c5", cycle_graph(5)),
        ("c6", cycle_graph(6)),
        ("star4", star_graph(4)),
        ("star5", star_graph(5)),
        ("star6", star_graph(6)),
        ("k23", complete_bipartite(2, 3)),
        ("k33", complete_bipartite(3, 3)),
        ("k2_plus_isolated", from_edge_list(3, [(1, 2)])),
        ("two_triangles", from_edge_list(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])),
        ("triangle_with_tail", from_edge_list(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])),
    ]
    return out


def seeded_family(
    count: int = FAMILY_SIZE, seed: int = FAMILY_SEED
) -> list[tuple[str, Graph]]:
    """The fixed graphs plus seeded random graphs, `count` distinct total.

    Random sizes cycle through 4, 5, 6 and edge densities through
    0.25, 0.5, 0.75; duplicates (same labeled graph) are skipped so the
    family size is honest.
    """
    rng = random.Random(seed)
    out = fixed_family()
    seen = {(g.n, g.adj) for _, g in out}
    sizes = (4, 5, 6)
    densities = (0.25, 0.5, 0.75)
    k = 0
    while len(out) < count:
        n = sizes[k % len(sizes)]
        p = densities[(k // len(sizes)) % len(densities)]
        k += 1
        g = random_graph(rng, n, p)
        key = (g.n, g.adj)
        if key in seen:
            continue
        seen.add(key)
        out.append((f"rand{k:03d}_n{n}", g))
    return out
