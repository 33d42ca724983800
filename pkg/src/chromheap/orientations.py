"""Acyclic orientations: enumeration, source components, subset tables.

An orientation of a graph is stored as one direction bit per edge of the
canonical edge order (Graph.edges): bit e clear means the edge (u, v)
with u < v is oriented u -> v, bit e set means v -> u.  Orientation
equality and ordering therefore compare direction bits in the canonical
edge order of the host graph.

The two 2^n tables computed here drive every fast counting path:

* a[V] = number of acyclic orientations of G[V], via the subset
  recurrence  sum over independent U subset of V of (-1)^|U| a[V \\ U]
  = [V is empty];
* b[V] = number of acyclic orientations of G[V] whose unique source is
  min(V), via the same recurrence restricted to U avoiding min(V), with
  a correction term for V itself independent.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    CyclicOrientation,
    InternalInvariantViolation,
    NotAdjacent,
    TooManyEdges,
    VertexOutOfRange,
)
from .graphs import (
    Graph,
    independence_table,
    induced_subgraph,
    iter_vertices,
    vset_min,
    vset_tuple,
)

MAX_ENUM_EDGES = 26


@dataclass(frozen=True)
class Orientation:
    """One direction bit per edge of the canonical edge order."""

    edges: tuple[tuple[int, int], ...]
    bits: int

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Directed arcs (tail, head), in canonical edge order."""
        out = []
        for e, (u, v) in enumerate(self.edges):
            out.append((v, u) if self.bits >> e & 1 else (u, v))
        return tuple(out)

    def __lt__(self, other: "Orientation") -> bool:
        if self.edges != other.edges:
            raise ValueError("orientations of different graphs are not ordered")
        return self.bits < other.bits

    def to_json_dict(self) -> dict:
        return {"arcs": [[t, h] for t, h in self.arcs]}


def _iter_acyclic_bits(
    n: int,
    edges: Sequence[tuple[int, int]],
    forced: Iterable[tuple[int, int]] = (),
) -> Iterator[int]:
    """Direction bitmasks of all acyclic orientations of the free edges,
    consistent with the forced arcs, in lexicographic direction order.

    reach[v-1] is the transitively closed reachability mask of v; an arc
    t -> h is admissible iff t is not already reachable from h.
    """
    reach = [1 << i for i in range(n)]
    for t, h in forced:
        ti, hi = t - 1, h - 1
        if reach[hi] >> ti & 1:
            return
        rh = reach[hi]
        tbit = 1 << ti
        for w in range(n):
            if reach[w] & tbit:
                reach[w] |= rh
    m = len(edges)
    stack = [(0, 0, reach)]
    while stack:
        e, bits, rc = stack.pop()
        if e == m:
            yield bits
            continue
        u, v = edges[e]
        for dirbit in (1, 0):
            t, h = (v, u) if dirbit else (u, v)
            ti, hi = t - 1, h - 1
            if rc[hi] >> ti & 1:
                continue
            nr = rc.copy()
            rh = nr[hi]
            tbit = 1 << ti
            for w in range(n):
                if nr[w] & tbit:
                    nr[w] |= rh
            stack.append((e + 1, bits | (dirbit << e), nr))


def enumerate_acyclic(G: Graph) -> Iterator[Orientation]:
    """Stream every acyclic orientation of G exactly once, deterministically."""
    if G.num_edges > MAX_ENUM_EDGES:
        raise TooManyEdges(f"enumeration capped at {MAX_ENUM_EDGES} edges, got {G.num_edges}")
    edges = G.edges
    for bits in _iter_acyclic_bits(G.n, edges):
        yield Orientation(edges, bits)


@lru_cache(maxsize=None)
def acyclic_orientation_list(G: Graph) -> tuple[Orientation, ...]:
    return tuple(enumerate_acyclic(G))


def _out_masks(G: Graph, o: Orientation) -> list[int]:
    out = [0] * G.n
    for t, h in o.arcs:
        out[t - 1] |= 1 << (h - 1)
    return out


def sources(G: Graph, o: Orientation) -> int:
    """Bitmask of vertices with no incoming arc (isolated vertices count)."""
    in_mask = 0
    for _, h in o.arcs:
        in_mask |= 1 << (h - 1)
    return G.full_mask & ~in_mask


def sinks(G: Graph, o: Orientation) -> int:
    """Bitmask of vertices with no outgoing arc."""
    out_mask = 0
    for t, _ in o.arcs:
        out_mask |= 1 << (t - 1)
    return G.full_mask & ~out_mask


def is_acyclic(G: Graph, o: Orientation) -> bool:
    out = _out_masks(G, o)
    indeg = [0] * G.n
    for _, h in o.arcs:
        indeg[h - 1] += 1
    queue = [v for v in range(G.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in iter_vertices(out[v]):
            indeg[w - 1] -= 1
            if indeg[w - 1] == 0:
                queue.append(w - 1)
    return seen == G.n


def _reachable(out: Sequence[int], v: int) -> int:
    mask = 1 << (v - 1)
    frontier = mask
    while frontier:
        nxt = 0
        for w in iter_vertices(frontier):
            nxt |= out[w - 1]
        frontier = nxt & ~mask
        mask |= nxt
    return mask


def _source_components_from_out(n: int, full: int, out: Sequence[int]) -> tuple[int, ...]:
    comps = []
    used = 0
    while used != full:
        v = vset_min(full & ~used)
        comp = _reachable(out, v) & ~used
        comps.append(comp)
        used |= comp
    return tuple(comps)


def source_components(G: Graph, o: Orientation) -> tuple[int, ...]:
    """Ordered source components of an acyclic orientation.

    Component k is the set of vertices reachable from the smallest vertex
    not covered by components 1..k-1, minus those earlier components.  The
    result is an ordered partition of the vertex set; each component's
    minimum is the unique source of the restricted orientation.
    """
    if not is_acyclic(G, o):
        raise CyclicOrientation("source components need an acyclic orientation")
    return _source_components_from_out(G.n, G.full_mask, _out_masks(G, o))


def lambda_partition(components: Sequence[int]) -> tuple[int, ...]:
    """Component sizes sorted weakly decreasing."""
    return tuple(sorted((c.bit_count() for c in components), reverse=True))


def restrict_orientation(G: Graph, o: Orientation, mask: int) -> Orientation:
    """Restriction of an orientation to G[mask], in the induced numbering."""
    H, labels = induced_subgraph(G, mask)
    direction = {}
    for e, (u, v) in enumerate(G.edges):
        direction[(u, v)] = o.bits >> e & 1
    bits = 0
    for e, (u, v) in enumerate(H.edges):
        ou, ov = labels[u - 1], labels[v - 1]
        bits |= direction[(ou, ov)] << e
    return Orientation(H.edges, bits)


def assemble_orientation(
    G: Graph, blocks: Sequence[tuple[int, Orientation]]
) -> Orientation:
    """Rebuild a full orientation from ordered (vertex mask, orientation of
    the induced subgraph) blocks: edges inside a block keep the block's
    direction, edges between blocks point from the later block to the
    earlier one.
    """
    cover = 0
    block_index = {}
    for k, (mask, _) in enumerate(blocks):
        if mask & cover:
            raise VertexOutOfRange("blocks overlap")
        cover |= mask
        for v in iter_vertices(mask):
            block_index[v] = k
    if cover != G.full_mask:
        raise VertexOutOfRange("blocks do not cover the vertex set")
    edge_pos = {edge: e for e, edge in enumerate(G.edges)}
    bits = 0
    for mask, sub in blocks:
        _, labels = induced_subgraph(G, mask)
        for t, h in sub.arcs:
            ot, oh = labels[t - 1], labels[h - 1]
            u, v = (ot, oh) if ot < oh else (oh, ot)
            if (ot, oh) != (u, v):
                bits |= 1 << edge_pos[(u, v)]
    for u, v in G.edges:
        ku, kv = block_index[u], block_index[v]
        if ku == kv:
            continue
        # tail is the endpoint in the later block
        tail, head = (u, v) if ku > kv else (v, u)
        if tail > head:
            bits |= 1 << edge_pos[(head, tail)]
    return Orientation(G.edges, bits)


def is_descent_free(G: Graph, o: Orientation, coloring: Sequence[int]) -> bool:
    """True iff colors never decrease along arcs; coloring[v-1] colors vertex v."""
    if len(coloring) != G.n:
        raise VertexOutOfRange(f"coloring has length {len(coloring)}, need {G.n}")
    for t, h in o.arcs:
        if coloring[t - 1] > coloring[h - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# subset tables


def acyclic_count_table(G: Graph) -> list[int]:
    """a[V] = number of acyclic orientations of G[V], for every mask V."""
    indep = independence_table(G)  # enforces the n <= 22 cap
    size = 1 << G.n
    a = [0] * size
    a[0] = 1
    for V in range(1, size):
        odd = 0
        even = 0
        U = V
        while U:
            if indep[U]:
                if U.bit_count() & 1:
                    odd += a[V ^ U]
                else:
                    even += a[V ^ U]
            U = (U - 1) & V
        a[V] = odd - even
    return a


def unique_source_min_table(G: Graph) -> list[int]:
    """b[V] = acyclic orientations of G[V] whose unique source is min(V);
    b of the empty set is 0."""
    indep = independence_table(G)
    size = 1 << G.n
    b = [0] * size
    for V in range(1, size):
        low = V & -V
        rest = V ^ low
        odd = 0
        even = 0
        U = rest
        while U:
            if indep[U]:
                if U.bit_count() & 1:
                    odd += b[V ^ U]
                else:
                    even += b[V ^ U]
            U = (U - 1) & rest
        val = odd - even
        if indep[V]:
            val += 1 if V.bit_count() & 1 else -1
        b[V] = val
    return b


def count_bipolar(G: Graph, u: int, v: int) -> int:
    """Acyclic orientations with unique source u and unique sink v; u, v
    must be adjacent."""
    if not G.has_edge(u, v):
        raise NotAdjacent(f"vertices {u} and {v} are not adjacent")
    want_src = 1 << (u - 1)
    want_snk = 1 << (v - 1)
    count = 0
    for o in acyclic_orientation_list(G):
        if sources(G, o) == want_src and sinks(G, o) == want_snk:
            count += 1
    return count


# ---------------------------------------------------------------------------
# enumerated statistics of induced subgraphs (independent oracle paths)


@lru_cache(maxsize=None)
def subgraph_acyclic_count(G: Graph, mask: int) -> int:
    """Acyclic orientation count of G[mask] by direct enumeration."""
    H, _ = induced_subgraph(G, mask)
    return sum(1 for _ in _iter_acyclic_bits(H.n, H.edges))


@lru_cache(maxsize=None)
def subgraph_unique_source_count(G: Graph, mask: int, source: int) -> int:
    """Acyclic orientations of G[mask] whose unique source is the original
    vertex `source`, by direct enumeration."""
    if not mask >> (source - 1) & 1:
        return 0
    H, labels = induced_subgraph(G, mask)
    want = 1 << labels.index(source)
    count = 0
    for o in enumerate_acyclic(H):
        if sources(H, o) == want:
            count += 1
    return count


def subgraph_unique_source_min_count(G: Graph, mask: int) -> int:
    """Enumerated count with the unique source at min(mask); 0 for the empty set."""
    if mask == 0:
        return 0
    return subgraph_unique_source_count(G, mask, vset_min(mask))


@lru_cache(maxsize=None)
def subgraph_component_histogram(G: Graph, mask: int) -> tuple[tuple[int, int], ...]:
    """Histogram (component count -> orientations) of G[mask]; the empty
    graph contributes one orientation with zero components."""
    if mask == 0:
        return ((0, 1),)
    H, _ = induced_subgraph(G, mask)
    tally: Counter[int] = Counter()
    for o in enumerate_acyclic(H):
        comps = _source_components_from_out(H.n, H.full_mask, _out_masks(H, o))
        tally[len(comps)] += 1
    return tuple(sorted(tally.items()))


@lru_cache(maxsize=None)
def subgraph_source_mask_tally(G: Graph, mask: int) -> tuple[tuple[int, int], ...]:
    """Histogram (source bitmask -> orientations) of G[mask], with source
    masks translated back to the labels of G."""
    if mask == 0:
        return ((0, 1),)
    H, labels = induced_subgraph(G, mask)
    tally: Counter[int] = Counter()
    for o in enumerate_acyclic(H):
        smask = 0
        for v in iter_vertices(sources(H, o)):
            smask |= 1 << (labels[v - 1] - 1)
        tally[smask] += 1
    return tuple(sorted(tally.items()))


@lru_cache(maxsize=None)
def subgraph_lambda_tally(G: Graph, mask: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Histogram (component size partition -> orientations) of G[mask]."""
    if mask == 0:
        return (((), 1),)
    H, _ = induced_subgraph(G, mask)
    tally: Counter[tuple[int, ...]] = Counter()
    for o in enumerate_acyclic(H):
        comps = _source_components_from_out(H.n, H.full_mask, _out_masks(H, o))
        tally[lambda_partition(comps)] += 1
    return tuple(sorted(tally.items()))


def source_component_histogram(G: Graph) -> dict[int, int]:
    """Component-count histogram over all acyclic orientations of G."""
    return dict(subgraph_component_histogram(G, G.full_mask))


def lambda_histogram(G: Graph) -> dict[tuple[int, ...], int]:
    """Partition histogram over all acyclic orientations of G."""
    return dict(subgraph_lambda_tally(G, G.full_mask))


def check_tables_against_enumeration(G: Graph) -> None:
    """Cross-check a[V] and b[V] against direct enumeration on every subset.

    Intended for n <= 7; raises InternalInvariantViolation on mismatch.
    """
    a = acyclic_count_table(G)
    b = unique_source_min_table(G)
    for mask in range(1 << G.n):
        ea = subgraph_acyclic_count(G, mask)
        eb = subgraph_unique_source_min_count(G, mask)
        if a[mask] != ea:
            raise InternalInvariantViolation(
                f"a[{vset_tuple(mask)}] = {a[mask]} but enumeration found {ea}"
            )
        if b[mask] != eb:
            raise InternalInvariantViolation(
                f"b[{vset_tuple(mask)}] = {b[mask]} but enumeration found {eb}"
            )
