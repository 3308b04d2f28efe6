"""Components, vertex cuts, exact vertex connectivity, and minimum-cut enumeration.

A cut is a vertex set S strictly contained in V whose removal leaves a
disconnected graph, i.e. at least two components (so at least two vertices
survive). The empty set is a cut of a disconnected graph. In a complete graph
no cut exists; vertex_connectivity adopts the usual convention kappa(K_n) = n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .degeneracy import degeneracy
from .graph import Graph, bits, induced_subgraph, mask_of

MINIMUM_CUTS_MAX_N = 64  # subset enumeration cap for minimum_cuts


def component_mask(rows: Sequence[int], seed_bit: int, region: int) -> int:
    """Vertices reachable from seed_bit inside region (as a bitmask)."""
    comp = seed_bit
    frontier = seed_bit
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= rows[low.bit_length() - 1]
            f ^= low
        frontier = grow & region & ~comp
        comp |= frontier
    return comp


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, ordered by smallest member."""
    rows = g.rows
    left = g.full_mask
    parts = []
    while left:
        seed = left & -left
        comp = component_mask(rows, seed, left)
        parts.append(tuple(bits(comp)))
        left &= ~comp
    return parts


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = g.full_mask
    return component_mask(g.rows, 1, full) == full


def is_cut(g: Graph, s: Iterable[int] | int) -> bool:
    s_mask = mask_of(s)
    if s_mask & ~g.full_mask:
        raise ValueError("cut candidate contains vertices outside the graph")
    region = g.full_mask & ~s_mask
    if region == 0:
        raise ValueError("cut candidate must be a proper subset of the vertices")
    if region & (region - 1) == 0:
        return False  # one survivor can never be disconnected
    seed = region & -region
    return component_mask(g.rows, seed, region) != region


@dataclass(frozen=True)
class CutCertificate:
    cut: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    cut_degeneracy: int
    independent: bool
    forest: bool
    bipartite: bool

    def is_k_degenerate(self, k: int) -> bool:
        return self.cut_degeneracy <= k

    def to_json_dict(self) -> dict:
        return {
            "cut": list(self.cut),
            "components": [list(c) for c in self.components],
            "cut_degeneracy": self.cut_degeneracy,
            "independent": self.independent,
            "forest": self.forest,
            "bipartite": self.bipartite,
        }


def _is_forest(h: Graph) -> bool:
    # acyclic iff every component has |edges| = |vertices| - 1
    return h.m == h.n - len(components(h))


def _is_bipartite(h: Graph) -> bool:
    color = [-1] * h.n
    for start in range(h.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in bits(h.rows[v]):
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def certify_cut(g: Graph, s: Iterable[int] | int) -> CutCertificate:
    """Build the certificate for a known cut; raises if s is not a cut."""
    s_mask = mask_of(s)
    if not is_cut(g, s_mask):
        raise ValueError("vertex set is not a cut")
    region = g.full_mask & ~s_mask
    rows = g.rows
    parts = []
    left = region
    while left:
        seed = left & -left
        comp = component_mask(rows, seed, left)
        parts.append(tuple(bits(comp)))
        left &= ~comp
    induced = induced_subgraph(g, s_mask)
    degen = degeneracy(induced)
    cut_tuple = tuple(bits(s_mask))
    # any t-vertex graph is (t-1)-degenerate, so small cuts are always tame
    assert degen <= max(len(cut_tuple) - 1, 0)
    return CutCertificate(
        cut=cut_tuple,
        components=tuple(parts),
        cut_degeneracy=degen,
        independent=induced.m == 0,
        forest=_is_forest(induced),
        bipartite=_is_bipartite(induced),
    )


# --- exact vertex connectivity via unit-capacity node-split max flow ---


def _build_flow_network(g: Graph) -> tuple[list[int], list[int], list[list[int]]]:
    """Split each vertex v into v_in = v and v_out = v + n with a unit arc."""
    n = g.n
    to: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add(u: int, v: int, c: int) -> None:
        adj[u].append(len(to))
        to.append(v)
        cap.append(c)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)

    for v in range(n):
        add(v, v + n, 1)
    for u, v in g.edges():
        add(u + n, v, 1)
        add(v + n, u, 1)
    return to, cap, adj


def _local_connectivity(
    n: int,
    to: list[int],
    cap0: list[int],
    adj: list[list[int]],
    s: int,
    t: int,
    cutoff: int,
) -> int:
    """Max vertex-disjoint s-t paths for non-adjacent s, t, stopping at cutoff."""
    cap = cap0.copy()
    source = s + n
    sink = t
    flow = 0
    parent = [-1] * (2 * n)
    while flow < cutoff:
        for i in range(2 * n):
            parent[i] = -1
        parent[source] = -2
        queue = [source]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            u = queue[qi]
            qi += 1
            for arc in adj[u]:
                if cap[arc] and parent[to[arc]] == -1:
                    parent[to[arc]] = arc
                    if to[arc] == sink:
                        found = True
                        break
                    queue.append(to[arc])
        if not found:
            break
        node = sink
        while node != source:
            arc = parent[node]
            cap[arc] -= 1
            cap[arc ^ 1] += 1
            node = to[arc ^ 1]
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact kappa(g) for n >= 2. Flow-based; kappa(K_n) = n - 1."""
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.is_complete():
        return n - 1
    if not is_connected(g):
        return 0
    # every minimum cut either misses v0 (then v0 is separated from some
    # non-neighbor) or contains it (then two of v0's neighbors end up in
    # different components and are non-adjacent), so these pairs suffice
    v0 = min(range(n), key=lambda v: (g.degree(v), v))
    best = g.degree(v0)
    to, cap0, adj = _build_flow_network(g)
    non_neighbors = g.full_mask & ~g.rows[v0] & ~(1 << v0)
    for w in bits(non_neighbors):
        if best <= 0:
            break
        best = min(best, _local_connectivity(n, to, cap0, adj, v0, w, best))
    nbrs = list(bits(g.rows[v0]))
    for x, y in combinations(nbrs, 2):
        if best <= 0:
            break
        if not g.has_edge(x, y):
            best = min(best, _local_connectivity(n, to, cap0, adj, x, y, best))
    return best


def minimum_cuts(g: Graph) -> list[CutCertificate]:
    """All vertex cuts of minimum size, lexicographic by sorted vertex tuple.

    Exhaustive subset enumeration at size kappa; capped at n <= 64. Every
    certificate is checked for the minimum-cut property that each cut vertex
    has a neighbor in every component.
    """
    if g.is_complete():
        raise ValueError("no cuts exist: graph is complete")
    if g.n > MINIMUM_CUTS_MAX_N:
        raise ValueError(f"minimum_cuts is capped at n <= {MINIMUM_CUTS_MAX_N}")
    kappa = vertex_connectivity(g)
    if kappa == 0:
        return [certify_cut(g, 0)]
    rows = g.rows
    full = g.full_mask
    out = []
    for combo in combinations(range(g.n), kappa):
        s_mask = 0
        for v in combo:
            s_mask |= 1 << v
        region = full & ~s_mask
        seed = region & -region
        if component_mask(rows, seed, region) == region:
            continue
        cert = certify_cut(g, s_mask)
        for v in combo:
            row = rows[v]
            assert all(
                any(row >> w & 1 for w in comp) for comp in cert.components
            ), "minimum cut vertex must see every component"
        out.append(cert)
    return out
