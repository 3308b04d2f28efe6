"""Extremal families: clique rings with an apex, and joins over independent sets.

ring_of_cliques(k, s): s disjoint copies of K_{k+2} arranged in a cycle, a
perfect matching between consecutive cliques (one permutation of {0..k+1} per
interface), plus an apex vertex joined to every vertex of clique 0. The first
k+2 vertex labels are clique 0 and the apex is the last label. Its only
minimum cut is clique 0, which induces a complete graph, so no minimum cut is
k-degenerate, while its edge count exceeds (k+3)/2 * n + (k-1)/2 by exactly 1.

join_extremal(k, n): K_{k+2} joined with n-k-2 independent vertices. Every cut
contains the whole clique (clique vertices are universal), so no cut is
k-degenerate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, complete, empty_graph, from_edges, join


@dataclass(frozen=True)
class RingSpec:
    k: int
    s: int
    matchings: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.s < 3:
            raise ValueError(f"need at least 3 cliques, got {self.s}")
        if self.matchings is not None:
            if len(self.matchings) != self.s:
                raise ValueError(
                    f"need one matching per interface: {self.s}, got {len(self.matchings)}"
                )
            for perm in self.matchings:
                if sorted(perm) != list(range(self.k + 2)):
                    raise ValueError(f"{perm!r} is not a permutation of 0..{self.k + 1}")

    def interface(self, i: int) -> tuple[int, ...]:
        if self.matchings is None:
            return tuple(range(self.k + 2))
        return self.matchings[i]


def random_ring_spec(k: int, s: int, seed: int) -> RingSpec:
    rng = random.Random(seed)
    perms = []
    for _ in range(s):
        p = list(range(k + 2))
        rng.shuffle(p)
        perms.append(tuple(p))
    return RingSpec(k, s, tuple(perms))


def ring_of_cliques(spec: RingSpec) -> Graph:
    k, s = spec.k, spec.s
    size = k + 2
    apex = size * s
    edges: list[tuple[int, int]] = []
    for i in range(s):
        base = i * size
        for a in range(size):
            for b in range(a + 1, size):
                edges.append((base + a, base + b))
    for i in range(s):
        base = i * size
        nxt = ((i + 1) % s) * size
        perm = spec.interface(i)
        for j in range(size):
            edges.append((base + j, nxt + perm[j]))
    for j in range(size):
        edges.append((apex, j))
    return from_edges(apex + 1, edges)


def join_extremal(k: int, n: int) -> Graph:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n < k + 3:
        raise ValueError(f"need at least k+3={k + 3} vertices, got {n}")
    return join(complete(k + 2), empty_graph(n - k - 2))
