"""Exhaustive labeled-graph enumeration with sound pruning.

The stream walks edge slots (0,1), (0,2), ..., (n-2,n-1) depth-first, absent
branch before present branch. Pruning never drops a qualifying graph: a slot
is forced absent when an endpoint would exceed the degree cap or the edge
budget, and forced present when an endpoint could no longer reach the minimum
degree (or the remaining slots could no longer reach the edge floor). When the
minimum degree asks for more than half the possible neighbors, the walk runs
in the complement (degree caps prune far harder than degree floors) and emits
complements; the stream contents are identical either way, only the order
differs, and the order is deterministic for a fixed spec.

For parallel scans the slot-decision tree can be split by prefixes; running
the enumerator over `partition_prefixes(spec, t)` in list order concatenates
to exactly the sequential stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .connectivity import is_connected
from .graph import Graph, bits, complement

CANONICAL_MAX_N = 8

_PERM_CACHE: dict[int, list[tuple[int, ...]]] = {}


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    edge_range: tuple[int, int] | None = None  # inclusive bounds on edge count
    min_degree: int | None = None
    connected_only: bool = False
    iso_reject: bool = False


def _validated(spec: EnumerationSpec) -> tuple[int, int, int]:
    n = spec.n
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    max_m = n * (n - 1) // 2
    m_lo, m_hi = spec.edge_range if spec.edge_range is not None else (0, max_m)
    if not (0 <= m_lo <= m_hi <= max_m):
        raise ValueError(f"edge range [{m_lo}, {m_hi}] outside [0, {max_m}]")
    dmin = spec.min_degree or 0
    if dmin < 0:
        raise ValueError("min degree must be nonnegative")
    if spec.iso_reject and n > CANONICAL_MAX_N:
        raise ValueError(f"iso_reject is only supported for n <= {CANONICAL_MAX_N}")
    return m_lo, m_hi, dmin


def _use_complement(n: int, dmin: int) -> bool:
    return dmin * 2 > n - 1


def _iter_rows(
    n: int,
    m_lo: int,
    m_hi: int,
    dmin: int,
    dmax: int,
    prefix: tuple[int, ...],
) -> Iterator[tuple[int, ...]]:
    """Yield adjacency row tuples for every graph meeting the constraints."""
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    num = len(slots)
    if dmin > max(n - 1, 0) or m_lo > num:
        return
    if len(prefix) > num:
        raise ValueError("prefix longer than the slot list")
    rows = [0] * n
    deg = [0] * n
    rem = [n - 1] * n
    m = 0
    total_rem = num

    def apply(i: int, take: int) -> bool:
        nonlocal m, total_rem
        u, v = slots[i]
        if take:
            if deg[u] >= dmax or deg[v] >= dmax or m >= m_hi:
                return False
            rem[u] -= 1
            rem[v] -= 1
            total_rem -= 1
            deg[u] += 1
            deg[v] += 1
            m += 1
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            return True
        rem[u] -= 1
        rem[v] -= 1
        total_rem -= 1
        if (
            deg[u] + rem[u] < dmin
            or deg[v] + rem[v] < dmin
            or m + total_rem < m_lo
        ):
            rem[u] += 1
            rem[v] += 1
            total_rem += 1
            return False
        return True

    def undo(i: int, take: int) -> None:
        nonlocal m, total_rem
        u, v = slots[i]
        rem[u] += 1
        rem[v] += 1
        total_rem += 1
        if take:
            deg[u] -= 1
            deg[v] -= 1
            m -= 1
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    for i, take in enumerate(prefix):
        if not apply(i, take):
            for j in range(i - 1, -1, -1):
                undo(j, prefix[j])
            return

    base = len(prefix)
    depth = base
    cur = [-1] * (num + 1)
    nxt = [0] * (num + 1)
    while True:
        if depth == num:
            yield tuple(rows)
            depth -= 1
        else:
            advanced = False
            while nxt[depth] < 2:
                b = nxt[depth]
                nxt[depth] += 1
                if apply(depth, b):
                    cur[depth] = b
                    depth += 1
                    nxt[depth] = 0
                    cur[depth] = -1
                    advanced = True
                    break
            if advanced:
                continue
            depth -= 1
        while True:
            if depth < base:
                for j in range(base - 1, -1, -1):
                    undo(j, prefix[j])
                return
            undo(depth, cur[depth])
            cur[depth] = -1
            if nxt[depth] < 2:
                break
            depth -= 1


def enumerate_labeled(
    spec: EnumerationSpec, prefix: tuple[int, ...] = ()
) -> Iterator[Graph]:
    """Every labeled graph satisfying `spec`, exactly once, in a fixed order."""
    m_lo, m_hi, dmin = _validated(spec)
    n = spec.n
    max_m = n * (n - 1) // 2
    seen: set[tuple[int, ...]] | None = set() if spec.iso_reject else None
    if _use_complement(n, dmin):
        stream = _iter_rows(
            n, max_m - m_hi, max_m - m_lo, 0, n - 1 - dmin, prefix
        )
        graphs = (complement(Graph(n, rows)) for rows in stream)
    else:
        stream = _iter_rows(n, m_lo, m_hi, dmin, n - 1, prefix)
        graphs = (Graph(n, rows) for rows in stream)
    for g in graphs:
        if spec.connected_only and not is_connected(g):
            continue
        if seen is not None:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def partition_prefixes(spec: EnumerationSpec, tasks: int) -> list[tuple[int, ...]]:
    """Slot-decision prefixes whose streams concatenate to the sequential one.

    Prefixes that admit no graphs yield empty streams, which is harmless.
    iso_reject streams cannot be partitioned (the duplicate filter is global
    state).
    """
    if spec.iso_reject:
        raise ValueError("iso_reject streams cannot be partitioned")
    m_lo, m_hi, dmin = _validated(spec)
    n = spec.n
    num_slots = n * (n - 1) // 2
    depth = 0
    while (1 << depth) < tasks and depth < num_slots:
        depth += 1
    if depth == 0:
        return [()]
    out = []
    for code in range(1 << depth):
        # absent branch explored first, so earlier slots are higher bits
        out.append(tuple(code >> (depth - 1 - i) & 1 for i in range(depth)))
    return out


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Minimum adjacency-row tuple over all vertex relabelings (n <= 8)."""
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form is only supported for n <= {CANONICAL_MAX_N}")
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = list(permutations(range(n)))
    rows = g.rows
    best: tuple[int, ...] | None = None
    for p in _PERM_CACHE[n]:
        relabeled = [0] * n
        for v in range(n):
            pv = p[v]
            acc = 0
            for w in bits(rows[v]):
                acc |= 1 << p[w]
            relabeled[pv] = acc
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_form(g))
