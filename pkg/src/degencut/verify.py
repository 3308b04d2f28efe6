"""Desk-scale verification of the edge-count bounds and cut guarantees.

Four built-in targets, each of the shape hypothesis => conclusion:

  thm1    order >= 2k+2 and no k-degenerate cut
            => 2m >= (k - 1/38) n + (13 n / 190) sqrt(k)
  thm2    order >= 5 and no 2-degenerate cut  =>  10m >= 27n - 35
  thm3    connected, order >= k+6, 2m <= (k+3) n + (k-1)
            => some minimum cut is k-degenerate
  mindeg  order >= k+2 and no k-degenerate cut  =>  minimum degree >= k+2

A report counts every graph scanned, counts hypothesis hits, and records each
conclusion failure as (graph6, reason). Violations are deduplicated by
canonical form when n <= 8 (labeled streams hit an isomorphism class many
times) and the stored graph6 string is the canonical representative, so any
recorded violation can be re-verified from the string alone. All bound
comparisons are exact.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .connectivity import is_connected, is_cut
from .cut_search import exists_min_degenerate_cut, find_degenerate_cut
from .degeneracy import max_k_core
from .enumeration import (
    CANONICAL_MAX_N,
    EnumerationSpec,
    canonical_graph,
    enumerate_labeled,
    partition_prefixes,
)
from .graph import Graph, bits, induced_subgraph
from .graph6 import to_graph6
from .surd import QuadSurd

THEOREMS = ("thm1", "thm2", "thm3", "mindeg")


def bound_thm1(k: int, n: int, m: int) -> bool:
    """Exact test of 2m >= (k - 1/38) n + (13 n / 190) sqrt(k)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    gap = QuadSurd(
        2 * m - (k - Fraction(1, 38)) * n, -Fraction(13, 190) * n, k
    )
    return gap.sign() >= 0


def bound_thm2(n: int, m: int) -> bool:
    """Exact test of 10m >= 27n - 35."""
    return 10 * m >= 27 * n - 35


def hyp_thm3(k: int, n: int, m: int) -> bool:
    """Exact test of 2m <= (k+3) n + (k-1)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return 2 * m <= (k + 3) * n + (k - 1)


def check_min_degree(g: Graph, k: int) -> bool:
    return g.min_degree() >= k + 2


@dataclass(frozen=True)
class ClaimReport:
    status: str  # "holds" | "vacuous" | "violated"
    witness: int | None = None
    detail: str | None = None


def check_claim1(g: Graph, k: int) -> ClaimReport:
    """Every vertex of degree <= k + sqrt(k)/5 must have at least
    k - 2k/25 - 2 sqrt(k)/5 neighbors of degree >= k + sqrt(k)/5."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    threshold = QuadSurd(k, Fraction(1, 5), k)
    required = QuadSurd(Fraction(23 * k, 25), -Fraction(2, 5), k)
    degs = g.degrees()
    heavy = 0
    for v in range(g.n):
        if (QuadSurd(degs[v], 0, k) - threshold).sign() >= 0:
            heavy |= 1 << v
    qualifying = False
    for u in range(g.n):
        if (threshold - degs[u]).sign() < 0:
            continue
        qualifying = True
        count = (g.rows[u] & heavy).bit_count()
        if (QuadSurd(count, 0, k) - required).sign() < 0:
            return ClaimReport(
                "violated", u, f"{count} heavy neighbors at degree {degs[u]}"
            )
    return ClaimReport("holds" if qualifying else "vacuous")


def check_claim2(g: Graph) -> ClaimReport:
    """Every degree-5 vertex must have neighbor degrees summing to >= 29."""
    degs = g.degrees()
    qualifying = False
    for u in range(g.n):
        if degs[u] != 5:
            continue
        qualifying = True
        total = sum(degs[v] for v in bits(g.rows[u]))
        if total < 29:
            return ClaimReport("violated", u, f"neighbor degree sum {total}")
    return ClaimReport("holds" if qualifying else "vacuous")


@dataclass(frozen=True)
class Violation:
    graph6: str
    reason: str


@dataclass
class VerificationReport:
    theorem: str
    k: int
    scanned: int = 0
    hypothesis_hits: int = 0
    violations: list[Violation] = field(default_factory=list)
    exhaustive: bool = False
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "k": self.k,
            "scanned": self.scanned,
            "hypothesis_hits": self.hypothesis_hits,
            "violations": [
                {"graph6": v.graph6, "reason": v.reason} for v in self.violations
            ],
            "exhaustive": self.exhaustive,
            "seconds": self.seconds,
        }


def _no_degenerate_cut(g: Graph, k: int) -> bool:
    return g.n >= k + 2 and find_degenerate_cut(g, k) is None


def evaluate(which: str, k: int, g: Graph) -> tuple[bool, str | None]:
    """(hypothesis satisfied, violation reason or None). Cheap filters first."""
    n, m = g.n, g.m
    if which == "thm1":
        if n < 2 * k + 2 or not _no_degenerate_cut(g, k):
            return False, None
        ok = bound_thm1(k, n, m)
        return True, None if ok else f"2m={2 * m} below the thm1 bound at n={n}"
    if which == "thm2":
        if n < 5 or not _no_degenerate_cut(g, 2):
            return False, None
        ok = bound_thm2(n, m)
        return True, None if ok else f"10m={10 * m} < 27n-35={27 * n - 35}"
    if which == "thm3":
        if n < k + 6 or not hyp_thm3(k, n, m) or not is_connected(g):
            return False, None
        ok = exists_min_degenerate_cut(g, k)
        return True, None if ok else f"no minimum {k}-degenerate cut"
    if which == "mindeg":
        if not _no_degenerate_cut(g, k):
            return False, None
        ok = check_min_degree(g, k)
        return True, None if ok else f"minimum degree {g.min_degree()} < k+2={k + 2}"
    raise ValueError(f"unknown theorem {which!r}; expected one of {THEOREMS}")


def _validate_which_k(which: str, k: int) -> None:
    if which not in THEOREMS:
        raise ValueError(f"unknown theorem {which!r}; expected one of {THEOREMS}")
    if which == "thm2" and k != 2:
        raise ValueError("thm2 is specific to k=2")
    if which == "thm3" and k < 2:
        raise ValueError("thm3 needs k >= 2")
    if which == "thm1" and k < 1:
        raise ValueError("thm1 needs k >= 1")
    if which == "mindeg" and k < 0:
        raise ValueError("mindeg needs k >= 0")


def verify_theorem(
    which: str, k: int, graphs, exhaustive: bool = False
) -> VerificationReport:
    """Scan a graph stream and report hypothesis hits and conclusion failures."""
    _validate_which_k(which, k)
    t0 = time.perf_counter()
    report = VerificationReport(theorem=which, k=k, exhaustive=exhaustive)
    seen: set[str] = set()
    for g in graphs:
        report.scanned += 1
        hyp, reason = evaluate(which, k, g)
        if not hyp:
            continue
        report.hypothesis_hits += 1
        if reason is None:
            continue
        key = to_graph6(canonical_graph(g)) if g.n <= CANONICAL_MAX_N else to_graph6(g)
        if key in seen:
            continue
        seen.add(key)
        report.violations.append(Violation(key, reason))
    report.violations.sort(key=lambda v: (v.graph6, v.reason))
    report.seconds = time.perf_counter() - t0
    return report


def _verify_task(args: tuple[str, int, EnumerationSpec, tuple[int, ...]]) -> dict:
    which, k, spec, prefix = args
    report = verify_theorem(which, k, enumerate_labeled(spec, prefix))
    return {
        "scanned": report.scanned,
        "hits": report.hypothesis_hits,
        "violations": [(v.graph6, v.reason) for v in report.violations],
    }


def verify_theorem_exhaustive(
    which: str, k: int, spec: EnumerationSpec, jobs: int = 1
) -> VerificationReport:
    """Verify over the full enumeration stream, optionally split across
    processes. The merged report does not depend on the worker count."""
    _validate_which_k(which, k)
    t0 = time.perf_counter()
    if jobs <= 1:
        report = verify_theorem(which, k, enumerate_labeled(spec), exhaustive=True)
        report.seconds = time.perf_counter() - t0
        return report
    prefixes = partition_prefixes(spec, 4 * jobs)
    tasks = [(which, k, spec, p) for p in prefixes]
    report = VerificationReport(theorem=which, k=k, exhaustive=True)
    merged: dict[str, str] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_verify_task, tasks):
            report.scanned += part["scanned"]
            report.hypothesis_hits += part["hits"]
            for graph6_str, reason in part["violations"]:
                merged.setdefault(graph6_str, reason)
    report.violations = [Violation(s, r) for s, r in sorted(merged.items())]
    report.seconds = time.perf_counter() - t0
    return report


def spot_check_no_cut(g: Graph, k: int, rng, samples: int = 64) -> bool:
    """Independent spot check after find_degenerate_cut returned None: random
    cuts must all fail k-degeneracy (their induced subgraphs keep a k-core)."""
    n = g.n
    checked = 0
    attempts = 0
    while checked < samples and attempts < samples * 20:
        attempts += 1
        size = rng.randint(0, max(n - 2, 0))
        s = rng.sample(range(n), size)
        if not is_cut(g, s):
            continue
        checked += 1
        if not max_k_core(induced_subgraph(g, s), k).core:
            return False
    return True
