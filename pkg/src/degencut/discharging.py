"""Exact discharging over vertex-degree buckets.

Every vertex starts with charge equal to its degree. For each rule
(sender, receiver, amount) and each edge uv where u's bucket matches the
sender and v's bucket matches the receiver (None matches every bucket), u
sends `amount` to v. Transfers move charge, never create it, so the final
charges always sum to 2m; the point of a scheme is the lower bound it yields
on individual final charges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graph import Graph, bits
from .surd import QuadSurd


@dataclass(frozen=True)
class SendRule:
    sender: str
    receiver: str | None  # None = send to neighbors in every bucket
    amount: QuadSurd


@dataclass(frozen=True)
class DischargingScheme:
    radicand: int
    bucket_of: Callable[[int], str | None]
    rules: tuple[SendRule, ...]


def run_discharging(g: Graph, scheme: DischargingScheme) -> list[QuadSurd]:
    """Final charge per vertex, exactly."""
    k = scheme.radicand
    for rule in scheme.rules:
        if rule.amount.sign() < 0:
            raise ValueError("discharging amounts must be nonnegative")
    buckets = []
    for v in range(g.n):
        b = scheme.bucket_of(g.degree(v))
        if b is None:
            raise ValueError(f"degree {g.degree(v)} is not covered by any bucket")
        buckets.append(b)
    charges = [QuadSurd(g.degree(v), 0, k) for v in range(g.n)]
    by_sender: dict[str, list[SendRule]] = {}
    for rule in scheme.rules:
        by_sender.setdefault(rule.sender, []).append(rule)
    for u in range(g.n):
        rules = by_sender.get(buckets[u])
        if not rules:
            continue
        for v in bits(g.rows[u]):
            for rule in rules:
                if rule.receiver is None or rule.receiver == buckets[v]:
                    amt = rule.amount
                    charges[u] = charges[u] - amt
                    charges[v] = charges[v] + amt
    return charges


def high_degree_transfer_scheme(k: int) -> DischargingScheme:
    """Vertices of degree >= k + sqrt(k)/5 send 5/(38 sqrt(k)) along each edge
    to a neighbor below that threshold."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    threshold_gap = QuadSurd(-k, -Fraction(1, 5), k)  # d + this >= 0 iff d large

    def bucket_of(d: int) -> str:
        return "large" if (threshold_gap + d).sign() >= 0 else "small"

    amount = QuadSurd(0, Fraction(5, 38 * k), k)  # 5/(38 sqrt(k)) rationalized
    return DischargingScheme(k, bucket_of, (SendRule("large", "small", amount),))


def degree_excess_tenths_scheme() -> DischargingScheme:
    """Degree-i vertices for i in 6..8 send (i-5)/10 to every neighbor; degree
    9 and above send 4/10. Rational amounts, so the radicand is 1."""

    def bucket_of(d: int) -> str:
        if d <= 4:
            return "deg_le4"
        if d >= 9:
            return "deg_ge9"
        return f"deg{d}"

    rules = tuple(
        SendRule(f"deg{i}", None, QuadSurd(Fraction(i - 5, 10), 0, 1))
        for i in (6, 7, 8)
    ) + (SendRule("deg_ge9", None, QuadSurd(Fraction(4, 10), 0, 1)),)
    return DischargingScheme(1, bucket_of, rules)
