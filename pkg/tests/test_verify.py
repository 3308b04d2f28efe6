"""Verification layer: exact bound predicates, per-vertex claims, report
aggregation, dedup, and the parallel scan agreeing with the sequential one."""

import subprocess
import sys
from fractions import Fraction

import pytest

from degencut import (
    EnumerationSpec,
    QuadSurd,
    bound_thm1,
    bound_thm2,
    check_claim1,
    check_claim2,
    check_min_degree,
    complete,
    cycle,
    enumerate_labeled,
    from_edges,
    hyp_thm3,
    join_extremal,
    random_ring_spec,
    ring_of_cliques,
    spot_check_no_cut,
    to_graph6,
    verify_theorem,
    verify_theorem_exhaustive,
)
from degencut.verify import _validate_which_k, evaluate

from conftest import random_graph_stream


# ---------------------------------------------------------------- bounds


def test_bound_thm1_examples():
    # K_8 at k=6: 2m = 56, rhs = (6 - 1/38)*8 + (13*8/190)sqrt(6) < 49.3
    assert bound_thm1(6, 8, 28)
    # C_5 at k=1: 2m = 10, rhs ~ 4.9 + 0.34*sqrt(1)
    assert bound_thm1(1, 5, 5)
    # sparse graph fails: 2m = 10 vs rhs ~ 19.5 + ... at k=2, n=10
    assert not bound_thm1(2, 10, 5)


def test_bound_thm1_exact_boundary():
    # with n = 190*38 both terms clear the denominators: rhs is an integer
    # plus an integer multiple of sqrt(k)
    n = 190 * 38
    rhs_rat = (Fraction(2) - Fraction(1, 38)) * n  # k = 2
    assert rhs_rat == 14250
    # 13*n/190 = 494, so the bound reads 2m >= 14250 + 494*sqrt(2)
    gap = QuadSurd(-14250, -494, 2)
    lo = 7474  # 2*7474 = 14948 < 14250 + 494*sqrt(2) ~ 14948.62
    hi = 7475
    assert (gap + 2 * lo).sign() < 0
    assert (gap + 2 * hi).sign() > 0
    assert not bound_thm1(2, n, lo)
    assert bound_thm1(2, n, hi)


def test_minimum_degree_crossover_for_thm1():
    # 2m >= (k+2)n suffices for the bound exactly while
    # k + 2 >= k - 1/38 + (13/190)sqrt(k), i.e. sqrt(k) <= 385/13.
    # 877 < (385/13)^2 = 877.07... < 878
    for k, expect in ((877, True), (878, False)):
        margin = QuadSurd(2 + Fraction(1, 38), -Fraction(13, 190), k)
        assert (margin.sign() >= 0) is expect
        # same fact via the public predicate with 2m = (k+2)n
        n = 2 * 190 * 38
        assert bound_thm1(k, n, (k + 2) * n // 2) is expect


def test_bound_thm2_examples():
    assert bound_thm2(5, 10)  # K_5: 100 >= 100, tight
    assert not bound_thm2(5, 9)
    assert bound_thm2(7, 17)  # 170 >= 154
    assert not bound_thm2(8, 18)  # 180 < 181


def test_hyp_thm3_examples():
    # ring construction exceeds the threshold by exactly one edge
    spec = random_ring_spec(2, 3, 0)
    g = ring_of_cliques(spec)
    k = 2
    assert 2 * g.m == (k + 3) * g.n + (k - 1) + 2
    assert not hyp_thm3(k, g.n, g.m)
    assert hyp_thm3(k, g.n, g.m - 1)
    assert hyp_thm3(2, 8, 20)  # 40 <= 41
    assert not hyp_thm3(2, 8, 21)


def test_check_min_degree():
    # the conclusion being tested is min degree >= k + 2
    assert check_min_degree(complete(5), 2)
    assert not check_min_degree(complete(5), 3)
    assert check_min_degree(cycle(4), 0)
    assert not check_min_degree(cycle(4), 1)
    assert check_min_degree(ring_of_cliques(random_ring_spec(2, 3, 0)), 2)
    assert check_min_degree(join_extremal(1, 6), 1)


# ---------------------------------------------------------------- claims


def test_claim1_violated_on_square():
    # C_4 at k=2: threshold 2 + sqrt(2)/5 > 2, so every vertex is light and
    # the requirement 23*2/25 - (2/5)sqrt(2) ~ 1.27 needs two heavy neighbors
    rep = check_claim1(cycle(4), 2)
    assert rep.status == "violated"
    assert rep.witness == 0
    assert "0 heavy neighbors" in rep.detail


def test_claim1_vacuous_cases():
    # K_5 at k=2: every degree is 4 >= threshold, no light vertex exists
    assert check_claim1(complete(5), 2).status == "vacuous"
    # join extremal at k=2: light vertices exist but all have degree >=
    # threshold? no: independent side has degree 4 = k+2 > k + sqrt(k)/5
    assert check_claim1(join_extremal(2, 8), 2).status == "vacuous"


def test_claim1_holds_nonvacuously_at_k100():
    # at k = 100 the light threshold is exactly k + 2 = 102, so the
    # degree-102 vertices of K_103 are light with 102 heavy neighbors each,
    # and 102 >= 23*100/25 - (2/5)*10 = 88
    rep = check_claim1(complete(103), 100)
    assert rep.status == "holds"


def test_claim2_fixtures():
    # vertex 0 has degree 5 with neighbor degrees (5,5,5,5,8): sum 28 < 29
    edges = [(0, i) for i in (1, 2, 3, 4, 5)]
    edges += [(a, b) for a in (1, 2, 3, 4) for b in (1, 2, 3, 4) if a < b]
    edges += [(1, 6), (2, 7), (3, 8), (4, 9)]
    edges += [(5, v) for v in (6, 7, 8, 9, 10, 11, 12)]
    g = from_edges(13, edges)
    assert g.degrees()[0] == 5 and g.degrees()[5] == 8
    rep = check_claim2(g)
    assert rep.status == "violated"
    assert rep.witness == 0
    assert "28" in rep.detail

    # two degree-5 vertices, each with neighbor sum 5 + 4*6 = 29
    edges = [(0, 1)]
    edges += [(u, b) for u in (0, 1) for b in (2, 3, 4, 5)]
    edges += [(a, b) for a in (2, 3, 4, 5) for b in (2, 3, 4, 5) if a < b]
    edges += [(2, 6), (3, 7), (4, 8), (5, 9)]
    g = from_edges(10, edges)
    degs = g.degrees()
    assert degs[0] == degs[1] == 5 and all(degs[v] == 6 for v in (2, 3, 4, 5))
    assert check_claim2(g).status == "holds"

    # no degree-5 vertex at all
    assert check_claim2(complete(7)).status == "vacuous"


# ---------------------------------------------------------------- evaluate


def test_evaluate_thm1_on_complete_graph():
    hyp, reason = evaluate("thm1", 1, complete(4))
    assert hyp and reason is None  # n=4 >= 2k+2, no 1-degenerate cut, bound ok


def test_evaluate_small_n_short_circuits():
    hyp, reason = evaluate("thm1", 3, complete(4))  # n < 2k+2
    assert not hyp and reason is None
    hyp, reason = evaluate("thm2", 2, complete(4))  # n < 5
    assert not hyp and reason is None


def test_evaluate_mindeg_counterexample():
    # K_4 has no 2-degenerate cut (no cuts at all) but min degree 3 < k+2
    hyp, reason = evaluate("mindeg", 2, complete(4))
    assert hyp
    assert reason == "minimum degree 3 < k+2=4"


def test_validate_which_k():
    _validate_which_k("thm2", 2)
    with pytest.raises(ValueError):
        _validate_which_k("thm2", 3)
    with pytest.raises(ValueError):
        _validate_which_k("thm3", 1)
    with pytest.raises(ValueError):
        _validate_which_k("thm1", 0)
    with pytest.raises(ValueError):
        _validate_which_k("mindeg", -1)
    with pytest.raises(ValueError):
        _validate_which_k("thm9", 2)


# ---------------------------------------------------------------- reports


def test_verify_thm2_full_n5_stream():
    report = verify_theorem("thm2", 2, enumerate_labeled(EnumerationSpec(5)))
    assert report.scanned == 1024
    assert report.hypothesis_hits == 1
    assert report.passed
    assert not report.exhaustive
    d = report.to_json_dict()
    assert set(d) == {
        "theorem",
        "k",
        "scanned",
        "hypothesis_hits",
        "violations",
        "exhaustive",
        "seconds",
    }
    assert d["violations"] == []


def test_verify_thm2_only_hit_is_k5():
    hits = [
        g
        for g in enumerate_labeled(EnumerationSpec(5))
        if evaluate("thm2", 2, g)[0]
    ]
    assert hits == [complete(5)]


def test_verify_thm3_vacuous_on_ring():
    g = ring_of_cliques(random_ring_spec(2, 3, 0))
    report = verify_theorem("thm3", 2, [g])
    assert report.scanned == 1 and report.hypothesis_hits == 0
    assert report.passed


def test_verify_mindeg_on_join():
    report = verify_theorem("mindeg", 1, [join_extremal(1, 6)])
    assert report.hypothesis_hits == 1
    assert report.passed


def test_verify_mindeg_violation_is_replayable():
    report = verify_theorem("mindeg", 2, [complete(4)])
    assert not report.passed
    (v,) = report.violations
    assert v.graph6 == "C~"
    # the violation must reproduce in a fresh process from the graph6 alone
    code = (
        "from degencut import parse_graph6\n"
        "from degencut.verify import evaluate\n"
        f"hyp, reason = evaluate('mindeg', 2, parse_graph6({v.graph6!r}))\n"
        "assert hyp and reason is not None\n"
        "print(reason)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == v.reason


def test_verify_dedups_repeated_violations():
    # the same counterexample presented twice is recorded once
    a = complete(4)
    b = from_edges(4, [(3, 2), (3, 1), (3, 0), (2, 1), (2, 0), (1, 0)])
    report = verify_theorem("mindeg", 2, [a, b])
    assert report.scanned == 2
    assert report.hypothesis_hits == 2
    assert len(report.violations) == 1


def test_exhaustive_scan_matches_across_jobs():
    spec = EnumerationSpec(5)
    seq = verify_theorem_exhaustive("thm2", 2, spec, jobs=1)
    par = verify_theorem_exhaustive("thm2", 2, spec, jobs=3)
    a, b = seq.to_json_dict(), par.to_json_dict()
    a.pop("seconds"), b.pop("seconds")
    assert a == b
    assert seq.exhaustive and seq.passed


def test_exhaustive_flag_requires_enumeration_spec():
    report = verify_theorem_exhaustive(
        "mindeg", 0, EnumerationSpec(4, connected_only=True), jobs=2
    )
    assert report.scanned == 38
    # hits are the connected 4-vertex graphs with no independent cut (K_4
    # and the diamond among the isomorphism classes); both have min degree 2
    assert report.passed
    assert report.hypothesis_hits > 0


def test_spot_check_no_cut(rng):
    assert spot_check_no_cut(join_extremal(2, 8), 2, rng)
    assert not spot_check_no_cut(cycle(5), 0, rng)


def test_random_stream_verify_smoke():
    graphs = list(random_graph_stream(80, 4, 8, seed=7))
    report = verify_theorem("thm2", 2, graphs)
    assert report.scanned == 80
    assert report.passed


def test_violations_sorted_and_stable():
    gs = [complete(4), complete(3), complete(4)]
    report = verify_theorem("mindeg", 2, gs)
    keys = [(v.graph6, v.reason) for v in report.violations]
    assert keys == sorted(keys)
    assert all(v.graph6 in (to_graph6(complete(3)), to_graph6(complete(4))) for v in report.violations)
