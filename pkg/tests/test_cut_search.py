"""Search behavior: lexicographically earliest hits, honest budgets, and the
fast existence route agreeing with the exhaustive one."""

import random

import pytest

from degencut import (
    SearchBudgetExceeded,
    classify_cut,
    complete,
    complete_bipartite,
    cycle,
    exists_min_degenerate_cut,
    find_degenerate_cut,
    find_min_degenerate_cut,
    is_connected,
    join_extremal,
    path,
    petersen,
    random_graph,
    ring_of_cliques,
    RingSpec,
)
from oracles import brute_has_degenerate_cut


def test_c5_first_independent_cut_is_0_2():
    cert = find_degenerate_cut(cycle(5), 0)
    assert cert.cut == (0, 2)
    assert cert.independent


def test_k23_first_independent_cut_is_the_small_side():
    cert = find_degenerate_cut(complete_bipartite(2, 3), 0)
    assert cert.cut == (0, 1)
    assert cert.independent


def test_low_degree_vertex_gives_an_immediate_cut():
    # endpoint of a path has degree 1 <= k+1, so its neighborhood is returned
    cert = find_degenerate_cut(path(6), 0)
    assert cert.cut == (1,)
    assert cert.components == ((0,), (2, 3, 4, 5))


def test_join_extremal_has_no_low_degeneracy_cut():
    assert find_degenerate_cut(join_extremal(1, 6), 1) is None
    assert find_degenerate_cut(join_extremal(2, 8), 2) is None


def test_complete_graph_has_no_cut_at_all():
    assert find_degenerate_cut(complete(4), 2) is None


def test_find_degenerate_cut_validation():
    with pytest.raises(ValueError):
        find_degenerate_cut(cycle(5), -1)
    with pytest.raises(ValueError):
        find_degenerate_cut(complete(3), 2)  # n < k+2


def test_budget_exhaustion_is_distinct_from_none():
    with pytest.raises(SearchBudgetExceeded) as exc:
        find_degenerate_cut(petersen(), 0, budget=10)
    assert exc.value.examined == 10
    # a completed search may return None; a budgeted abort never does silently
    assert find_degenerate_cut(complete(4), 2, budget=10_000) is None


def test_find_min_degenerate_cut_on_c6():
    cert = find_min_degenerate_cut(cycle(6), 2)
    assert cert.cut == (0, 2)
    assert cert.cut_degeneracy == 0


def test_find_min_degenerate_cut_errors():
    with pytest.raises(ValueError):
        find_min_degenerate_cut(cycle(6), 1)  # k below 2
    with pytest.raises(ValueError, match="complete"):
        find_min_degenerate_cut(complete(5), 2)
    with pytest.raises(ValueError, match="connected"):
        find_min_degenerate_cut(complete_bipartite(0, 4), 2)


def test_ring_minimum_cuts_are_never_low_degeneracy():
    ring = ring_of_cliques(RingSpec(2, 3))
    assert find_min_degenerate_cut(ring, 2) is None
    assert not exists_min_degenerate_cut(ring, 2)


def test_exists_shortcut_agrees_with_exhaustive_search():
    # the existence route takes shortcuts (low-degree neighborhoods, degree
    # k+2 vertices with a non-clique neighborhood) so pin it to the full scan
    rng = random.Random(41)
    checked = 0
    while checked < 200:
        g = random_graph(rng.randint(6, 9), rng, rng.choice((0.5, 0.7, 0.85)))
        if not is_connected(g) or g.is_complete():
            continue
        checked += 1
        for k in (2, 3):
            assert exists_min_degenerate_cut(g, k) == (
                find_min_degenerate_cut(g, k) is not None
            )


def test_find_agrees_with_brute_force_existence():
    rng = random.Random(43)
    for _ in range(120):
        g = random_graph(rng.randint(3, 7), rng, rng.choice((0.3, 0.6)))
        for k in (0, 1, 2):
            if g.n < k + 2:
                continue
            assert (find_degenerate_cut(g, k) is not None) == brute_has_degenerate_cut(g, k)


def test_classify_cut_is_certification():
    cert = classify_cut(cycle(5), [0, 2])
    assert cert.cut == (0, 2)
    with pytest.raises(ValueError):
        classify_cut(cycle(5), [0])
