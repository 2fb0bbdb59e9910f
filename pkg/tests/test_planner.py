from __future__ import annotations

import pytest

from spiderslide import (
    CASE_TAGS,
    NotASpider,
    NotIndependent,
    PreconditionViolated,
    SlideSequence,
    build_spider,
    build_tree,
    detour_count,
    is_valid_sequence,
    solve,
    spider_from_legs,
)
from spiderslide.oracle import ShapeSpec, enumerate_instances, oracle_shortest
from spiderslide.planner import (
    construct_balanced,
    construct_case1,
    construct_case2,
    construct_case3,
)

from .conftest import path_graph


def _check(g, i, j, report):
    run = is_valid_sequence(g, i, report.sequence)
    assert run.valid and run.final == frozenset(j)
    assert report.length == len(report.sequence)
    assert report.detours == detour_count(g, report.sequence).total
    assert report.length - report.mstar == report.detours


def test_plain_case_two(spider222):
    r = solve(spider222, {2, 3}, {2, 5})
    _check(spider222, {2, 3}, {2, 5}, r)
    assert (r.length, r.mstar, r.detours, r.case_tag) == (2, 2, 0, "case2_plain")
    assert r.summary() == "len=2 mstar=2 detours=0 case=case2_plain feasible=true"


def test_forced_detour(spider222):
    r = solve(spider222, {1, 4}, {1, 6})
    _check(spider222, {1, 4}, {1, 6}, r)
    assert (r.length, r.mstar, r.detours, r.case_tag) == (6, 4, 2, "case2_forced_detour")
    assert r.predicted_detours == 2
    # the shared body neighbour steps onto the body and comes back
    moves = r.sequence.to_list()
    assert moves[0] == (1, 0) and moves[-1] == (0, 1)


def test_two_neighbours_on_one_side(spider112):
    r = solve(spider112, {2, 3}, {0, 3})
    assert r.sequence.to_list() == [(3, 4), (2, 1), (1, 0), (4, 3)]
    assert (r.length, r.mstar, r.detours, r.case_tag) == (4, 2, 2, "case3")
    assert r.predicted_detours == 2


def test_pinned_star_is_infeasible():
    star = build_spider(4, [(0, 1), (0, 2), (0, 3)])
    r = solve(star, {1, 2}, {2, 3})
    assert not r.feasible and r.length is None and len(r.sequence) == 0
    assert r.mstar == 2 and "rigid" in r.explanation
    assert r.summary() == "len=none mstar=2 detours=none case=none feasible=false"


def test_identical_sets(spider222):
    r = solve(spider222, {2, 4}, {2, 4})
    assert r.feasible and r.length == 0 and r.case_tag == "balanced"


def test_rigid_tokens_split_into_paths():
    # legs (1, 2), (3, 4, 5), (6), (7, 8): 1 and 6 pin the body
    g = spider_from_legs([2, 3, 1, 2])
    i, j = {1, 3, 5, 6, 8}, {1, 3, 5, 6, 7}
    r = solve(g, i, j)
    _check(g, i, j, r)
    assert r.length == 1 and r.case_tag == "balanced"
    assert "3 rigid tokens" in r.explanation


def test_paths_are_rejected():
    with pytest.raises(NotASpider):
        solve(path_graph(9), {0, 2, 6}, {3, 5, 8})


def test_bad_inputs(spider222):
    r = solve(spider222, {2}, {2, 4})
    assert not r.feasible and r.mstar is None and "|I|" in r.explanation
    with pytest.raises(NotIndependent):
        solve(spider222, {1, 2}, {2, 4})
    with pytest.raises(NotASpider):
        solve(build_tree(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), {1}, {4})


def test_constructions_check_their_preconditions(spider222, spider112):
    with pytest.raises(PreconditionViolated):
        construct_balanced(spider222, frozenset({2}), frozenset({6}))
    with pytest.raises(PreconditionViolated):
        construct_case1(spider222, frozenset({1}), frozenset({6}))
    with pytest.raises(PreconditionViolated):
        construct_case1(spider222, frozenset({2, 4}), frozenset({4, 2}))
    with pytest.raises(PreconditionViolated):
        construct_case2(spider222, frozenset({2}), frozenset({6}))
    with pytest.raises(PreconditionViolated):
        construct_case3(spider222, frozenset({1}), frozenset({6}))
    with pytest.raises(PreconditionViolated):
        construct_case3(spider112, frozenset({0, 2}), frozenset({0, 2}))


def test_every_case_is_reached_and_optimal():
    spec = ShapeSpec(legs=(3, 5), leg_len=4, tokens=4, max_vertices=13)
    tags = set()
    for g, i, j in enumerate_instances(spec, seed=31, count=3000):
        r = solve(g, i, j)
        truth = oracle_shortest(g, i, j)
        assert r.feasible == (truth is not None)
        if not r.feasible:
            continue
        _check(g, i, j, r)
        assert r.length == truth.length
        assert r.predicted_detours == r.detours
        assert solve(g, j, i).length == r.length
        tags.add(r.case_tag)
    assert tags == set(CASE_TAGS)


def test_shared_target_neighbour_clears_its_leg_first():
    # legs (1), (2), (3, 4, 5); 1 is matched to 3, but 4 still sits behind 3
    g = spider_from_legs([1, 1, 3])
    i, j = {1, 4}, {3, 5}
    r = solve(g, i, j)
    _check(g, i, j, r)
    assert r.case_tag == "case2_plain"
    assert r.sequence.to_list() == [(4, 5), (1, 0), (0, 3)]
    assert not is_valid_sequence(g, i, SlideSequence([(1, 0), (0, 3)])).valid
