from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from spiderslide import (
    INFINITY,
    cost,
    detour_count,
    is_reconfigurable,
    is_valid_sequence,
    mstar,
    replay,
    reverse,
    solve,
    spider_from_legs,
)
from spiderslide.oracle import oracle_shortest


@st.composite
def instances(draw, max_legs=5, max_len=4, max_n=14, max_tokens=4):
    legs = draw(st.lists(st.integers(1, max_len), min_size=3, max_size=max_legs))
    while 1 + sum(legs) > max_n:
        legs[legs.index(max(legs))] -= 1
    g = spider_from_legs(legs)
    size = draw(st.integers(1, max_tokens))

    def independent():
        order = draw(st.permutations(range(g.n)))
        chosen, blocked = [], set()
        for u in order:
            if u not in blocked and len(chosen) < size:
                chosen.append(u)
                blocked.add(u)
                blocked.update(g.adj[u])
        return frozenset(chosen)

    i, j = independent(), independent()
    # greedy picks can fall short on tiny spiders; trim to a common size
    k = min(len(i), len(j))
    return g, frozenset(sorted(i)[:k]), frozenset(sorted(j)[:k])


common = settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@common
@given(instances())
def test_solver_matches_oracle(inst):
    g, i, j = inst
    r = solve(g, i, j)
    truth = oracle_shortest(g, i, j)
    assert r.feasible == (truth is not None) == bool(is_reconfigurable(g, i, j))
    if truth is not None:
        assert r.length == truth.length


@common
@given(instances())
def test_sequence_is_valid_and_reversible(inst):
    g, i, j = inst
    r = solve(g, i, j)
    if not r.feasible:
        return
    run = is_valid_sequence(g, i, r.sequence)
    assert run.valid and run.final == j
    assert replay(g, j, reverse(r.sequence)) == i


@common
@given(instances())
def test_detours_are_even_and_account_for_the_gap(inst):
    g, i, j = inst
    r = solve(g, i, j)
    assert r.mstar is None or r.mstar == mstar(g, j, i)
    if not r.feasible:
        return
    d = detour_count(g, r.sequence).total
    assert d == r.detours == r.length - r.mstar
    assert d % 2 == 0 and d >= 0
    assert r.predicted_detours == d


@common
@given(instances(), st.data())
def test_single_move_cost_bounds(inst, data):
    g, i, _ = inst
    x = data.draw(st.sampled_from(sorted(i)))
    y = data.draw(st.sampled_from(sorted(g.adj[x])))
    c = cost(g, i, x, y)
    assert c is INFINITY or c >= 1
