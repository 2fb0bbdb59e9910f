from __future__ import annotations

import itertools
import random

import pytest

from spiderslide import (
    INFINITY,
    InfiniteCost,
    NotANeighbor,
    SizeMismatch,
    TokenMissing,
    build_spider,
    cost,
    cost_table,
    extract_move_sequence,
    is_reconfigurable,
    replay,
    rigid_tokens,
    spider_from_legs,
)
from spiderslide.feasibility import directed_phi, is_finite
from spiderslide.oracle import independent_sets, oracle_token_move

from .conftest import path_graph, random_tree


def test_infinity_sentinel():
    assert INFINITY + 3 is INFINITY
    assert 3 + INFINITY is INFINITY
    assert INFINITY > 10**18
    assert not INFINITY < 5
    assert min(7, INFINITY) == 7
    assert not is_finite(INFINITY) and is_finite(0)


def test_free_neighbour_costs_one(spider222):
    assert cost(spider222, {2, 4}, 2, 1) == 1


def test_chain_of_retreats():
    g = path_graph(6)
    assert cost(g, {0, 2, 4}, 0, 1) == 3
    s = extract_move_sequence(g, {0, 2, 4}, 0, 1)
    assert s.to_list() == [(4, 5), (2, 3), (0, 1)]
    assert replay(g, {0, 2, 4}, s) == {1, 3, 5}


def test_blocked_leaf_is_infinite():
    g = spider_from_legs([3, 1, 1])
    assert cost(g, {1, 3}, 1, 2) is INFINITY
    assert oracle_token_move(g, {1, 3}, 1, 2) is None
    with pytest.raises(InfiniteCost):
        extract_move_sequence(g, {1, 3}, 1, 2)


def test_cost_table_records_choices():
    g = path_graph(6)
    t = cost_table(g, {0, 2, 4}, 0, 1)
    assert t.cost == 3
    assert t.chosen_child == {2: 3, 4: 5}
    assert t.children(g, 2) == [3]


def test_cost_errors(spider222):
    with pytest.raises(TokenMissing):
        cost(spider222, {2}, 4, 3)
    with pytest.raises(NotANeighbor):
        cost(spider222, {2}, 2, 0)


def test_confined_semantics_differ_from_free_search():
    # legs (1), (2, 3), (4, 5): the token on 2 can reach the body only if the
    # token on 1 leaves its leg, which the retreat rule never allows
    g = spider_from_legs([1, 2, 2])
    assert cost(g, {1, 2}, 2, 0) is INFINITY
    assert oracle_token_move(g, {1, 2}, 2, 0) is None
    assert oracle_token_move(g, {1, 2}, 2, 0, confined=False) == 6


def test_directed_phi_matches_per_edge_tables():
    rng = random.Random(11)
    for _ in range(40):
        g = random_tree(rng.randint(2, 12), rng)
        size = rng.randint(1, 4)
        sets = list(independent_sets(g, size))
        if not sets:
            continue
        tokens = rng.choice(sets)
        table = directed_phi(g, tokens)
        for x in tokens:
            for y in g.adj[x]:
                assert table[(x, y)] == cost(g, tokens, x, y)


def test_rigid_tokens():
    assert rigid_tokens(path_graph(5), {0, 2, 4}) == {0, 2, 4}
    assert rigid_tokens(path_graph(6), {0, 2, 4}) == frozenset()
    star = build_spider(4, [(0, 1), (0, 2), (0, 3)])
    assert rigid_tokens(star, {1, 2}) == {1, 2}
    assert rigid_tokens(star, {1}) == frozenset()
    assert rigid_tokens(star, set()) == frozenset()


def test_reconfigurable_verdicts():
    star = build_spider(4, [(0, 1), (0, 2), (0, 3)])
    v = is_reconfigurable(star, {1, 2}, {2, 3})
    assert not v and "rigid" in v.reason
    assert is_reconfigurable(star, {1}, {3})
    # legs (1), (2), (3), (4, 5): tokens on 1 and 2 pin the body
    g = spider_from_legs([1, 1, 1, 2])
    ok = is_reconfigurable(g, {1, 2, 5}, {1, 2, 4})
    assert ok and ok.rigid == {1, 2} and ok.components == ((3,), (4, 5))
    # legs (1), (2), (3, 4), (5, 6, 7): the free token cannot change legs
    g = spider_from_legs([1, 1, 2, 3])
    bad = is_reconfigurable(g, {1, 2, 4}, {1, 2, 7})
    assert not bad and "component" in bad.reason
    with pytest.raises(SizeMismatch):
        is_reconfigurable(g, {1}, {1, 2})


def test_cost_equals_confined_oracle_on_small_spiders():
    for lengths in itertools.combinations_with_replacement(range(1, 3), 3):
        g = spider_from_legs(lengths)
        for size in (1, 2, 3):
            for tokens in independent_sets(g, size):
                for x in tokens:
                    for y in g.adj[x]:
                        c = cost(g, tokens, x, y)
                        o = oracle_token_move(g, tokens, x, y)
                        assert (o is None) == (c is INFINITY)
                        if o is not None:
                            assert c == o
                            s = extract_move_sequence(g, tokens, x, y)
                            assert len(s) == c and s[len(s) - 1] == (x, y)


def test_removing_a_token_never_raises_the_cost():
    rng = random.Random(3)
    trees = [spider_from_legs(legs) for legs in itertools.product(range(1, 4), repeat=3)]
    trees += [random_tree(rng.randint(2, 10), rng) for _ in range(60)]
    for g in trees:
        for size in (2, 3):
            for tokens in independent_sets(g, size):
                for x in tokens:
                    for y in g.adj[x]:
                        c = cost(g, tokens, x, y)
                        for z in tokens - {x}:
                            assert cost(g, tokens - {z}, x, y) <= c
