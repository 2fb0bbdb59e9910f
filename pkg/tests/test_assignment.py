from __future__ import annotations

import itertools
import random

import pytest

from spiderslide import (
    SizeMismatch,
    brute_force_mstar,
    leg_partition,
    mstar,
    relabel_legs,
    spider_from_legs,
    target_assignment,
)
from spiderslide.oracle import ShapeSpec, enumerate_instances


def test_relabel_keeps_discovery_order_when_balanced(spider222):
    assert relabel_legs(spider222, {2, 4}, {1, 3}) == (0, 1, 2)


def test_relabel_puts_receiver_first_and_donor_last(spider222):
    # I packed on leg b, J on leg a
    assert relabel_legs(spider222, {4}, {2}) == (0, 2, 1)
    # surpluses (+1, 0, -1) over legs (a, b, c)
    assert relabel_legs(spider222, {2, 4}, {4, 6}) == (2, 1, 0)


def test_relabel_is_stable_on_ties(spider222):
    assert relabel_legs(spider222, {2}, {6}) == (2, 1, 0)
    assert relabel_legs(spider222, {6}, {2}) == (0, 1, 2)


def test_body_token_joins_the_first_leg(spider222):
    part = leg_partition(spider222, {0, 4}, {2, 6})
    assert part.order == (0, 2, 1)
    assert part.i_sets[0] == {0}
    assert part.i_sets[2] == {4}


def test_identity_assignment(spider222):
    f = target_assignment(spider222, {2, 4}, {2, 4})
    assert f.mapping == {2: 2, 4: 4}
    assert mstar(spider222, {2, 4}, {2, 4}) == 0


def test_examples(spider222):
    f = target_assignment(spider222, {2, 3}, {2, 5})
    assert f.mapping == {2: 2, 3: 5}
    assert f.total_distance(spider222) == 2
    f = target_assignment(spider222, {1, 4}, {1, 6})
    assert f.mapping == {1: 1, 4: 6}
    assert mstar(spider222, {1, 4}, {1, 6}) == 4


def test_phase_one_pairs_farthest_with_farthest():
    g = spider_from_legs([6, 1, 1])
    f = target_assignment(g, {1, 3, 5}, {2, 4, 6})
    assert f.mapping == {5: 6, 3: 4, 1: 2}
    assert f.order == (5, 3, 1)


def test_phase_two_pairs_closest_with_farthest():
    # legs a = 1..4, b = 5..8; I on a, J on b
    g = spider_from_legs([4, 4, 1])
    f = target_assignment(g, {2, 4}, {6, 8})
    assert f.order == (2, 4)
    assert f.mapping == {2: 8, 4: 6}
    assert f.total_distance(g) == brute_force_mstar(g, {2, 4}, {6, 8}) == 12


def test_classes(spider222):
    f = target_assignment(spider222, {2, 4}, {2, 6})
    part = f.partition
    k = part.leg(spider222, 4)
    assert f.outward(spider222, k) == {4}
    assert f.inward(spider222, part.leg(spider222, 2)) == {2}


def test_size_mismatch(spider222):
    with pytest.raises(SizeMismatch):
        target_assignment(spider222, {2}, {2, 4})


def test_matches_brute_force_on_exhaustive_family():
    spec = ShapeSpec(legs=3, leg_len=2, tokens=3, exhaustive=True)
    for g, i, j in enumerate_instances(spec):
        assert mstar(g, i, j) == brute_force_mstar(g, i, j)


def test_exchange_property_and_inverse():
    rng = random.Random(5)
    spec = ShapeSpec(legs=(3, 4), leg_len=4, tokens=4, max_vertices=13)
    for g, i, j in enumerate_instances(spec, seed=3, count=300):
        f = target_assignment(g, i, j)
        inv = f.inverse
        assert all(inv[f(w)] == w for w in i)
        order = f.order
        assert sorted(order) == sorted(i)
        for a, b, c in itertools.permutations(range(len(order)), 3):
            if a < b and a < c and rng.random() < 0.5:
                wi, wj, wp = order[a], order[b], order[c]
                lhs = g.dist(wi, f(wp)) + g.dist(wj, f(wi))
                rhs = g.dist(wi, f(wi)) + g.dist(wj, f(wp))
                assert lhs >= rhs


def test_symmetry_and_dominance():
    rng = random.Random(9)
    spec = ShapeSpec(legs=(3, 5), leg_len=5, tokens=5, max_vertices=18)
    for g, i, j in enumerate_instances(spec, seed=4, count=300):
        m = mstar(g, i, j)
        assert m == mstar(g, j, i)
        dst = list(j)
        for _ in range(5):
            rng.shuffle(dst)
            assert m <= sum(g.dist(a, b) for a, b in zip(sorted(i), dst))
