"""Brute-force ground truth on small instances.

Everything here works on arbitrary trees and shares nothing with the
solver beyond the graph representation.  Independent sets are encoded as
integer bitmasks; the reconfiguration graph is explored breadth-first.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ResourceExceeded, SizeMismatch
from .graph import SlideSequence, SpiderGraph, Tree, spider_from_legs

DEFAULT_MAX_STATES = 10_000_000


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for u in vertices:
        m |= 1 << u
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return frozenset(out)


def _slides(g: Tree, state: int, allowed: int | None = None) -> Iterator[tuple[int, int, int]]:
    """Every legal slide from ``state`` as (src, dst, next_state)."""
    rest = state
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        others = state ^ low
        for w in g.adj[u]:
            if allowed is not None and not (allowed >> w) & 1:
                continue
            if (others >> w) & 1:
                continue
            if any((others >> z) & 1 for z in g.adj[w]):
                continue
            yield u, w, others | (1 << w)


@dataclass(frozen=True)
class OracleResult:
    length: int
    sequence: SlideSequence


def oracle_shortest(
    g: Tree, i: Iterable[int], j: Iterable[int], max_states: int = DEFAULT_MAX_STATES
) -> OracleResult | None:
    """Exact shortest slide sequence from i to j, or None if unreachable."""
    i, j = frozenset(i), frozenset(j)
    if len(i) != len(j):
        raise SizeMismatch(f"|I| = {len(i)} but |J| = {len(j)}")
    start, goal = to_mask(i), to_mask(j)
    parent: dict[int, tuple[int, int, int] | None] = {start: None}
    queue = deque([start])
    found = start == goal
    while queue and not found:
        s = queue.popleft()
        for u, w, t in _slides(g, s):
            if t in parent:
                continue
            parent[t] = (s, u, w)
            if t == goal:
                found = True
                break
            if len(parent) > max_states:
                raise ResourceExceeded(len(parent), max_states)
            queue.append(t)
    if not found:
        return None
    moves = []
    s = goal
    while parent[s] is not None:
        prev, u, w = parent[s]
        moves.append((u, w))
        s = prev
    moves.reverse()
    return OracleResult(len(moves), SlideSequence(moves))


def oracle_distances(
    g: Tree, i: Iterable[int], max_states: int = DEFAULT_MAX_STATES
) -> dict[int, int]:
    """Slide distance from i to every reachable set, keyed by bitmask."""
    start = to_mask(i)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        d = dist[s] + 1
        for _, _, t in _slides(g, s):
            if t not in dist:
                dist[t] = d
                if len(dist) > max_states:
                    raise ResourceExceeded(len(dist), max_states)
                queue.append(t)
    return dist


def oracle_token_move(
    g: Tree,
    i: Iterable[int],
    x: int,
    y: int,
    max_states: int = DEFAULT_MAX_STATES,
    confined: bool = True,
) -> int | None:
    """Fewest slides until the token that starts on x stands on y.

    With ``confined`` (the default) only x and the vertices on y's side of
    the edge xy may be entered, so tokens elsewhere never move.  Without it
    the whole tree is available, which can be strictly cheaper or turn an
    impossible move into a possible one.
    """
    i = frozenset(i)
    if x not in i:
        raise ValueError(f"no token on {x}")
    if not g.has_edge(x, y):
        raise ValueError(f"{y} is not adjacent to {x}")
    allowed = None
    if confined:
        side, _ = g.bfs_order(y, blocked=x)
        allowed = to_mask(side) | (1 << x)
    start = (to_mask(i), x)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        (s, at), d = queue.popleft()
        for u, w, t in _slides(g, s, allowed):
            nat = w if u == at else at
            if nat == y:
                return d + 1
            key = (t, nat)
            if key not in seen:
                seen.add(key)
                if len(seen) > max_states:
                    raise ResourceExceeded(len(seen), max_states)
                queue.append((key, d + 1))
    return None


def brute_force_mstar(g: Tree, i: Iterable[int], j: Iterable[int]) -> int:
    """Minimum total distance over all bijections, by enumeration."""
    src, dst = sorted(i), sorted(j)
    if len(src) != len(dst):
        raise SizeMismatch(f"|I| = {len(src)} but |J| = {len(dst)}")
    table = [[g.dist(a, b) for b in dst] for a in src]
    best = 0 if not src else None
    for perm in itertools.permutations(range(len(dst))):
        total = sum(table[k][perm[k]] for k in range(len(src)))
        if best is None or total < best:
            best = total
    return best


def independent_sets(g: Tree, size: int) -> Iterator[frozenset[int]]:
    """All independent sets of exactly ``size`` vertices, in lexicographic order."""
    nbrs = [g._nbrs[u] for u in range(g.n)]

    def grow(chosen: list[int], start: int):
        if len(chosen) == size:
            yield frozenset(chosen)
            return
        for u in range(start, g.n):
            if all(u not in nbrs[c] for c in chosen):
                chosen.append(u)
                yield from grow(chosen, u + 1)
                chosen.pop()

    yield from grow([], 0)


@dataclass(frozen=True)
class ShapeSpec:
    """Bounds on the generated spiders.

    ``legs`` is a leg count or a (low, high) range, ``leg_len`` the longest
    leg, ``tokens`` the largest |I|.  With ``exhaustive`` every spider with
    the given leg count (legs listed in non-decreasing length) and every
    pair of equal-size independent sets is produced; otherwise instances are
    drawn at random.
    """

    legs: int | tuple[int, int] = 3
    leg_len: int = 2
    tokens: int = 2
    max_vertices: int | None = None
    min_tokens: int = 1
    exhaustive: bool = False

    def leg_range(self) -> tuple[int, int]:
        if isinstance(self.legs, int):
            return self.legs, self.legs
        return self.legs


def _exhaustive(spec: ShapeSpec) -> Iterator[tuple[SpiderGraph, frozenset[int], frozenset[int]]]:
    lo, hi = spec.leg_range()
    for k in range(lo, hi + 1):
        for lengths in itertools.combinations_with_replacement(range(1, spec.leg_len + 1), k):
            if spec.max_vertices is not None and 1 + sum(lengths) > spec.max_vertices:
                continue
            g = spider_from_legs(lengths)
            for size in range(spec.min_tokens, spec.tokens + 1):
                sets = list(independent_sets(g, size))
                for a in sets:
                    for b in sets:
                        yield g, a, b


def _random_independent(g: Tree, size: int, rng: random.Random) -> frozenset[int] | None:
    for _ in range(50):
        order = list(range(g.n))
        rng.shuffle(order)
        chosen: list[int] = []
        blocked: set[int] = set()
        for u in order:
            if u not in blocked:
                chosen.append(u)
                blocked.add(u)
                blocked.update(g.adj[u])
                if len(chosen) == size:
                    return frozenset(chosen)
    return None


def _random(spec: ShapeSpec, seed: int) -> Iterator[tuple[SpiderGraph, frozenset[int], frozenset[int]]]:
    rng = random.Random(seed)
    lo, hi = spec.leg_range()
    while True:
        k = rng.randint(lo, hi)
        lengths = [rng.randint(1, spec.leg_len) for _ in range(k)]
        if spec.max_vertices is not None:
            while 1 + sum(lengths) > spec.max_vertices:
                longest = max(range(k), key=lengths.__getitem__)
                if lengths[longest] == 1:
                    break
                lengths[longest] -= 1
            if 1 + sum(lengths) > spec.max_vertices:
                continue
        g = spider_from_legs(lengths)
        size = rng.randint(spec.min_tokens, spec.tokens)
        a = _random_independent(g, size, rng)
        b = _random_independent(g, size, rng)
        if a is None or b is None:
            continue
        yield g, a, b


def enumerate_instances(
    spec: ShapeSpec, seed: int = 0, count: int | None = None
) -> Iterator[tuple[SpiderGraph, frozenset[int], frozenset[int]]]:
    """Exhaustive or seeded random stream of (spider, I, J) with |I| = |J|."""
    stream = _exhaustive(spec) if spec.exhaustive else _random(spec, seed)
    if count is not None:
        stream = itertools.islice(stream, count)
    return stream


def leg_scaling_instance(n: int) -> tuple[SpiderGraph, frozenset[int], frozenset[int]]:
    """Three legs of length n // 3; tokens on every even depth of the first
    leg move to the same depths of the second.  The shortest sequence has
    length quadratic in n."""
    length = n // 3
    if length < 2:
        raise ValueError("n must be at least 6")
    g = spider_from_legs([length, length, length])
    a, b = g.legs[0], g.legs[1]
    depths = range(2, length + 1, 2)
    return g, frozenset(a[d - 1] for d in depths), frozenset(b[d - 1] for d in depths)
