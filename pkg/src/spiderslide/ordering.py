"""Repairing the assignment order into a move order without obstacles.

For a total order ◁ on I, the blocking set of x is

    K(x, ◁) = N[P(x, f(x))] ∩ {y in I : x ◁ y},

the tokens that come after x but sit on or next to the path x has to
walk.  ``token_ordering`` repeatedly picks the earliest x with a
non-empty blocking set and moves its blockers in front of it, until no
blocking set is left.  Walking every token straight to its target in the
final order is then a valid slide sequence.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Sequence

from .assignment import TargetAssignment
from .errors import NonTermination, PreconditionViolated
from .graph import SpiderGraph


@dataclass(frozen=True)
class BlockingSets:
    K: frozenset[int]
    K1: frozenset[int]
    K2: frozenset[int]

    def __bool__(self) -> bool:
        return bool(self.K)


class _TokenIndex:
    """I-tokens bucketed by leg and sorted by depth, for path-neighbourhood
    queries in O(log n + output)."""

    def __init__(self, g: SpiderGraph, tokens):
        self.g = g
        self.body_token = g.body in tokens
        per_leg: list[list[int]] = [[] for _ in range(g.leg_count)]
        for u in tokens:
            if u != g.body:
                per_leg[g.leg_of[u]].append(u)
        depth = g.depth
        self.vertices = [sorted(vs, key=depth.__getitem__) for vs in per_leg]
        self.depths = [[depth[u] for u in vs] for vs in self.vertices]
        self.first = [vs[0] for vs in self.vertices if vs and depth[vs[0]] == 1]

    def _range(self, leg: int, lo: int, hi: int) -> list[int]:
        ds = self.depths[leg]
        a, b = bisect_left(ds, lo), bisect_right(ds, hi)
        return self.vertices[leg][a:b]

    def near_path(self, x: int, t: int) -> list[int]:
        """Tokens in the closed neighbourhood of the x-t path."""
        g = self.g
        lx, lt = g.leg_of[x], g.leg_of[t]
        dx, dt = g.depth[x], g.depth[t]
        body = g.body
        if lx == lt and lx >= 0:
            lo, hi = min(dx, dt) - 1, max(dx, dt) + 1
            out = self._range(lx, max(lo, 1), hi)
            if lo <= 0 and self.body_token:
                out.append(body)
            return out
        # the path runs through the body
        out = []
        seen_legs = set()
        for leg, d in ((lx, dx), (lt, dt)):
            if leg >= 0 and leg not in seen_legs:
                seen_legs.add(leg)
                out.extend(self._range(leg, 1, d + 1))
        out.extend(u for u in self.first if g.leg_of[u] not in seen_legs)
        if self.body_token:
            out.append(body)
        return out


def _classes(g: SpiderGraph, f: TargetAssignment, x: int) -> tuple[int, frozenset[int], frozenset[int]]:
    k = f.partition.leg(g, x)
    return k, f.outward(g, k), f.inward(g, k)


def blocking_sets(
    g: SpiderGraph, f: TargetAssignment, order: Sequence[int], x: int
) -> BlockingSets:
    """K, K¹ and K² of ``x`` under the total order given as a sequence."""
    pos = {u: p for p, u in enumerate(order)}
    index = _TokenIndex(g, f.mapping)
    K = frozenset(y for y in index.near_path(x, f(x)) if pos[y] > pos[x])
    _, out_k, in_k = _classes(g, f, x)
    return BlockingSets(K, K & out_k, K & in_k)


RoundHook = Callable[[int, BlockingSets, tuple[int, ...], tuple[int, ...]], None]


def token_ordering(
    g: SpiderGraph,
    f: TargetAssignment,
    strict: bool | None = None,
    on_round: RoundHook | None = None,
) -> tuple[int, ...]:
    """Obstacle-free move order built from the assignment order of ``f``.

    Each round takes the earliest w with a non-empty K and lifts out the
    group K ∪ {w} (plus the rest of w's outward class when K¹ is non-empty
    and does not exhaust it).  The group is put back as one block where
    its last member stood: blockers from other legs first, then outward
    tokens outside K, then K¹ in order, then K² reversed, then w.  Tokens
    outside the group keep their relative order.

    With ``strict`` every chosen w is checked to satisfy K ⊆ I_L and
    f(w) ∈ J_L.  ``None`` turns the check on exactly when no token of
    either set is adjacent to the body.  ``on_round(w, sets, before,
    after)`` is called after every round.
    """
    seq = list(f.order)
    if strict is None:
        body_nbrs = set(g.adj[g.body])
        strict = not (body_nbrs & set(f.mapping)) and not (body_nbrs & set(f.mapping.values()))
    pos = {u: p for p, u in enumerate(seq)}
    index = _TokenIndex(g, f.mapping)
    mapping = f.mapping
    rounds = 0
    start = 0
    while True:
        chosen = -1
        for p in range(start, len(seq)):
            x = seq[p]
            if any(pos[y] > p for y in index.near_path(x, mapping[x])):
                chosen = p
                break
        if chosen < 0:
            break
        rounds += 1
        if rounds > len(seq):
            raise NonTermination(f"more than {len(seq)} reordering rounds")
        w = seq[chosen]
        K = sorted((y for y in index.near_path(w, mapping[w]) if pos[y] > chosen), key=pos.__getitem__)
        leg, out_k, in_k = _classes(g, f, w)
        if strict:
            part = f.partition
            if not set(K) <= part.i_sets[leg] or w not in in_k:
                raise PreconditionViolated(
                    f"token {w}: blockers {K} leave its leg or its target is outside it"
                )
        K1 = [y for y in K if y in out_k]
        K2 = [y for y in K if y in in_k]
        # only possible without the strict hypothesis: blockers from other legs
        foreign = [y for y in K if y not in out_k and y not in in_k]
        rest = []
        if K1:
            kset = set(K1)
            rest = sorted((y for y in out_k if y not in kset and y != w), key=pos.__getitem__)
        arrangement = foreign + rest + K1 + K2[::-1] + [w]
        before = tuple(seq) if on_round else ()
        group = set(arrangement)
        first = min(pos[u] for u in arrangement)
        last = max(pos[u] for u in arrangement)
        # the group becomes one block where its last member stood
        tail = [u for u in seq[first:last + 1] if u not in group]
        seq[first:last + 1] = tail + arrangement
        for p in range(first, last + 1):
            pos[seq[p]] = p
        start = first
        if on_round:
            sets = BlockingSets(frozenset(K), frozenset(K1), frozenset(K2))
            on_round(w, sets, before, tuple(seq))
    return tuple(seq)


def check_order(g: SpiderGraph, f: TargetAssignment, order: Sequence[int]) -> list[int]:
    """Tokens whose blocking set under ``order`` is non-empty."""
    pos = {u: p for p, u in enumerate(order)}
    index = _TokenIndex(g, f.mapping)
    return [
        x for x in order if any(pos[y] > pos[x] for y in index.near_path(x, f(x)))
    ]
