"""Leg relabelling and the greedy minimum-distance target assignment.

Legs are sorted by their surplus ``|I ∩ L| - |J ∩ L|`` (ascending, stable
on discovery order).  A token on the body is filed under the first leg of
that order, so every vertex of I and J belongs to exactly one leg set.

The assignment is built in two phases.  First, inside each leg, the
farthest unassigned I-vertex is paired with the farthest unassigned
J-vertex until one side of the leg runs out.  Afterwards every leg has
leftovers on at most one side, and the closest remaining I-vertex overall
is repeatedly paired with the farthest remaining J-vertex.  The resulting
total distance is the minimum over all bijections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SizeMismatch
from .graph import SpiderGraph


def leg_surplus(g: SpiderGraph, i: Iterable[int], j: Iterable[int]) -> list[int]:
    surplus = [0] * g.leg_count
    for u in i:
        if u != g.body:
            surplus[g.leg_of[u]] += 1
    for u in j:
        if u != g.body:
            surplus[g.leg_of[u]] -= 1
    return surplus


def relabel_legs(g: SpiderGraph, i: Iterable[int], j: Iterable[int]) -> tuple[int, ...]:
    """Discovery indices of the legs, sorted by ascending surplus."""
    surplus = leg_surplus(g, i, j)
    return tuple(sorted(range(g.leg_count), key=lambda k: (surplus[k], k)))


@dataclass(frozen=True)
class LegPartition:
    """Per-leg token sets after relabelling; index 0 is the first leg."""

    order: tuple[int, ...]
    rank: tuple[int, ...]
    i_sets: tuple[frozenset[int], ...]
    j_sets: tuple[frozenset[int], ...]
    body: int

    def leg(self, g: SpiderGraph, u: int) -> int:
        """Relabelled index of the leg that u belongs to (body -> 0)."""
        if u == self.body:
            return 0
        return self.rank[g.leg_of[u]]

    @property
    def balanced(self) -> bool:
        return all(len(a) == len(b) for a, b in zip(self.i_sets, self.j_sets))

    def unbalanced_legs(self) -> list[int]:
        return [k for k, (a, b) in enumerate(zip(self.i_sets, self.j_sets)) if len(a) != len(b)]


def leg_partition(g: SpiderGraph, i: Iterable[int], j: Iterable[int]) -> LegPartition:
    i, j = frozenset(i), frozenset(j)
    order = relabel_legs(g, i, j)
    rank = [0] * len(order)
    for pos, k in enumerate(order):
        rank[k] = pos
    i_sets: list[set[int]] = [set() for _ in order]
    j_sets: list[set[int]] = [set() for _ in order]
    for src, dst in ((i, i_sets), (j, j_sets)):
        for u in src:
            dst[0 if u == g.body else rank[g.leg_of[u]]].add(u)
    return LegPartition(
        order,
        tuple(rank),
        tuple(frozenset(s) for s in i_sets),
        tuple(frozenset(s) for s in j_sets),
        g.body,
    )


@dataclass(frozen=True)
class TargetAssignment:
    """A bijection I -> J together with the order pairs were made in."""

    mapping: dict[int, int]
    order: tuple[int, ...]
    partition: LegPartition

    def __call__(self, w: int) -> int:
        return self.mapping[w]

    def __len__(self) -> int:
        return len(self.mapping)

    @property
    def inverse(self) -> dict[int, int]:
        return {t: w for w, t in self.mapping.items()}

    def total_distance(self, g: SpiderGraph) -> int:
        return sum(g.dist(w, t) for w, t in self.mapping.items())

    def outward(self, g: SpiderGraph, k: int) -> frozenset[int]:
        """Tokens of leg k whose target lies outside leg k."""
        part = self.partition
        return frozenset(w for w in part.i_sets[k] if self.mapping[w] not in part.j_sets[k])

    def inward(self, g: SpiderGraph, k: int) -> frozenset[int]:
        """Tokens of leg k whose target lies inside leg k."""
        part = self.partition
        return frozenset(w for w in part.i_sets[k] if self.mapping[w] in part.j_sets[k])


def target_assignment(g: SpiderGraph, i: Iterable[int], j: Iterable[int]) -> TargetAssignment:
    """Greedy two-phase assignment; ties across legs go to the lower
    relabelled leg, then the lower vertex id."""
    i, j = frozenset(i), frozenset(j)
    if len(i) != len(j):
        raise SizeMismatch(f"|I| = {len(i)} but |J| = {len(j)}")
    part = leg_partition(g, i, j)
    depth = g.depth
    mapping: dict[int, int] = {}
    order: list[int] = []
    rest_i: list[tuple[int, int, int]] = []
    rest_j: list[tuple[int, int, int]] = []
    for k, (ik, jk) in enumerate(zip(part.i_sets, part.j_sets)):
        xs = sorted(ik, key=lambda u: -depth[u])
        ys = sorted(jk, key=lambda u: -depth[u])
        m = min(len(xs), len(ys))
        for x, y in zip(xs[:m], ys[:m]):
            mapping[x] = y
            order.append(x)
        rest_i.extend((depth[x], k, x) for x in xs[m:])
        rest_j.extend((-depth[y], k, y) for y in ys[m:])
    rest_i.sort()
    rest_j.sort()
    for (_, _, x), (_, _, y) in zip(rest_i, rest_j):
        mapping[x] = y
        order.append(x)
    return TargetAssignment(mapping, tuple(order), part)


def mstar(g: SpiderGraph, i: Iterable[int], j: Iterable[int]) -> int:
    """Minimum over bijections I -> J of the summed path lengths."""
    return target_assignment(g, i, j).total_distance(g)
