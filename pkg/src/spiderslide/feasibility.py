"""Reconfigurability on trees and the cost of pushing one token onto a neighbour.

``cost(g, I, x, y)`` is the least number of slides needed to bring the token
on ``x`` onto its neighbour ``y`` when only tokens beyond ``y`` (seen from
``x``) are allowed to make room, each of them retreating away from ``x``.
It is computed bottom-up over the subtree hanging below ``y``:

* a leaf scores INFINITY if it holds a token and 1 otherwise;
* a free vertex scores 1 plus the scores of its token children;
* a token vertex scores the minimum over its children (the cheapest
  child it can retreat into).

A token is rigid exactly when every neighbour costs INFINITY.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InfiniteCost, NotANeighbor, SizeMismatch, TokenMissing
from .graph import SlideSequence, Tree


@functools.total_ordering
class _Infinity:
    """Absorbing sentinel for unreachable costs; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __add__(self, other):
        if isinstance(other, (int, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, _Infinity)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("INFINITY")

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_finite(value) -> bool:
    return value is not INFINITY


@dataclass(frozen=True)
class CostTable:
    root: int
    target: int
    phi: dict[int, object]
    chosen_child: dict[int, int]
    parent: dict[int, int] = field(repr=False)

    @property
    def cost(self):
        return self.phi[self.target]

    def children(self, g: Tree, u: int) -> list[int]:
        p = self.parent[u]
        return [w for w in g.adj[u] if w != p]


def _phi_of(u: int, kids: list[int], tokens, phi: dict):
    if u in tokens:
        best = INFINITY
        for w in kids:
            if phi[w] < best:
                best = phi[w]
        return best
    total = 1
    for w in kids:
        if w in tokens:
            total = total + phi[w]
    return total


def cost_table(g: Tree, tokens: Iterable[int], x: int, y: int) -> CostTable:
    tokens = frozenset(tokens)
    if x not in tokens:
        raise TokenMissing(f"no token on {x}")
    if not g.has_edge(x, y):
        raise NotANeighbor(f"{y} is not adjacent to {x}")
    order, parent_list = g.bfs_order(y, blocked=x)
    parent = {u: parent_list[u] for u in order}
    parent[y] = x
    phi: dict[int, object] = {}
    chosen: dict[int, int] = {}
    for u in reversed(order):
        kids = [w for w in g.adj[u] if w != parent[u]]
        phi[u] = _phi_of(u, kids, tokens, phi)
        if u in tokens and is_finite(phi[u]):
            chosen[u] = min(kids, key=lambda w: (phi[w], w))
    return CostTable(x, y, phi, chosen, parent)


def cost(g: Tree, tokens: Iterable[int], x: int, y: int):
    """Slides needed to move the token on x onto its neighbour y, or INFINITY."""
    return cost_table(g, tokens, x, y).cost


def extract_move_sequence(g: Tree, tokens: Iterable[int], x: int, y: int) -> SlideSequence:
    """A cheapest slide sequence whose last slide is ``x -> y``.

    Every token child of a vertex about to be entered first retreats into its
    cheapest child, recursively; the slides of a retreat come right before
    the slide they make room for.
    """
    tokens = frozenset(tokens)
    table = cost_table(g, tokens, x, y)
    if not is_finite(table.cost):
        raise InfiniteCost(f"the token on {x} can never reach {y}")
    out: list[tuple[int, int]] = []
    stack = [(x, y, False)]
    while stack:
        z, c, ready = stack.pop()
        if ready:
            out.append((z, c))
            continue
        stack.append((z, c, True))
        blockers = [w for w in table.children(g, c) if w in tokens]
        for w in reversed(blockers):
            stack.append((w, table.chosen_child[w], False))
    return SlideSequence(out)


def directed_phi(g: Tree, tokens: Iterable[int]) -> dict[tuple[int, int], object]:
    """phi of every vertex c under every orientation (p, c) of an edge.

    Equivalent to running :func:`cost_table` from every edge, but done in one
    pass by rerooting.
    """
    tokens = frozenset(tokens)
    order, parent = g.bfs_order(0)
    down: dict[int, object] = {}
    for c in reversed(order):
        kids = [w for w in g.adj[c] if w != parent[c]]
        down[c] = _phi_of(c, kids, tokens, down)
    table: dict[tuple[int, int], object] = {}
    for c in order:
        if parent[c] >= 0:
            table[(parent[c], c)] = down[c]
    # value of p seen from each child c, i.e. with c as p's parent
    for p in order:
        nbrs = g.adj[p]
        vals = {w: table[(p, w)] for w in nbrs}
        for c in nbrs:
            if c == parent[p]:
                continue
            others = [w for w in nbrs if w != c]
            table[(c, p)] = _phi_of(p, others, tokens, vals)
    return table


def rigid_tokens(g: Tree, tokens: Iterable[int]) -> frozenset[int]:
    """Tokens that no slide sequence can ever move."""
    tokens = frozenset(tokens)
    if not tokens:
        return frozenset()
    table = directed_phi(g, tokens)
    return frozenset(
        u for u in tokens if all(not is_finite(table[(u, y)]) for y in g.adj[u])
    )


def free_components(g: Tree, rigid: Iterable[int]) -> list[list[int]]:
    """Components left after deleting rigid tokens and their neighbours."""
    removed = g.closed_neighborhood(rigid)
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        k = 0
        while k < len(comp):
            for w in g.adj[comp[k]]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            k += 1
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class Reconfigurability:
    feasible: bool
    reason: str
    rigid: frozenset[int]
    components: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return self.feasible


def is_reconfigurable(g: Tree, i: Iterable[int], j: Iterable[int]) -> Reconfigurability:
    """Decide whether ``i`` can be slid into ``j``.

    Both sets must have the same rigid tokens, and every component of the
    forest left after removing those tokens with their neighbours must hold
    equally many tokens of each set.
    """
    i, j = frozenset(i), frozenset(j)
    if len(i) != len(j):
        raise SizeMismatch(f"|I| = {len(i)} but |J| = {len(j)}")
    ri, rj = rigid_tokens(g, i), rigid_tokens(g, j)
    if ri != rj:
        return Reconfigurability(
            False,
            f"rigid tokens differ: I has {sorted(ri)}, J has {sorted(rj)}",
            ri,
            (),
        )
    comps = tuple(tuple(c) for c in free_components(g, ri))
    for comp in comps:
        members = set(comp)
        ci, cj = len(i & members), len(j & members)
        if ci != cj:
            return Reconfigurability(
                False,
                f"component containing {comp[0]} holds {ci} tokens of I but {cj} of J",
                ri,
                comps,
            )
    return Reconfigurability(True, "", ri, comps)
