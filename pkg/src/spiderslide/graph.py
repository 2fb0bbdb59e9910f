"""Trees, spiders, token sets and slide sequences.

Vertices are dense integers ``0..n-1``.  A token set is a plain ``frozenset``
of vertex ids; :func:`token_set` validates one against a host graph.  Slide
sequences are stored as an ``(m, 2)`` integer array so that the quadratic
sequences produced on long legs stay compact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    InvalidSequence,
    InvalidTokenSet,
    NotAnEdge,
    NotASpider,
    NotATree,
    NotIndependent,
    SizeMismatch,
)

TokenSet = frozenset  # frozenset[int]; kept as an alias for signatures


class Tree:
    """An immutable tree on vertices ``0..vertex_count-1``."""

    def __init__(self, vertex_count: int, edge_list: Iterable[tuple[int, int]]):
        n = int(vertex_count)
        if n < 1:
            raise NotATree("a tree needs at least one vertex")
        edges = []
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for raw in edge_list:
            u, w = (int(raw[0]), int(raw[1]))
            if not (0 <= u < n and 0 <= w < n):
                raise NotATree(f"edge {u}-{w} has an endpoint outside 0..{n - 1}")
            if u == w:
                raise NotATree(f"self-loop at {u}")
            key = (min(u, w), max(u, w))
            if key in seen:
                raise NotATree(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            edges.append(key)
            adj[u].append(w)
            adj[w].append(u)
        if len(edges) != n - 1:
            raise NotATree(f"{n} vertices need {n - 1} edges, got {len(edges)}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edges))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._nbrs = tuple(frozenset(a) for a in adj)
        if len(self.bfs_order(0)[0]) != n:
            raise NotATree("graph is disconnected")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self.adj[x]

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def has_edge(self, x: int, y: int) -> bool:
        return 0 <= x < self.n and y in self._nbrs[x]

    def bfs_order(self, root: int, blocked: int | None = None) -> tuple[list[int], list[int]]:
        """BFS from ``root``; returns (order, parent) with parent[root] = -1.

        ``blocked`` is a vertex the search never enters, which turns the
        search into an enumeration of one side of an edge.
        """
        parent = [-2] * self.n
        parent[root] = -1
        if blocked is not None:
            parent[blocked] = -3
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        if blocked is not None:
            parent[blocked] = -2
        return order, parent

    def dist(self, x: int, y: int) -> int:
        return len(self.path(x, y)) - 1

    def path(self, x: int, y: int) -> list[int]:
        if x == y:
            return [x]
        _, parent = self.bfs_order(y)
        out = [x]
        while out[-1] != y:
            out.append(parent[out[-1]])
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        s = set(vertices)
        return all(not (self._nbrs[u] & s) for u in s)

    def closed_neighborhood(self, vertices: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for u in vertices:
            out.add(u)
            out.update(self.adj[u])
        return out


class SpiderGraph(Tree):
    """A tree with exactly one vertex of degree at least three.

    ``legs[k]`` lists the vertices of the k-th leg from the body neighbour
    outwards; legs are discovered from the body's neighbours in ascending id
    order.  ``leg_of[u]`` is -1 for the body and ``depth[u]`` is the distance
    to the body.
    """

    def __init__(self, vertex_count: int, edge_list: Iterable[tuple[int, int]]):
        super().__init__(vertex_count, edge_list)
        big = [u for u in range(self.n) if len(self.adj[u]) >= 3]
        if len(big) != 1:
            raise NotASpider(
                f"expected exactly one vertex of degree >= 3, found {len(big)}"
            )
        body = big[0]
        self.body = body
        leg_of = [-1] * self.n
        depth = [0] * self.n
        legs = []
        for k, first in enumerate(self.adj[body]):
            leg = [first]
            prev, cur = body, first
            while True:
                leg_of[cur] = k
                depth[cur] = len(leg)
                nxt = [w for w in self.adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                leg.append(cur)
            legs.append(tuple(leg))
        self.legs: tuple[tuple[int, ...], ...] = tuple(legs)
        self.leg_of: tuple[int, ...] = tuple(leg_of)
        self.depth: tuple[int, ...] = tuple(depth)
        self._leg_arrays = tuple(np.asarray(leg, dtype=np.int64) for leg in legs)

    @property
    def leg_count(self) -> int:
        return len(self.legs)

    def dist(self, x: int, y: int) -> int:
        if x == y:
            return 0
        lx, ly = self.leg_of[x], self.leg_of[y]
        if lx == ly and lx >= 0:
            return abs(self.depth[x] - self.depth[y])
        return self.depth[x] + self.depth[y]

    def path_array(self, x: int, y: int) -> np.ndarray:
        """Vertices of the x-y path as an int array, endpoints included."""
        if x == y:
            return np.array([x], dtype=np.int64)
        lx, ly = self.leg_of[x], self.leg_of[y]
        dx, dy = self.depth[x], self.depth[y]
        if lx == ly and lx >= 0:
            leg = self._leg_arrays[lx]
            if dx < dy:
                return leg[dx - 1:dy]
            return leg[dy - 1:dx][::-1]
        parts = []
        if lx >= 0:
            parts.append(self._leg_arrays[lx][:dx][::-1])
        parts.append(np.array([self.body], dtype=np.int64))
        if ly >= 0:
            parts.append(self._leg_arrays[ly][:dy])
        return np.concatenate(parts)

    def path(self, x: int, y: int) -> list[int]:
        return self.path_array(x, y).tolist()


def build_tree(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Tree:
    return Tree(vertex_count, edge_list)


def build_spider(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> SpiderGraph:
    """Validate ``edge_list`` as a spider and enumerate its legs.

    Raises NotATree for cycles or disconnected input, and NotASpider when the
    number of vertices with degree >= 3 is not exactly one (so paths are
    rejected).
    """
    return SpiderGraph(vertex_count, edge_list)


def spider_from_legs(leg_lengths: Sequence[int]) -> SpiderGraph:
    """Spider with body 0 and legs numbered consecutively outwards."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return SpiderGraph(nxt, edges)


def dist(g: Tree, x: int, y: int) -> int:
    return g.dist(x, y)


def path(g: Tree, x: int, y: int) -> list[int]:
    return g.path(x, y)


def is_independent(g: Tree, vertices: Iterable[int]) -> bool:
    return g.is_independent(vertices)


def token_set(g: Tree, vertices: Iterable[int]) -> frozenset[int]:
    """Validate and freeze a token set."""
    s = frozenset(int(u) for u in vertices)
    bad = [u for u in s if not 0 <= u < g.n]
    if bad:
        raise InvalidTokenSet(f"vertices {sorted(bad)} are not in the graph")
    for u in s:
        clash = g._nbrs[u] & s
        if clash:
            raise NotIndependent(f"tokens {u} and {min(clash)} are adjacent")
    return s


def subtree_token_count(g: Tree, x: int, y: int, s: Iterable[int]) -> int:
    """Number of tokens of ``s`` on the y side of the edge xy."""
    if not g.has_edge(x, y):
        raise NotAnEdge(f"{x}-{y} is not an edge")
    side, _ = g.bfs_order(y, blocked=x)
    s = set(s)
    return sum(1 for u in side if u in s)


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Directed graph with arc (x, y) iff the y side of xy holds no more
    tokens of the initial set than of the target set."""

    arcs: frozenset[tuple[int, int]]

    def __contains__(self, arc: object) -> bool:
        return arc in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)


def side_counts(g: Tree, s: Iterable[int], root: int = 0) -> tuple[list[int], list[int]]:
    """(parent, below) where below[u] counts tokens in the subtree of u."""
    order, parent = g.bfs_order(root)
    s = set(s)
    below = [0] * g.n
    for u in reversed(order):
        if u in s:
            below[u] += 1
        p = parent[u]
        if p >= 0:
            below[p] += below[u]
    return parent, below


def auxiliary_graph(g: Tree, i: Iterable[int], j: Iterable[int]) -> AuxiliaryGraph:
    i, j = frozenset(i), frozenset(j)
    if len(i) != len(j):
        raise SizeMismatch(f"|I| = {len(i)} but |J| = {len(j)}")
    parent, below_i = side_counts(g, i)
    _, below_j = side_counts(g, j)
    arcs = set()
    for c in range(g.n):
        p = parent[c]
        if p < 0:
            continue
        if below_i[c] <= below_j[c]:
            arcs.add((p, c))
        if len(i) - below_i[c] <= len(j) - below_j[c]:
            arcs.add((c, p))
    return AuxiliaryGraph(frozenset(arcs))


class Move(NamedTuple):
    src: int
    dst: int

    def __repr__(self) -> str:
        return f"{self.src}->{self.dst}"


def _as_move_array(moves) -> np.ndarray:
    if isinstance(moves, SlideSequence):
        return moves.moves
    if isinstance(moves, np.ndarray):
        arr = moves.astype(np.int64, copy=True)
    else:
        arr = np.array(list(moves), dtype=np.int64)
    return arr.reshape(-1, 2)


class SlideSequence:
    """An ordered list of token slides ``src -> dst``."""

    __slots__ = ("_moves",)

    def __init__(self, moves=()):
        arr = _as_move_array(moves)
        arr.setflags(write=False)
        self._moves = arr

    @classmethod
    def along(cls, vertices: np.ndarray | Sequence[int]) -> "SlideSequence":
        """Walk one token along consecutive vertices of a path."""
        v = np.asarray(vertices, dtype=np.int64)
        return cls(np.stack([v[:-1], v[1:]], axis=1))

    @property
    def moves(self) -> np.ndarray:
        return self._moves

    def __len__(self) -> int:
        return self._moves.shape[0]

    def __iter__(self) -> Iterator[Move]:
        for a, b in self._moves.tolist():
            yield Move(a, b)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return SlideSequence(self._moves[k])
        a, b = self._moves[k].tolist()
        return Move(a, b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SlideSequence):
            return NotImplemented
        return np.array_equal(self._moves, other._moves)

    def __hash__(self) -> int:
        return hash(self._moves.tobytes())

    def __add__(self, other: "SlideSequence") -> "SlideSequence":
        return concat(self, other)

    def __repr__(self) -> str:
        if len(self) > 12:
            head = ", ".join(repr(m) for m in self[:6])
            return f"SlideSequence(<{head}, ... {len(self)} moves>)"
        return "SlideSequence<" + ", ".join(repr(m) for m in self) + ">"

    def to_list(self) -> list[tuple[int, int]]:
        return [tuple(m) for m in self._moves.tolist()]


EMPTY = SlideSequence()


def reverse(s: SlideSequence) -> SlideSequence:
    """The sequence that undoes ``s``: order reversed, each slide flipped."""
    return SlideSequence(s.moves[::-1, ::-1])


def concat(*seqs: SlideSequence) -> SlideSequence:
    parts = [q.moves for q in seqs if len(q)]
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return SlideSequence(parts[0])
    return SlideSequence(np.concatenate(parts))


class SequenceCheck(NamedTuple):
    valid: bool
    failed_at: int | None
    reason: str
    final: frozenset[int]


def is_valid_sequence(g: Tree, start: Iterable[int], s: SlideSequence) -> SequenceCheck:
    """Replay ``s`` from ``start`` and report the first illegal slide.

    A slide is legal when its source holds a token, the two vertices are
    adjacent, and no other token is on or next to the destination.
    """
    current = set(start)
    occ = bytearray(g.n)
    for u in current:
        if not 0 <= u < g.n:
            return SequenceCheck(False, None, f"start vertex {u} is not in the graph", frozenset(current))
        occ[u] = 1
    if not g.is_independent(current):
        return SequenceCheck(False, None, "start set is not independent", frozenset(current))
    adj = g.adj
    for k, (a, b) in enumerate(s.moves.tolist()):
        if not (0 <= a < g.n and 0 <= b < g.n) or b not in g._nbrs[a]:
            return SequenceCheck(False, k, f"{a}->{b} is not an edge", _occupied(occ))
        if not occ[a]:
            return SequenceCheck(False, k, f"no token on {a}", _occupied(occ))
        if occ[b]:
            return SequenceCheck(False, k, f"{b} is already occupied", _occupied(occ))
        for w in adj[b]:
            if w != a and occ[w]:
                return SequenceCheck(False, k, f"{b} is adjacent to the token on {w}", _occupied(occ))
        occ[a] = 0
        occ[b] = 1
    return SequenceCheck(True, None, "", _occupied(occ))


def _occupied(occ: bytearray) -> frozenset[int]:
    return frozenset(k for k, flag in enumerate(occ) if flag)


def replay(g: Tree, start: Iterable[int], s: SlideSequence) -> frozenset[int]:
    """Apply ``s`` to ``start``; raises InvalidSequence on the first bad slide."""
    check = is_valid_sequence(g, start, s)
    if not check.valid:
        raise InvalidSequence(check.reason, check.failed_at)
    return check.final


class DetourCount(NamedTuple):
    per_edge: dict[tuple[int, int], int]
    total: int


def detour_count(g: Tree, s: SlideSequence) -> DetourCount:
    """Twice min(#x->y, #y->x) per edge, and the sum over edges."""
    if len(s) == 0:
        return DetourCount({}, 0)
    m = s.moves
    n = g.n
    codes, counts = np.unique(m[:, 0] * n + m[:, 1], return_counts=True)
    table = dict(zip(codes.tolist(), counts.tolist()))
    per_edge = {}
    for code, c in table.items():
        a, b = divmod(code, n)
        if a < b:
            back = table.get(b * n + a, 0)
            if back:
                per_edge[(a, b)] = 2 * min(c, back)
    return DetourCount(per_edge, sum(per_edge.values()))
