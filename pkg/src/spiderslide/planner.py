"""Shortest slide sequences on spiders.

``solve`` checks reconfigurability, splits the instance along rigid tokens
when there are any, and otherwise dispatches on the leg balance and on how
many tokens of each set sit next to the body:

* every leg holds as many I- as J-tokens: walk tokens leg by leg;
* no token next to the body: walk every token to its target in the
  obstacle-free order (``case1``);
* at most one on each side: clear the body neighbour first, possibly via a
  forced two-slide detour over the body (``case2_*``);
* two or more on a side: park all but one of them deeper in their legs,
  trying every choice of the one that stays, and recurse (``case3``).

Every branch returns the sequence together with the number of detour
slides it predicts, so the prediction can be checked against the count
measured on the emitted sequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .assignment import TargetAssignment, mstar, target_assignment
from .errors import NotASpider, PreconditionViolated
from .feasibility import directed_phi, extract_move_sequence, is_finite, is_reconfigurable
from .graph import (
    EMPTY,
    SlideSequence,
    SpiderGraph,
    Tree,
    auxiliary_graph,
    concat,
    detour_count,
    replay,
    reverse,
    token_set,
)
from .ordering import token_ordering

CASE_TAGS = ("balanced", "case1", "case2_plain", "case2_forced_detour", "case3")


@dataclass(frozen=True)
class SolveReport:
    sequence: SlideSequence
    length: int | None
    mstar: int | None
    detours: int | None
    case_tag: str | None
    feasible: bool
    predicted_detours: int | None = None
    explanation: str = field(default="", compare=False)

    def summary(self) -> str:
        def show(value) -> str:
            return "none" if value is None else str(value)

        return (
            f"len={show(self.length)} mstar={show(self.mstar)} detours={show(self.detours)} "
            f"case={show(self.case_tag)} feasible={'true' if self.feasible else 'false'}"
        )


@dataclass(frozen=True)
class Plan:
    sequence: SlideSequence
    tag: str
    predicted_detours: int


def _walk(g: SpiderGraph, f: TargetAssignment, tokens: Iterable[int]) -> SlideSequence:
    parts = [g.path_array(w, f(w)) for w in tokens]
    moves = [np.stack([p[:-1], p[1:]], axis=1) for p in parts if len(p) > 1]
    if not moves:
        return EMPTY
    return SlideSequence(np.concatenate(moves))


def _body_neighbors(g: SpiderGraph, s: frozenset[int]) -> list[int]:
    return sorted(u for u in g.adj[g.body] if u in s)


def _after(i: frozenset[int], moved: Iterable[int], f: TargetAssignment) -> frozenset[int]:
    moved = list(moved)
    return (i - set(moved)) | {f(w) for w in moved}


def construct_balanced(
    g: SpiderGraph,
    i: frozenset[int],
    j: frozenset[int],
    f: TargetAssignment | None = None,
    order: tuple[int, ...] | None = None,
) -> SlideSequence:
    """Leg-by-leg walks when every leg already holds its final token count."""
    f = f or target_assignment(g, i, j)
    part = f.partition
    if not part.balanced:
        raise PreconditionViolated("some leg holds different numbers of I- and J-tokens")
    order = order or token_ordering(g, f, strict=False)
    legs = list(range(len(part.i_sets)))
    # the first leg owns the body: it must be vacated before any other leg
    # fills its body neighbour, and entered only after the others emptied theirs
    if g.body in j and g.body not in i:
        legs = legs[1:] + legs[:1]
    rank = {w: p for p, w in enumerate(order)}
    parts = []
    for k in legs:
        parts.append(_walk(g, f, sorted(part.i_sets[k], key=rank.__getitem__)))
    return concat(*parts)


def construct_case1(
    g: SpiderGraph,
    i: frozenset[int],
    j: frozenset[int],
    f: TargetAssignment | None = None,
    order: tuple[int, ...] | None = None,
) -> SlideSequence:
    """Walk every token to its target in the obstacle-free order."""
    if _body_neighbors(g, i) or _body_neighbors(g, j):
        raise PreconditionViolated("a token sits next to the body")
    f = f or target_assignment(g, i, j)
    if f.partition.balanced:
        raise PreconditionViolated("every leg is balanced")
    order = order or token_ordering(g, f, strict=True)
    return _walk(g, f, order)


def _clear_x(
    g: SpiderGraph, i: frozenset[int], j: frozenset[int], f: TargetAssignment, x: int
) -> tuple[SlideSequence, frozenset[int]]:
    """Move the body neighbour x to its target, clearing its way first."""
    v = g.body
    if v in j and f(x) == v:
        return SlideSequence([(x, v)]), (i - {x}) | {v}
    order = token_ordering(g, f, strict=False)
    rank = {w: p for p, w in enumerate(order)}
    part = f.partition
    leg = part.leg(g, x)
    target = f(x)
    if target in part.j_sets[leg]:
        group = {w for w in part.i_sets[leg] if rank[w] < rank[x]}
    else:
        group = set(part.i_sets[part.leg(g, target)])
    group.add(x)
    moved = sorted(group, key=rank.__getitem__)
    return _walk(g, f, moved), _after(i, moved, f)


def _only_x(g: SpiderGraph, i: frozenset[int], j: frozenset[int], x: int) -> SlideSequence:
    f = target_assignment(g, i, j)
    first, rest = _clear_x(g, i, j, f, x)
    return first + _construct(g, rest, j).sequence


def construct_case2(g: SpiderGraph, i: frozenset[int], j: frozenset[int]) -> tuple[SlideSequence, bool]:
    """At most one token of each set next to the body.

    Returns the sequence and whether it carries the forced detour over the
    edge between the shared body neighbour and the body.
    """
    v = g.body
    ni, nj = _body_neighbors(g, i), _body_neighbors(g, j)
    if max(len(ni), len(nj)) != 1:
        raise PreconditionViolated("expected exactly one token next to the body on some side")
    f = target_assignment(g, i, j)
    part = f.partition
    if part.balanced:
        raise PreconditionViolated("every leg is balanced")
    x = ni[0] if ni else None
    y = nj[0] if nj else None
    if x is not None and y is not None:
        leg = part.leg(g, x)
        if x == y and len(part.i_sets[leg]) == len(part.j_sets[leg]):
            inner = _construct(g, (i - {x}) | {v}, (j - {y}) | {v}).sequence
            return SlideSequence([(x, v)]) + inner + SlideSequence([(v, y)]), True
        # with f(x) = y the tokens of y's leg are cleared first as well,
        # since one of them may sit right behind y
        first, rest = _clear_x(g, i, j, f, x)
        return first + _construct(g, rest, j).sequence, False
    if x is not None:
        return _only_x(g, i, j, x), False
    return reverse(_only_x(g, j, i, y)), False


def _keep_candidates(g: SpiderGraph, tokens: frozenset[int]) -> list[int | None]:
    """Body neighbours that may stay while all the others retreat."""
    nbrs = _body_neighbors(g, tokens)
    if len(nbrs) <= 1:
        return [None]
    phi = directed_phi(g, tokens)
    movable = {}
    for w in nbrs:
        deeper = [z for z in g.adj[w] if z != g.body]
        movable[w] = bool(deeper) and is_finite(phi[(w, deeper[0])])
    out = []
    for keep in nbrs:
        if all(movable[w] for w in nbrs if w != keep):
            out.append(keep)
    return out


def _retreat(g: SpiderGraph, tokens: frozenset[int], keep: int | None) -> SlideSequence:
    if keep is None:
        return EMPTY
    parts = []
    for w in _body_neighbors(g, tokens):
        if w != keep:
            deeper = next(z for z in g.adj[w] if z != g.body)
            parts.append(extract_move_sequence(g, tokens, w, deeper))
    return concat(*parts)


def construct_case3(g: SpiderGraph, i: frozenset[int], j: frozenset[int]) -> tuple[SlideSequence, int]:
    """Two or more tokens of one set next to the body.

    For every choice of the neighbour that stays (per side), the others
    retreat one step deeper at minimum cost; the J-side retreat is run
    backwards at the end.  The shortest combination wins, ties going to the
    smallest kept vertices.  Returns the sequence and its predicted detours:
    twice the number of edges that a retreat crosses against the surplus
    direction, plus whatever the middle part predicts.
    """
    if max(len(_body_neighbors(g, i)), len(_body_neighbors(g, j))) < 2:
        raise PreconditionViolated("fewer than two tokens next to the body on both sides")
    if target_assignment(g, i, j).partition.balanced:
        raise PreconditionViolated("every leg is balanced")
    keeps_i = _keep_candidates(g, i)
    keeps_j = _keep_candidates(g, j)
    if not keeps_i or not keeps_j:
        raise PreconditionViolated("no body neighbour can stay while the others retreat")
    forward = auxiliary_graph(g, i, j)
    backward = auxiliary_graph(g, j, i)
    best: tuple[int, SlideSequence, int] | None = None
    for ki, kj in itertools.product(keeps_i, keeps_j):
        s1 = _retreat(g, i, ki)
        t1 = _retreat(g, j, kj)
        mid = _construct(g, replay(g, i, s1), replay(g, j, t1))
        seq = s1 + mid.sequence + reverse(t1)
        if best is not None and len(seq) >= best[0]:
            continue
        against = {(min(a, b), max(a, b)) for a, b in s1 if (b, a) in forward}
        against |= {(min(a, b), max(a, b)) for a, b in t1 if (b, a) in backward}
        best = (len(seq), seq, 2 * len(against) + mid.predicted_detours)
    return best[1], best[2]


def _construct(g: SpiderGraph, i: frozenset[int], j: frozenset[int]) -> Plan:
    """Dispatch on a rigid-free spider instance."""
    if i == j:
        return Plan(EMPTY, "balanced", 0)
    f = target_assignment(g, i, j)
    if f.partition.balanced:
        return Plan(construct_balanced(g, i, j, f), "balanced", 0)
    m = max(len(_body_neighbors(g, i)), len(_body_neighbors(g, j)))
    if m == 0:
        return Plan(construct_case1(g, i, j, f), "case1", 0)
    if m == 1:
        seq, forced = construct_case2(g, i, j)
        if forced:
            return Plan(seq, "case2_forced_detour", 2)
        return Plan(seq, "case2_plain", 0)
    seq, predicted = construct_case3(g, i, j)
    return Plan(seq, "case3", predicted)


def _path_sequence(line: list[int], i: frozenset[int], j: frozenset[int]) -> SlideSequence:
    """Order-preserving solution on a path given as its vertex sequence."""
    where = {u: p for p, u in enumerate(line)}
    src = sorted(where[u] for u in i)
    dst = sorted(where[u] for u in j)
    arr = np.asarray(line, dtype=np.int64)
    parts = []
    right = [k for k in range(len(src)) if dst[k] > src[k]]
    left = [k for k in range(len(src)) if dst[k] < src[k]]
    for k in reversed(right):
        seg = arr[src[k]:dst[k] + 1]
        parts.append(np.stack([seg[:-1], seg[1:]], axis=1))
    for k in left:
        seg = arr[dst[k]:src[k] + 1][::-1]
        parts.append(np.stack([seg[:-1], seg[1:]], axis=1))
    if not parts:
        return EMPTY
    return SlideSequence(np.concatenate(parts))


def _path_order(g: Tree, comp: list[int]) -> list[int]:
    members = set(comp)
    ends = [u for u in comp if sum(1 for w in g.adj[u] if w in members) <= 1]
    line = [ends[0]]
    prev = -1
    while True:
        nxt = [w for w in g.adj[line[-1]] if w in members and w != prev]
        if not nxt:
            return line
        prev = line[-1]
        line.append(nxt[0])


def _solve_component(g: Tree, comp: list[int], i: frozenset[int], j: frozenset[int]) -> SlideSequence:
    # rigid tokens always pin the body, so what is left of a spider is paths
    members = set(comp)
    ci, cj = i & members, j & members
    if ci == cj:
        return EMPTY
    return _path_sequence(_path_order(g, comp), ci, cj)


def _as_spider(g: Tree) -> SpiderGraph:
    if isinstance(g, SpiderGraph):
        return g
    hubs = [u for u in range(g.n) if g.degree(u) >= 3]
    if len(hubs) != 1:
        raise NotASpider(f"expected exactly one vertex of degree >= 3, found {len(hubs)}")
    return SpiderGraph(g.n, g.edges)


def solve(g: Tree, i: Iterable[int], j: Iterable[int]) -> SolveReport:
    """Shortest slide sequence from i to j on a spider.

    Infeasible inputs, including sets of different sizes, yield a report
    with ``feasible=False`` and an empty sequence.
    """
    g = _as_spider(g)
    i, j = token_set(g, i), token_set(g, j)
    if len(i) != len(j):
        return SolveReport(EMPTY, None, None, None, None, False, None,
                           f"|I| = {len(i)} but |J| = {len(j)}")
    verdict = is_reconfigurable(g, i, j)
    total = mstar(g, i, j)
    if not verdict.feasible:
        return SolveReport(EMPTY, None, total, None, None, False, None, verdict.reason)
    if not verdict.rigid:
        plan = _construct(g, i, j)
        seq, tag, predicted = plan.sequence, plan.tag, plan.predicted_detours
        note = "no rigid tokens"
    else:
        seq = concat(*(_solve_component(g, list(c), i, j) for c in verdict.components))
        tag, predicted = "balanced", 0
        note = f"{len(verdict.rigid)} rigid tokens, {len(verdict.components)} free components"
    detours = detour_count(g, seq).total
    return SolveReport(seq, len(seq), total, detours, tag, True, predicted, note)

