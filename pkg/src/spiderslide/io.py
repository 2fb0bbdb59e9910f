"""Plain-text instance and sequence files.

Instance file (``#`` starts a comment, blank lines are skipped)::

    n
    u v          # n - 1 edge lines
    I k v1 ... vk
    J k v1 ... vk

Sequence file: one ``u v`` slide per line, optionally followed by a
``# len=L detours=D mstar=M`` summary that readers ignore.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import ParseError, SpiderSlideError
from .graph import SlideSequence, Tree, build_tree, token_set


@dataclass(frozen=True)
class Instance:
    graph: Tree
    i: frozenset[int]
    j: frozenset[int]


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def _token_line(entry: tuple[int, list[str]] | None, label: str, g: Tree, last: int) -> frozenset[int]:
    if entry is None:
        raise ParseError(f"missing the {label} line", last + 1)
    lineno, fields = entry
    if fields[0] != label:
        raise ParseError(f"expected a line starting with {label!r}", lineno)
    nums = _ints(fields[1:], lineno)
    if not nums:
        raise ParseError(f"{label} line has no count", lineno)
    k, vs = nums[0], nums[1:]
    if k != len(vs):
        raise ParseError(f"{label} announces {k} vertices but lists {len(vs)}", lineno)
    if len(set(vs)) != len(vs):
        raise ParseError(f"{label} lists a vertex twice", lineno)
    try:
        return token_set(g, vs)
    except SpiderSlideError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_instance(text: str) -> Instance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty instance", 1)
    lineno, fields = lines[0]
    head = _ints(fields, lineno)
    if len(head) != 1 or head[0] < 1:
        raise ParseError("first line must be a positive vertex count", lineno)
    n = head[0]
    if len(lines) < n:
        raise ParseError(f"expected {n - 1} edge lines", lines[-1][0] + 1)
    edges = []
    for lineno, fields in lines[1:n]:
        uv = _ints(fields, lineno)
        if len(uv) != 2:
            raise ParseError("an edge line needs exactly two vertices", lineno)
        if not all(0 <= u < n for u in uv):
            raise ParseError(f"edge {uv[0]} {uv[1]} leaves the range 0..{n - 1}", lineno)
        edges.append((uv[0], uv[1]))
    last = lines[n - 1][0] if n > 1 else lines[0][0]
    try:
        g = build_tree(n, edges)
    except SpiderSlideError as exc:
        raise ParseError(str(exc), last) from None
    rest = lines[n:]
    i = _token_line(rest[0] if rest else None, "I", g, last)
    j = _token_line(rest[1] if len(rest) > 1 else None, "J", g, rest[0][0])
    if len(rest) > 2:
        raise ParseError("unexpected content after the J line", rest[2][0])
    return Instance(g, i, j)


def read_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def format_instance(g: Tree, i: Iterable[int], j: Iterable[int], comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(str(g.n))
    out.extend(f"{a} {b}" for a, b in g.edges)
    for label, s in (("I", sorted(i)), ("J", sorted(j))):
        out.append(" ".join([label, str(len(s)), *map(str, s)]))
    return "\n".join(out) + "\n"


def parse_sequence(text: str) -> SlideSequence:
    moves = []
    for lineno, fields in _content_lines(text):
        uv = _ints(fields, lineno)
        if len(uv) != 2:
            raise ParseError("a slide line needs exactly two vertices", lineno)
        moves.append((uv[0], uv[1]))
    return SlideSequence(moves)


def read_sequence(path: str | Path) -> SlideSequence:
    return parse_sequence(Path(path).read_text(encoding="utf-8"))


def format_sequence(s: SlideSequence, **summary) -> str:
    lines = [f"{a} {b}" for a, b in s.moves.tolist()]
    if summary:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines) + "\n" if lines else ""
