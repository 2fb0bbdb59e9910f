"""Command-line front end.

Every report line is a set of ``key=value`` pairs; free-text values are
double-quoted.  Exit codes: 0 for success, 1 for unreadable or invalid
input, 2 for an infeasible instance (``solve``), an unreachable target
(``oracle``), a rejected sequence (``verify``) or a mismatch (``diff``),
and 3 when the oracle runs out of its state budget.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import ResourceExceeded, SpiderSlideError
from .graph import is_valid_sequence
from .io import format_instance, format_sequence, read_instance, read_sequence
from .oracle import DEFAULT_MAX_STATES, ShapeSpec, enumerate_instances, oracle_shortest
from .planner import solve

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_BUDGET = 0, 1, 2, 3


def _show(value) -> str:
    return "none" if value is None else str(value)


def _quote(text: str) -> str:
    return '"' + text.replace('"', "'") + '"'


def _legs(text: str) -> int | tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        return int(lo) if not hi else (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K or K-K, got {text!r}") from None


def _shape(args: argparse.Namespace) -> ShapeSpec:
    return ShapeSpec(
        legs=args.legs,
        leg_len=args.leg_len,
        tokens=args.tokens,
        max_vertices=args.max_vertices,
        exhaustive=args.exhaustive,
    )


def cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    report = solve(inst.graph, inst.i, inst.j)
    print(report.summary())
    if not report.feasible:
        print(f"reason={_quote(report.explanation)}")
        return EXIT_NEGATIVE
    if args.emit_sequence:
        Path(args.emit_sequence).write_text(
            format_sequence(
                report.sequence, len=report.length, detours=report.detours, mstar=report.mstar
            ),
            encoding="utf-8",
        )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    seq = read_sequence(args.sequence)
    check = is_valid_sequence(inst.graph, inst.i, seq)
    if not check.valid:
        where = "start" if check.failed_at is None else str(check.failed_at)
        print(f"valid=false move={where} reason={_quote(check.reason)}")
        return EXIT_NEGATIVE
    if check.final != inst.j:
        print(f"valid=false move={len(seq)} reason={_quote('end state ≠ J')}")
        return EXIT_NEGATIVE
    print(f"valid=true len={len(seq)}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    try:
        found = oracle_shortest(inst.graph, inst.i, inst.j, max_states=args.max_states)
    except ResourceExceeded as exc:
        print(f"RESOURCE-EXCEEDED explored={exc.explored} limit={exc.limit}")
        return EXIT_BUDGET
    if found is None:
        print("UNREACHABLE")
        return EXIT_NEGATIVE
    print(f"len={found.length}")
    if args.emit_sequence:
        Path(args.emit_sequence).write_text(
            format_sequence(found.sequence, len=found.length), encoding="utf-8"
        )
    return EXIT_OK


def _instance_name(seed: int, idx: int) -> str:
    return f"seed{seed}_{idx:05d}"


def cmd_gen(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = 0
    for idx, (g, i, j) in enumerate(enumerate_instances(_shape(args), args.seed, args.count)):
        (out / f"{_instance_name(args.seed, idx)}.txt").write_text(
            format_instance(g, i, j, comment=f"seed={args.seed} index={idx}"), encoding="utf-8"
        )
        written += 1
    print(f"written={written} dir={out}")
    return EXIT_OK


@dataclass(frozen=True)
class DiffOutcome:
    idx: int
    status: str  # ok, mismatch or skipped
    expected: int | None
    got: int | None
    detail: str = ""


def _diff_one(job: tuple[int, object, frozenset[int], frozenset[int], int]) -> DiffOutcome:
    idx, g, i, j, max_states = job
    try:
        truth = oracle_shortest(g, i, j, max_states=max_states)
    except ResourceExceeded:
        return DiffOutcome(idx, "skipped", None, None, "oracle budget exceeded")
    expected = None if truth is None else truth.length
    report = solve(g, i, j)
    got = report.length
    if expected != got:
        return DiffOutcome(idx, "mismatch", expected, got, "length differs")
    if report.feasible:
        check = is_valid_sequence(g, i, report.sequence)
        if not check.valid or check.final != j:
            return DiffOutcome(idx, "mismatch", expected, got, "sequence does not reach J")
    return DiffOutcome(idx, "ok", expected, got)


def cmd_diff(args: argparse.Namespace) -> int:
    stream = enumerate_instances(_shape(args), args.seed, args.count)
    jobs = [(idx, g, i, j, args.max_states) for idx, (g, i, j) in enumerate(stream)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_diff_one, jobs, chunksize=64))
    else:
        outcomes = [_diff_one(job) for job in jobs]
    corpus = Path(args.corpus) if args.corpus else None
    mismatches = skipped = 0
    for out, (_, g, i, j, _) in zip(outcomes, jobs):
        if out.status == "skipped":
            skipped += 1
            print(f"index={out.idx} status=skipped")
            continue
        if out.status != "mismatch":
            continue
        mismatches += 1
        print(f"index={out.idx} status=mismatch expected={_show(out.expected)} got={_show(out.got)}")
        if corpus is not None:
            corpus.mkdir(parents=True, exist_ok=True)
            name = _instance_name(args.seed, out.idx)
            (corpus / f"{name}.txt").write_text(
                format_instance(g, i, j, comment=out.detail), encoding="utf-8"
            )
            (corpus / f"{name}.expected").write_text(f"{_show(out.expected)}\n", encoding="utf-8")
    print(f"checked={len(outcomes)} mismatches={mismatches} skipped={skipped}")
    return EXIT_OK if mismatches == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spiderslide", description="Shortest token sliding on spider graphs."
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="construct a shortest slide sequence")
    s.add_argument("instance")
    s.add_argument("--emit-sequence", metavar="PATH")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a slide sequence against an instance")
    v.add_argument("instance")
    v.add_argument("sequence")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact shortest length by exhaustive search")
    o.add_argument("instance")
    o.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    o.add_argument("--emit-sequence", metavar="PATH")
    o.set_defaults(func=cmd_oracle)

    for name, func, text in (
        ("gen", cmd_gen, "write random or exhaustive instance files"),
        ("diff", cmd_diff, "compare the solver with the oracle on generated instances"),
    ):
        q = sub.add_parser(name, help=text)
        q.add_argument("--legs", type=_legs, default=3, help="leg count, or a range like 3-5")
        q.add_argument("--leg-len", type=int, default=3)
        q.add_argument("--tokens", type=int, default=3)
        q.add_argument("--max-vertices", type=int, default=None)
        q.add_argument("--exhaustive", action="store_true")
        q.add_argument("--count", type=int, default=None)
        q.add_argument("--seed", type=int, required=True)
        q.set_defaults(func=func)
        if name == "gen":
            q.add_argument("--out", default="instances")
        else:
            q.add_argument("--corpus", metavar="DIR")
            q.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
            q.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("gen", "diff") and not args.exhaustive and args.count is None:
        print("error: --count is required unless --exhaustive is given", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (SpiderSlideError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
