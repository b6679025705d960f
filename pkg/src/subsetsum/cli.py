"""Command-line front end.

Subcommands: ``gen-b``, ``build``, ``search``, ``classify``.  Reports go to
stdout (json, csv or text); timing goes to stderr.  Exit codes: 0 ok,
2 invalid input, 3 overflow, 4 resource limit, 5 inconclusive search.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from pathlib import Path

from .construct import build_a_thm11, build_a_thm13, truncate
from .errors import InvalidInput, Overflow, ResourceLimit, SubsetSumError
from .search import DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES, INCONCLUSIVE, nonexistence_search
from .sequences import classify_b, gen_b_ap, gen_b_thm11
from .sumset import mem_budget
from .verify import SKIPPED, verify_trace, last_verified_stage

log = logging.getLogger("subsetsum")

EXIT_OK = 0
EXIT_INCONCLUSIVE = 5


def read_sequence(path: str) -> list[int]:
    """Newline-delimited decimal integers; blank lines and ``#`` comments ignored."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(int(line))
        except ValueError as exc:
            raise InvalidInput(f"{path}:{lineno}: not an integer: {line!r}") from exc
    return out


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InvalidInput(f"cannot parse integer list {text!r}") from exc


def _sequence_arg(args) -> list[int]:
    if args.b is not None and args.b_file is not None:
        raise InvalidInput("give --b or --b-file, not both")
    if args.b is not None:
        return parse_int_list(args.b)
    if args.b_file is not None:
        return read_sequence(args.b_file)
    raise InvalidInput("a B prefix is required (--b or --b-file)")


# rendering

def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if not isinstance(v, (dict, list)) or v else f"{prefix}{k}.")
    elif isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}{i}.")
    else:
        key = prefix[:-1]
        if isinstance(obj, list):
            val = " ".join(str(x) for x in obj)
        elif obj is None:
            val = "null"
        elif isinstance(obj, bool):
            val = "true" if obj else "false"
        else:
            val = str(obj)
        yield key, val


def render(payload: dict, fmt: str, rows_key: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "text":
        return "\n".join(f"{k}: {v}" for k, v in _flatten(payload))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows = payload.get(rows_key) if rows_key else None
    if rows and isinstance(rows[0], dict):
        cols = list(rows[0])
        w.writerow(cols)
        for r in rows:
            w.writerow([" ".join(map(str, v)) if isinstance(v, list) else
                        json.dumps(v) if isinstance(v, (dict, bool)) or v is None else v
                        for v in (r.get(c) for c in cols)])
    else:
        w.writerow(["key", "value"])
        for k, v in _flatten(payload):
            w.writerow([k, v])
    return buf.getvalue().rstrip("\n")


def _emit(payload: dict, args, rows_key: str | None = None) -> None:
    print(render(payload, args.format, rows_key))


# commands

def cmd_gen_b(args) -> int:
    if args.family == "thm11":
        b = gen_b_thm11(args.b1, args.n, bigint=args.bigint)
    else:
        if args.d is None:
            raise InvalidInput("--d is required for the ap family")
        b = gen_b_ap(args.b1, args.d, args.n, bigint=args.bigint)
    if args.bigint:
        b = [str(x) for x in b]
    if args.format == "text":
        print(" ".join(map(str, b)))
    elif args.format == "csv":
        print("\n".join(["b"] + [str(x) for x in b]))
    else:
        print(json.dumps({"b": b}, separators=(",", ":")))
    return EXIT_OK


def cmd_build(args) -> int:
    if args.thm == "1.1":
        build = lambda k: build_a_thm11(args.b1, k)  # noqa: E731
        first = 3
        head = {"thm": "1.1", "b1": args.b1}
    else:
        if args.d is None:
            raise InvalidInput("--d is required for --thm 1.3")
        build = lambda k: build_a_thm13(args.b1, args.d, k)  # noqa: E731
        first = 2
        head = {"thm": "1.3", "b1": args.b1, "d": args.d}
    kmax = args.kmax if args.kmax is not None else first + 2
    overflow = None
    try:
        trace = build(kmax)
    except Overflow as exc:
        if exc.stage is None or exc.stage <= first:
            raise
        overflow = exc
        trace = truncate(build(exc.stage - 1), exc.stage - 1)

    payload = dict(head)
    payload["kmax"] = kmax
    code = EXIT_OK
    if args.verify:
        reports = verify_trace(trace, args.mem_budget)
        stages = [r.to_dict() for r in reports]
        payload["stages"] = stages
        payload["all_verified"] = all(r.verified for r in reports) and overflow is None
        payload["last_verified_stage"] = last_verified_stage(reports)
        if any(r.status == SKIPPED for r in reports):
            code = ResourceLimit.exit_code
        elif not all(r.verified for r in reports):
            code = 1
    else:
        payload["stages"] = [
            {"k": s.k, "added": list(s.added), "size": len(s.elements), "span": s.span,
             "expected_holes": list(s.expected.holes)}
            for s in trace.steps
        ]
    payload["last_good_stage"] = trace.final.k
    if overflow is not None:
        payload["error"] = {"kind": "overflow", "stage": overflow.stage, "message": str(overflow)}
        code = Overflow.exit_code
    _emit(payload, args, "stages")
    return code


def cmd_search(args) -> int:
    known_b = _sequence_arg(args)
    out = nonexistence_search(
        known_b,
        args.horizon,
        max_nodes=args.max_nodes,
        max_depth=args.max_depth,
        threads=args.threads,
        record_dead_ends=args.dump_dead_ends,
    )
    _emit(out.to_dict(), args)
    return EXIT_INCONCLUSIVE if out.kind == INCONCLUSIVE else EXIT_OK


def cmd_classify(args) -> int:
    _emit(classify_b(_sequence_arg(args)).to_dict(), args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subsetsum", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log timing to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=["json", "csv", "text"], default=default)

    g = sub.add_parser("gen-b", help="print a prefix of B")
    g.add_argument("--family", choices=["thm11", "ap"], required=True)
    g.add_argument("--b1", type=int, required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--bigint", action="store_true", help="no 64-bit limit; values as strings")
    fmt(g, default="text")
    g.set_defaults(func=cmd_gen_b)

    b = sub.add_parser("build", help="build A stage by stage, optionally verifying")
    b.add_argument("--thm", choices=["1.1", "1.3"], required=True)
    b.add_argument("--b1", type=int, required=True)
    b.add_argument("--d", type=int)
    b.add_argument("--kmax", type=int)
    b.add_argument("--verify", action="store_true")
    b.add_argument("--mem-budget", type=int, default=None,
                   help="window budget in bits (default: $SUBSETSUM_MEM_BUDGET or 2^25)")
    fmt(b)
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("search", help="exhaustive non-existence search")
    s.add_argument("--b", help="comma-separated B prefix")
    s.add_argument("--b-file", help="file of newline-delimited integers")
    s.add_argument("--horizon", type=int)
    s.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    s.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--dump-dead-ends", action="store_true")
    fmt(s)
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("classify", help="evaluate hypothesis sets on a B prefix")
    c.add_argument("--b")
    c.add_argument("--b-file")
    fmt(c)
    c.set_defaults(func=cmd_classify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(name)s: %(message)s")
    t0 = time.perf_counter()
    try:
        if getattr(args, "mem_budget", None) is None and args.command == "build":
            args.mem_budget = mem_budget()
        code = args.func(args)
    except SubsetSumError as exc:
        print(f"subsetsum: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = exc.exit_code
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
