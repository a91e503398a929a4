"""Command line front end.

Exit codes: 0 every check passed, 1 some identity failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import diagrams as dg
from .errors import PartitionAlgebraError
from .jucys_murphy import HalfIndex, expand
from .relations import SUITE_NAMES, verify_suite
from .tensor import DEFAULT_GRID, TENSOR_SUITES, RepConfig, verify_tensor_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partalg", description="Exact partition algebra kernel.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compose", help="compose two diagrams (first on top)")
    c.add_argument("top")
    c.add_argument("bottom")
    c.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("expand", help="expand L, sigma or a central element in the diagram basis")
    e.add_argument("family", choices=("L", "sigma", "central"))
    e.add_argument("index", help="half-integer index such as 3 or 5/2")
    e.add_argument("--rank", type=int, default=3)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--json", metavar="PATH", help="also write the element as JSON")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suites", nargs="*",
                   help=f"suite names; tensor suites as tensor:NAME ({', '.join(TENSOR_SUITES)})")
    v.add_argument("--all", action="store_true", help="every algebraic and tensor suite")
    v.add_argument("--rank", type=int, default=3)
    v.add_argument("--n", type=int, help="dimension of V for tensor suites")
    v.add_argument("--r", type=int, help="tensor power for tensor suites")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--json", metavar="PATH", help="write the reports as JSON")

    d = sub.add_parser("dims", help="count diagrams of each rank by enumeration")
    d.add_argument("--max-rank", type=int, default=None)
    return ap


def _print(s: str = ""):
    sys.stdout.write(s + "\n")


def cmd_compose(args) -> int:
    a = dg.parse_diagram(args.top)
    b = dg.parse_diagram(args.bottom)
    res = dg.compose(a, b)
    if args.format == "json":
        _print(json.dumps({"diagram": res.diagram.to_json(), "removed_blocks": res.removed_blocks}))
    else:
        _print(res.diagram.to_text())
        _print(f"removed_blocks: {res.removed_blocks}")
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        idx = HalfIndex.parse(args.index)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    elem = expand(args.family, idx, args.rank)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(elem.to_json(), fh, indent=1)
            fh.write("\n")
    if args.format == "json":
        _print(json.dumps(elem.to_json()))
    else:
        _print(f"{args.family}_{idx} at rank {args.rank}: {len(elem)} terms")
        _print(elem.to_text())
    return EXIT_OK


def _job(spec):
    kind, name, arg = spec
    if kind == "alg":
        return verify_suite(name, arg)
    n, r = arg
    return verify_tensor_suite(name, RepConfig(n, r))


def _plan(args) -> list:
    names = list(args.suites)
    if args.all:
        names = list(SUITE_NAMES) + [f"tensor:{t}" for t in TENSOR_SUITES]
    if not names:
        raise UsageError("name at least one suite or pass --all")
    if (args.n is None) != (args.r is None):
        raise UsageError("--n and --r go together")
    grid = [(args.n, args.r)] if args.n is not None else list(DEFAULT_GRID)
    cap = dg.enumeration_cap()
    jobs = []
    for name in names:
        if name.startswith("tensor:"):
            t = name.split(":", 1)[1]
            targets = TENSOR_SUITES if t == "all" else (t,)
            for tt in targets:
                if tt not in TENSOR_SUITES:
                    raise UsageError(f"unknown tensor suite {tt!r}")
                for n, r in grid:
                    RepConfig(n, r)  # validates the budget up front
                    jobs.append(("tensor", tt, (n, r)))
        else:
            if name not in SUITE_NAMES:
                raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
            if args.rank < 0 or args.rank > cap:
                raise UsageError(f"--rank must be in 0..{cap} (PA_MAX_RANK)")
            jobs.append(("alg", name, args.rank))
    return jobs


def cmd_verify(args) -> int:
    jobs = _plan(args)
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_job, jobs))
    else:
        reports = [_job(j) for j in jobs]
    payload = {"reports": [r.to_json() for r in reports]}
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    if args.format == "json":
        _print(json.dumps(payload))
    else:
        for rep in reports:
            _print(rep.summary())
            for note in rep.notes:
                _print(f"    note: {note}")
        failed = sum(1 for r in reports if not r.passed)
        _print(f"{len(reports) - failed}/{len(reports)} suites passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_dims(args) -> int:
    top = dg.enumeration_cap() if args.max_rank is None else args.max_rank
    for k in range(1, top + 1):
        count = sum(1 for _ in dg.enumerate_diagrams(k))
        _print(f"{k} {count}")
    return EXIT_OK


COMMANDS = {"compose": cmd_compose, "expand": cmd_expand, "verify": cmd_verify, "dims": cmd_dims}


def main(argv=None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage problems with code 2
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PartitionAlgebraError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
