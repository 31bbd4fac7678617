# -*- coding: utf-8 -*-
"""
liebranch command line.

    liebranch case A_D --m 8 --weight 1,1,0,0,0,0,0,0,0,0,0,0,0,0,0
    liebranch levi --type F4 --cross 3 --weight 1,0,0,0 --be
    liebranch resmat A_B --m 3
    liebranch tensor --type A1 --weights "1;1"
    liebranch dim --type E6 --weight 1,0,0,0,0,0

Exit codes: 0 ok, 2 usage error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from liebranch import config
from liebranch.batch import load_jobs, run_batch, write_ledger
from liebranch.commands import (
    list_cases,
    render_json,
    render_lie,
    run_case,
    run_diag,
    run_dim,
    run_grading,
    run_levi,
    run_resmat,
    run_tensor,
)
from liebranch.logging_utils import err, get_log_path, info, setup_logging, step, warn

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of printing usage and exiting."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liebranch", description="Branching rules for semisimple Lie algebras.")
    p.add_argument("--format", choices=config.OUTPUT_FORMATS, default=config.DEFAULT_FORMAT)
    p.add_argument("--out", metavar="PATH", help="write the result to PATH instead of stdout")
    p.add_argument("--log-level", default=config.DEFAULT_LOG_LEVEL)
    p.add_argument("-v", "--verbose", action="store_true", help="echo progress to stderr")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    c = sub.add_parser("case", help="branch through a named case")
    c.add_argument("name", nargs="?")
    c.add_argument("--m", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--weight", default="")
    c.add_argument("--list", action="store_true", help="list the catalog")

    lv = sub.add_parser("levi", help="branch to a Levi subalgebra")
    lv.add_argument("--type", required=True)
    lv.add_argument("--cross", type=int, action="append", default=[])
    lv.add_argument("--weight", default="")
    lv.add_argument("--be", action="store_true", help="report g-weights of the components")
    lv.add_argument("--grading", action="store_true", help="central values on the adjoint")

    r = sub.add_parser("resmat", help="print a restriction matrix")
    r.add_argument("name", nargs="?")
    r.add_argument("--m", type=int)
    r.add_argument("--p", type=int)
    r.add_argument("--q", type=int)
    r.add_argument("--type")
    r.add_argument("--cross", type=int, action="append", default=[])

    for verb, text in (("tensor", "tensor product of two irreducibles"),
                       ("diag", "restriction of an outer product to the diagonal")):
        t = sub.add_parser(verb, help=text)
        t.add_argument("--type", required=True)
        t.add_argument("--weights", required=True, help='weights separated by ";"')

    d = sub.add_parser("dim", help="dimension of an irreducible")
    d.add_argument("--type", required=True)
    d.add_argument("--weight", required=True)

    b = sub.add_parser("batch", help="run a JSON list of jobs in parallel")
    b.add_argument("--jobs", required=True, metavar="FILE")
    b.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
    b.add_argument("--ledger", metavar="PATH", help=f"default {config.DEFAULT_LEDGER_PATH}")
    return p


def _dispatch(args):
    v = args.verb
    if v == "case":
        if args.list:
            return list_cases()
        if not args.name:
            raise UsageError("case needs a name (or --list)")
        return run_case(args.name, args.weight, args.m, args.p, args.q)
    if v == "levi":
        if args.grading:
            return run_grading(args.type, args.cross)
        return run_levi(args.type, args.cross, args.weight, args.be)
    if v == "resmat":
        return run_resmat(args.name, args.m, args.p, args.q, args.type, args.cross)
    if v == "tensor":
        return run_tensor(args.type, args.weights)
    if v == "diag":
        return run_diag(args.type, args.weights)
    if v == "dim":
        return run_dim(args.type, args.weight)
    raise UsageError("missing command (case, levi, resmat, tensor, diag, dim, batch)")


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        info(f"wrote {path}")
    else:
        print(text)


def _run_batch(args) -> int:
    jobs = load_jobs(args.jobs)
    results = run_batch(jobs, args.workers)
    render = render_json if args.format == "json" else render_lie
    lines = []
    for i, res in enumerate(results, start=1):
        if res["ok"]:
            body = render(res["result"])
        else:
            body = f"error: {res['error']}"
            warn(f"job {i} failed: {res['error']}")
        lines.append(f"# job {i}\n{body}")
    _emit("\n".join(lines), args.out)
    ledger = write_ledger(jobs, results, args.ledger or config.DEFAULT_LEDGER_PATH)
    info(f"ledger: {ledger}")
    return max((r["exit"] for r in results), default=EXIT_OK)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = getattr(logging, str(args.log_level).upper(), logging.INFO)
    setup_logging(level, to_file=config.DEFAULT_LOG_TO_FILE, echo=args.verbose)
    step(f"liebranch {' '.join(argv)}")

    try:
        if args.verb == "batch":
            return _run_batch(args)
        out = _dispatch(args)
        text = render_json(out) if args.format == "json" else render_lie(out)
        _emit(text, args.out)
        return EXIT_OK
    except (ValueError, KeyError, OSError) as e:
        msg = f"missing field {e}" if isinstance(e, KeyError) else str(e)
        err(msg)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        err(f"{type(e).__name__}: {e} (log: {get_log_path()})")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
