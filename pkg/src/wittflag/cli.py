"""Command-line front end.

    wittflag compute --type C --m 1 --blocks 1 --format json
    wittflag verify --suite appendix --max-size 10
    wittflag table --type D --max-n 4
    wittflag selfcheck

Exit codes: 0 success, 1 usage error, 2 an internal check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .suites import SUITES, Item, check_rank_table, run_suite, suite_appendix, table_parameters
from .witt import PipelineError, compute

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2
TABLE_LIMIT = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one line, exit code 1
        raise UsageError(message)


def parse_blocks(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit() or int(part) <= 0:
            raise argparse.ArgumentTypeError(f"blocks must be positive integers, got {part!r}")
        out.append(int(part))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wittflag", description="Witt rings of complex flag varieties")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="presentation and graded ranks for one flag variety")
    c.add_argument("--type", required=True, choices=list("ABCD"), type=str.upper)
    c.add_argument("--m", type=int, default=None, help="rank of the Spin/Sp/SO factor")
    c.add_argument("--blocks", type=parse_blocks, default=(),
                   help="comma-separated unitary block sizes")
    c.add_argument("--format", choices=["json", "text"], default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=list(SUITES), default="all")
    v.add_argument("--max-size", type=int, default=12,
                   help="largest f+g for the appendix suite")
    v.add_argument("--max-n", type=int, default=7, help="largest n for the tables suite")

    t = sub.add_parser("table", help="presentations for every parameter tuple up to a rank")
    t.add_argument("--type", required=True, choices=list("ABCD"), type=str.upper)
    t.add_argument("--max-n", type=int, default=5)
    t.add_argument("--format", choices=["json", "text"], default="json")
    t.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1))

    sub.add_parser("selfcheck", help="quick anchors and the small appendix range")
    return p


def _emit(pres, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(pres.to_json(), sort_keys=True)
    return pres.text()


def run_compute(type_: str, m: int | None, blocks: Sequence[int], fmt: str) -> int:
    if type_ != "A" and m is None:
        raise UsageError(f"type {type_} needs --m")
    if type_ == "A" and m not in (None, 0):
        raise UsageError("type A takes no --m")
    try:
        pres = compute(type_, m, blocks)
    except PipelineError as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(_emit(pres, fmt))
    return EXIT_OK


def _print_items(items: list[Item]) -> int:
    for it in items:
        print(it.line())
    failed = sum(not it.passed for it in items)
    print(f"summary: {len(items)} checks, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_CHECK


def run_verify(suite: str, max_size: int, max_n: int) -> int:
    if max_size < 0 or max_n < 1:
        raise UsageError("bounds must be positive")
    try:
        items = run_suite(suite, max_size=max_size, max_n=max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _print_items(items)


def _table_row(args: tuple) -> tuple[str | None, str | None]:
    type_, m, blocks, fmt = args
    try:
        return _emit(compute(type_, m, blocks), fmt), None
    except (PipelineError, ValueError) as exc:
        return None, f"{type_} m={m} blocks={blocks}: {exc}"


def run_table(type_: str, max_n: int, fmt: str, jobs: int = 1) -> int:
    if max_n > TABLE_LIMIT:
        raise UsageError(f"--max-n {max_n} is too large; use at most {TABLE_LIMIT} "
                         "or call wittflag.witt.compute from Python for bigger cases")
    if max_n < 1:
        raise UsageError("--max-n must be at least 1")
    params = [(t, m, b, fmt) for t, m, b in table_parameters(type_, max_n)]
    if jobs > 1 and len(params) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_table_row, params, chunksize=8))
    else:
        rows = [_table_row(p) for p in params]
    failures = 0
    additive = 0
    for out, err in rows:
        if err is not None:
            failures += 1
            print(f"error: {err}")
            continue
        print(out)
        if "ADDITIVE_ONLY" in out:
            additive += 1
    print(f"summary: {len(rows)} presentations, {additive} additive-only, "
          f"{failures} check failures")
    return EXIT_OK if failures == 0 else EXIT_CHECK


def run_selfcheck() -> int:
    items = []
    anchors = [
        (("A", None, (1, 2)), (1, 0, 0, 0), []),
        (("A", None, (1, 1, 1)), (1, 1, 0, 0), [-1]),
        (("C", 1, (1,)), (2, 1, 0, 1), None),
        (("A", None, (4,)), (1, 0, 0, 0), []),
        (("B", 3, ()), (1, 0, 0, 0), []),
        (("C", 3, ()), (1, 0, 0, 0), []),
        (("D", 3, ()), (1, 0, 0, 0), []),
    ]
    for args, ranks, degrees in anchors:
        try:
            pres = compute(*args)
        except PipelineError as exc:
            items.append(Item("selfcheck", str(args), False, str(exc)))
            continue
        ok = pres.ranks == ranks
        if degrees is not None:
            ok = ok and [d for _, d in pres.exterior] == degrees
        items.append(Item("selfcheck", str(args), ok, f"ranks={pres.ranks}"))
    items.extend(suite_appendix(8))
    return _print_items(items)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.verb == "compute":
            return run_compute(ns.type, ns.m, ns.blocks, ns.format)
        if ns.verb == "verify":
            return run_verify(ns.suite, ns.max_size, ns.max_n)
        if ns.verb == "table":
            return run_table(ns.type, ns.max_n, ns.format, ns.jobs)
        return run_selfcheck()
    except UsageError as exc:
        print(f"wittflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
