"""Command-line interface: ``indgen {enumerate,analyze,tables,verify,pairs8}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .analyze import analyze_database
from .permcore import MAX_DEGREE
from .persist import DatabaseFormatError, cache_path, default_cache_dir, read_database, read_header, write_database
from .render import FORMATS, all_tables, render
from .search import ENUMERATE_MAX_DEGREE, STRATEGIES, ClassDatabase, count_generating_pairs, enumerate_classes
from .verify import Check, verify

log = logging.getLogger("indgen")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _degrees(args) -> list[int]:
    if args.n_max is not None:
        ns = list(range(args.n if args.n is not None else 1, args.n_max + 1))
    elif args.n is not None:
        ns = [args.n]
    else:
        raise UsageError("give --n or --n-max")
    for n in ns:
        if not 1 <= n <= ENUMERATE_MAX_DEGREE:
            raise UsageError(f"degree out of supported range: {n} (1..{ENUMERATE_MAX_DEGREE})")
    return ns


def _compute(n: int, args) -> ClassDatabase:
    t = time.perf_counter()
    db = analyze_database(enumerate_classes(n, args.strategy, args.workers), args.workers)
    log.info("S_%d: %d classes in %.1fs", n, db.class_count, time.perf_counter() - t)
    return db


def _cache_dir(args) -> Path:
    return Path(args.cache_dir) if args.cache_dir else default_cache_dir()


def _load_or_compute(n: int, args, compute: bool) -> ClassDatabase:
    path = cache_path(_cache_dir(args), n)
    if path.exists() and not compute:
        return read_database(path)
    if not compute:
        raise UsageError(f"no database for S_{n} at {path}; rerun with --compute")
    db = _compute(n, args)
    write_database(db, path)
    return db


def cmd_enumerate(args) -> int:
    ns = _degrees(args)
    for n in ns:
        db = _compute(n, args)
        if args.out:
            out = Path(args.out)
            path = out / f"s{n}.jsonl" if len(ns) > 1 or out.is_dir() else out
        else:
            path = cache_path(_cache_dir(args), n)
        try:
            write_database(db, path)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from None
        t = db.totals()
        print(f"S_{n}: {t['independent_sets']} independent sets, {t['classes']} classes, "
              f"{t['generating_classes']} generating, {t['dead_end_classes']} dead ends -> {path}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    db = analyze_database(read_database(args.db))
    path = args.out or args.db
    write_database(db, path)
    print(f"S_{db.degree}: analysed {db.class_count} classes -> {path}")
    return EXIT_OK


def cmd_tables(args) -> int:
    ns = _degrees(args)
    dbs = {n: _load_or_compute(n, args, args.compute) for n in ns}
    text = render(all_tables(dbs), args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    stored = read_database(args.db, check_totals=False) if args.db else None
    ns = [stored.degree] if stored is not None else _degrees(args)
    if stored is not None and not 1 <= stored.degree <= ENUMERATE_MAX_DEGREE:
        raise UsageError(f"degree out of supported range: {stored.degree} (1..{ENUMERATE_MAX_DEGREE})")
    for n in ns:
        report = verify(n, stored)
        if stored is not None:
            header = read_header(args.db)["totals"]
            report.checks.insert(0, Check("header totals", header == stored.totals(),
                                          f"header {header}, records {stored.totals()}"))
        print(report.text())
        ok &= report.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pairs8(args) -> int:
    n = args.n if args.n is not None else 8
    if not 1 <= n <= MAX_DEGREE:
        raise UsageError(f"degree out of supported range: {n} (1..{MAX_DEGREE})")
    t = time.perf_counter()
    count = count_generating_pairs(n)
    print(f"S_{n}: {count} classes of independent 2-element generating sets ({time.perf_counter() - t:.1f}s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indgen", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"indgen {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def degree_args(sp, n_max=True):
        sp.add_argument("--n", type=int, help="degree")
        if n_max:
            sp.add_argument("--n-max", type=int, help="run every degree 1..N-MAX")

    def run_args(sp):
        sp.add_argument("--strategy", choices=STRATEGIES, default="canonical-path")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--cache-dir", help="default: $INDGEN_CACHE_DIR or ~/.cache/indgen")

    sp = sub.add_parser("enumerate", help="enumerate and analyse the classes of S_n")
    degree_args(sp)
    run_args(sp)
    sp.add_argument("--out", help="output file (single degree) or directory")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("analyze", help="re-run the analyses on a stored database")
    sp.add_argument("db")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("tables", help="render the summary tables")
    degree_args(sp)
    run_args(sp)
    sp.add_argument("--format", choices=FORMATS, default="text")
    sp.add_argument("--compute", action="store_true", help="(re)compute databases instead of reading the cache")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("verify", help="cross-check an enumeration")
    degree_args(sp)
    sp.add_argument("--db", help="stored database to check against a fresh enumeration")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("pairs8", help="count classes of 2-element generating sets of S_8")
    sp.add_argument("--n", type=int, help="degree (default 8)")
    sp.set_defaults(func=cmd_pairs8)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except (UsageError, DatabaseFormatError, OSError) as exc:
        print(f"indgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
