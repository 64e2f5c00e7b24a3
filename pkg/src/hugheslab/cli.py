"""Command line interface: analyze, scan, hunt, construct, verify.

Exit codes: 0 clean, 1 violation or parse error, 2 bad invocation,
3 an EXCEPTIONAL H_pi case was found.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .algebra import ALL, PrimeSet
from .analysis import analyze
from .catalog import (
    BUILTINS,
    CatalogError,
    GroupRecord,
    builtin_catalog,
    builtin_group,
    read_catalog,
    record_from_group,
    resolve_group,
)
from .group import EnumerationCapExceeded
from .question import hunt, hunt_summary, primes_up_to

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_EXCEPTIONAL = 0, 1, 2, 3


def _pi_arg(text: str):
    if text.strip().upper() == ALL:
        return ALL
    try:
        primes = PrimeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not primes:
        raise argparse.ArgumentTypeError("empty prime set")
    return primes


def _positive(text: str) -> int:
    try:
        val = int(float(text)) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return val


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit_report(report, out, table: bool) -> None:
    out.write((report.table_row() if table else report.to_json()) + "\n")
    if table:
        for v in report.violations:
            out.write(f"    violation: {v}\n")


def _status(reports) -> int:
    if any(r.exceptional for r in reports):
        return EXIT_EXCEPTIONAL
    if any(r.violations for r in reports):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        G = resolve_group(args.source)
    except (CatalogError, KeyError, OSError, ValueError) as exc:
        print(f"error: cannot load {args.source!r}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = analyze(G, args.pi, name=G.name)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    with _output(args.out) as out:
        _emit_report(report, out, args.table)
    return _status([report])


def _scan_records(args):
    if args.catalog is None:
        for rec in builtin_catalog():
            yield None, rec
        return
    try:
        fh = open(args.catalog)
    except OSError as exc:
        raise SystemExit(f"error: {exc}")
    with fh:
        yield from read_catalog(fh)


def cmd_scan(args) -> int:
    if args.catalog is None and args.catalog_pos is not None:
        args.catalog = args.catalog_pos
    if args.catalog is not None and not os.path.exists(args.catalog):
        print(f"error: no such catalog {args.catalog!r}", file=sys.stderr)
        return EXIT_USAGE
    reports, errors = [], 0
    with _output(args.out) as out:
        for lineno, item in _scan_records(args):
            if isinstance(item, CatalogError):
                errors += 1
                msg = {"line": lineno, "error": str(item)}
                out.write((f"line {lineno}: error: {item}" if args.table else json.dumps(msg)) + "\n")
                continue
            try:
                report = analyze(item.to_group(), args.pi, name=item.name)
            except (EnumerationCapExceeded, ValueError) as exc:
                errors += 1
                msg = {"line": lineno, "name": item.name, "error": str(exc)}
                out.write((f"{item.name}: error: {exc}" if args.table else json.dumps(msg)) + "\n")
                continue
            reports.append(report)
            _emit_report(report, out, args.table)
        summary = {
            "records": len(reports),
            "errors": errors,
            "violations": sum(len(r.violations) for r in reports),
            "exceptional": sum(r.exceptional for r in reports),
        }
        if args.table:
            out.write("summary: " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
        else:
            out.write(json.dumps({"summary": summary}) + "\n")
    status = _status(reports)
    if status == EXIT_OK and errors:
        status = EXIT_VIOLATION
    return status


def cmd_hunt(args) -> int:
    bound = None if args.unbounded else args.max_order
    verdicts = hunt(bound, primes_up_to(args.p_max), primes_up_to(args.q_max))
    with _output(args.out) as out:
        for v in verdicts:
            out.write((v.table_row() if args.table else v.to_json()) + "\n")
        summary = hunt_summary(verdicts)
        out.write((f"summary: {summary}" if args.table else json.dumps({"summary": summary})) + "\n")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.list:
        for name in BUILTINS:
            print(name)
        return EXIT_OK
    names = list(BUILTINS) if args.all else args.names
    if not names:
        print("error: give group names, --all or --list", file=sys.stderr)
        return EXIT_USAGE
    records: list[GroupRecord] = []
    for name in names:
        try:
            G = builtin_group(name)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_USAGE
        records.append(record_from_group(G, G.name, BUILTINS[G.name][1]))
    with _output(args.out) as out:
        for rec in records:
            out.write(rec.to_json() + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    with _output(args.out) as out:
        ok = run_suite(lambda line: (out.write(line + "\n"), out.flush()))
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hugheslab", description="Hughes subgroup computations on permutation groups.")
    parser.add_argument("--cap", type=_positive, help="enumeration cap (default: $HUGHESLAB_CAP or 200000)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pi=True):
        if pi:
            p.add_argument("--pi", type=_pi_arg, default=ALL, help="prime set like 3,13, or ALL (default)")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--table", action="store_true", help="human-readable rows instead of JSON lines")
        p.add_argument("--cap", type=_positive, default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("analyze", help="analyze one group")
    p.add_argument("source", help="builtin:NAME, a JSON record, or a catalog file (first record)")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="analyze every record of a catalog (builtin catalog by default)")
    p.add_argument("catalog_pos", nargs="?", metavar="CATALOG")
    p.add_argument("--catalog", help="catalog file, one JSON record per line")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("hunt", help="run the prime/order prefilters over (p, q) pairs")
    p.add_argument("--max-order", type=_positive, default=10**6, help="bound on the kernel order (default 10^6)")
    p.add_argument("--unbounded", action="store_true", help="no bound on the kernel order")
    p.add_argument("--p-max", type=_positive, default=13)
    p.add_argument("--q-max", type=_positive, default=13)
    common(p, pi=False)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("construct", help="emit builtin groups as catalog records")
    p.add_argument("names", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not getattr(args, "cap", None):
        return args.func(args)
    saved = os.environ.get("HUGHESLAB_CAP")
    os.environ["HUGHESLAB_CAP"] = str(args.cap)
    try:
        return args.func(args)
    finally:
        if saved is None:
            del os.environ["HUGHESLAB_CAP"]
        else:
            os.environ["HUGHESLAB_CAP"] = saved


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
