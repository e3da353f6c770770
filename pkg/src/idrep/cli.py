"""Command-line entry point.

Exit codes: 0 success, 1 usage or input parse errors, 2 validation failures,
3 internal invariant violations.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import benchharness as bh
from .ddladvisor import advise, load_samples_csv
from .errors import IdrepError, InvalidId, InvariantViolation, ValueOutOfRange
from .formatting import FORMATS, render_csv, render_json, render_table
from .idschema import load_schema_file, pack, parse_id, sid_schema, unpack, validate
from .numrep import DEFAULT_CATALOG, Signedness, load_catalog
from .storagemodel import AccountingMode, compare_representations

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3
MODE_CHOICES = ("actual", "declared", "actual_data", "declared_max")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(records, fmt, columns=(), json_obj=None):
    if fmt == "json":
        return render_json(records if json_obj is None else json_obj)
    if fmt == "csv":
        return render_csv(records, columns)
    return render_table(records, columns)


def _catalog(args):
    return load_catalog(args.catalog) if args.catalog else DEFAULT_CATALOG


def _signedness(args):
    return Signedness.UNSIGNED if args.unsigned else Signedness.SIGNED


def _read_ids(args, stdin):
    if args.ids:
        return list(args.ids)
    return [line.strip() for line in stdin if line.strip()]


def _schema(args):
    return load_schema_file(args.schema) if args.schema else sid_schema()


def cmd_schema(args, out, stdin):
    s = _schema(args)
    status = EXIT_OK
    if args.action == "unpack":
        rows = []
        for raw in _read_ids(args, stdin):
            try:
                rows.append({"value": raw, "id": unpack(s, int(raw, 10))})
            except ValueError as exc:
                if not isinstance(exc, ValueOutOfRange):
                    exc = f"not an unsigned integer: {raw!r}"
                rows.append({"value": raw, "id": "", "error": str(exc)})
                status = EXIT_INVALID
        return _finish(rows, args.format, ("value", "id", "error"), out, status, key="id")

    rows = []
    for raw in _read_ids(args, stdin):
        report = validate(s, raw, args.permissive)
        row = {
            "id": raw,
            "ok": report.ok,
            "violations": "; ".join(map(str, report.violations)),
            "warnings": "; ".join(map(str, report.warnings)),
        }
        if not report.ok:
            status = EXIT_INVALID
        elif args.action == "pack":
            row["value"] = pack(s, raw, args.permissive)
        elif args.action == "parse":
            parsed = parse_id(s, raw, args.permissive)
            for c in parsed.components:
                row[c.field] = c.digits if c.label is None else f"{c.digits} ({c.label})"
        rows.append(row)

    if args.action == "pack":
        return _finish(rows, args.format, ("id", "value", "violations"), out, status, key="value")
    if args.action == "parse":
        cols = ["id", "ok"] + [f.name for f in s.fields] + ["violations", "warnings"]
        return _finish(rows, args.format, cols, out, status)
    return _finish(rows, args.format, ("id", "ok", "violations", "warnings"), out, status)


def _finish(rows, fmt, columns, out, status, key=None):
    if fmt == "table" and key is not None:
        # bare values, one per line, for piping; failures go to stderr
        for r in rows:
            if r.get(key, "") != "":
                out.write(f"{r[key]}\n")
            else:
                msg = r.get("error") or r.get("violations")
                sys.stderr.write(f"{r.get('id') or r.get('value')}: {msg}\n")
        return status
    if fmt == "table":
        for r in rows:
            if not r.get("ok", True):
                sys.stderr.write(f"{r['id']}: {r['violations']}\n")
    out.write(_emit(rows, fmt, columns))
    return status


def cmd_space(args, out, stdin):
    mode = AccountingMode.parse(args.mode)
    report = compare_representations(args.digits, _catalog(args), _signedness(args), mode)
    records = report.as_records()
    if args.format == "table":
        out.write(
            f"digits={report.digits} signedness={report.signedness.value} "
            f"mode={report.mode.value} baseline={report.baseline}\n"
        )
    cols = ("representation", "bytes", "efficiency_pct")
    out.write(_emit(records, args.format, cols, report.to_dict()))
    return EXIT_OK


def cmd_bench(args, out, stdin):
    d = bh.generate_dataset(args.start, args.records, args.name)
    summary = bh.run_benchmark(
        d,
        repetitions=args.reps,
        runs=args.runs,
        index_kind=bh.IndexKind(args.index),
        timing_mode=bh.TimingMode(args.timing),
        target=args.target,
    )
    if args.format == "json":
        out.write(render_json(bh.summarize(summary)))
    elif args.format == "csv":
        out.write(bh.summary_csv(summary))
    else:
        meta = " ".join(f"{k}={v}" for k, v in summary.meta.items())
        out.write(meta + "\n" + bh.summary_table(summary))
    return EXIT_OK


def cmd_advise(args, out, stdin):
    ddl = Path(args.ddl).read_text()
    samples = load_samples_csv(Path(args.samples).read_text())
    recs = advise(
        ddl,
        samples,
        _catalog(args),
        _signedness(args),
        AccountingMode.parse(args.mode),
        args.min_samples,
    )
    records = [r.to_dict() for r in recs]
    cols = (
        "column",
        "declared",
        "observed_width",
        "current_bytes",
        "proposed_type",
        "proposed_bytes",
        "efficiency_pct",
        "mode",
        "warnings",
    )
    if args.format == "table" and not records:
        out.write("no integer candidates found\n")
        return EXIT_OK
    out.write(_emit(records, args.format, cols))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="idrep", description="String vs. integer identifier representation tools")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_catalog=False):
        sp.add_argument("--format", choices=FORMATS, default="table")
        if with_catalog:
            sp.add_argument("--catalog", help="JSON integer type catalog (default: MySQL types)")
            sp.add_argument("--unsigned", action="store_true", help="use unsigned ranges")

    sch = sub.add_parser("schema", help="validate, parse, pack or unpack identifiers")
    sch_sub = sch.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for action, what in (
        ("validate", "ids"),
        ("parse", "ids"),
        ("pack", "ids"),
        ("unpack", "integers"),
    ):
        sp = sch_sub.add_parser(action)
        sp.add_argument("ids", nargs="*", help=f"{what}; default: one per line on stdin")
        sp.add_argument("--schema", help="schema JSON file (default: bundled SID schema)")
        sp.add_argument("--permissive", action="store_true", help="unknown enum codes only warn")
        common(sp)
        sp.set_defaults(func=cmd_schema)

    space = sub.add_parser("space", help="storage byte comparison")
    sp = space.add_subparsers(dest="action", required=True, parser_class=_Parser).add_parser(
        "compare"
    )
    sp.add_argument("--digits", type=int, default=8)
    sp.add_argument("--mode", default="actual", choices=MODE_CHOICES)
    common(sp, with_catalog=True)
    sp.set_defaults(func=cmd_space)

    bench = sub.add_parser("bench", help="string vs. integer key lookup benchmark")
    b = bench.add_subparsers(dest="action", required=True, parser_class=_Parser).add_parser("run")
    b.add_argument("--records", type=int, default=bh.DEFAULT_COUNT)
    b.add_argument("--start", type=int, default=bh.DEFAULT_START)
    b.add_argument("--name", default=bh.DEFAULT_NAME)
    b.add_argument("--reps", type=int, default=bh.DEFAULT_REPS)
    b.add_argument("--runs", type=int, default=bh.DEFAULT_RUNS)
    b.add_argument("--index", choices=[k.value for k in bh.IndexKind], default="scan")
    b.add_argument("--timing", choices=[t.value for t in bh.TimingMode], default="per_query")
    b.add_argument(
        "--target", type=int, default=None, help="key to look up (default: last key, 10200000)"
    )
    common(b)
    b.set_defaults(func=cmd_bench)

    a = sub.add_parser("advise", help="recommend integer types for numeric character columns")
    a.add_argument("--ddl", required=True)
    a.add_argument("--samples", required=True, help="CSV with a header row of column names")
    a.add_argument("--mode", default="actual", choices=MODE_CHOICES)
    a.add_argument("--min-samples", type=int, default=1)
    common(a, with_catalog=True)
    a.set_defaults(func=cmd_advise)
    return p


def dispatch(argv: Optional[Sequence[str]] = None, out=None, stdin=None) -> int:
    out = out if out is not None else sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except InvariantViolation as exc:
        sys.stderr.write(f"idrep: internal error: {exc}\n")
        return EXIT_INTERNAL
    except InvalidId as exc:
        sys.stderr.write(f"idrep: {exc}\n")
        return EXIT_INVALID
    except (IdrepError, ValueError, OSError) as exc:
        sys.stderr.write(f"idrep: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
