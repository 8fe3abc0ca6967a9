"""Command-line interface: ``planepart <count|estimate|zn|gen|table1>``.

Exit statuses: 0 success, 2 usage, 3 generator ceiling, 4 numeric failure.
Warnings go to stderr as ``warning: ...`` lines.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import tempfile
import warnings
from pathlib import Path

from . import asymptotics, bose, exact, generator
from .errors import ConvergenceError, ResourceLimitError, ZnOverflowError

EXIT_OK, EXIT_USAGE, EXIT_CEILING, EXIT_NUMERIC = 0, 2, 3, 4
CACHE_ENV = "PLANEPART_CACHE"
SEQUENCES = ("p1d", "p2d")

_INT_RE = re.compile(r"^[0-9]+$")
_DEC_RE = re.compile(r"^(?:[0-9]+\.?[0-9]*|\.[0-9]+)$")


def _nonneg_int(text):
    if not _INT_RE.match(text):
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return int(text)


def _pos_int(text):
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _decimal(text):
    if not _DEC_RE.match(text):
        raise argparse.ArgumentTypeError(f"expected a plain decimal number, got {text!r}")
    return float(text)


def _unit_interval(text):
    value = _decimal(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"x must satisfy 0 < x < 1, got {text!r}")
    return value


def _positive_decimal(text):
    value = _decimal(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


class CountCache:
    """JSON file ``{"p1d": {"<n>": "<decimal>"}, "p2d": {...}}``."""

    def __init__(self, path):
        self.path = Path(path)
        self.entries = {name: {} for name in SEQUENCES}
        self.dirty = False
        if self.path.exists():
            data = json.loads(self.path.read_text())
            for name in SEQUENCES:
                for key, value in data.get(name, {}).items():
                    self.entries[name][int(key)] = int(value)

    def get(self, name, n):
        return self.entries[name].get(n)

    def put(self, name, n, value):
        if self.entries[name].get(n) != value:
            self.entries[name][n] = value
            self.dirty = True

    def to_json(self):
        return {
            name: {str(n): str(v) for n, v in sorted(self.entries[name].items())}
            for name in SEQUENCES
        }

    def save(self):
        if not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".planepart-cache-")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)
        self.dirty = False


def _open_cache(args):
    path = args.cache or os.environ.get(CACHE_ENV)
    return CountCache(path) if path else None


# --- rendering -------------------------------------------------------------


def render(records, columns, fmt, out, *, display=None):
    """Write records (dicts) as an aligned table, CSV, or JSON.

    ``display`` maps column names to formatting callables used only by the
    table format; CSV and JSON carry the raw values.
    """
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for rec in records:
            writer.writerow({c: ("" if rec.get(c) is None else rec[c]) for c in columns})
        return
    display = display or {}
    cells = [list(columns)]
    for rec in records:
        row = []
        for c in columns:
            v = rec.get(c)
            if v is None:
                row.append("-")
            elif c in display:
                row.append(display[c](v))
            else:
                row.append(str(v))
        cells.append(row)
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    for r in cells:
        out.write("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip() + "\n")


def _warn(message, err):
    err.write(f"warning: {message}\n")


# --- commands --------------------------------------------------------------


def _cached_sequence(name, n, cache):
    fn = exact.p1d if name == "p1d" else exact.p2d
    if cache is None:
        return fn(n)
    value = cache.get(name, n)
    if value is None:
        value = fn(n)
        cache.put(name, n, value)
    return value


def cmd_count(args, out, err):
    cache = _open_cache(args)
    spec = exact.RestrictionSpec(args.n, args.max_parts)
    if not spec.bounded:
        value = _cached_sequence(args.kind, args.n, cache)
    elif args.kind == "p1d":
        value = exact.p1d_atmost(spec)
    else:
        value = exact.p2d_atmost(spec, ceiling=args.ceiling, jobs=args.jobs)
    if cache is not None:
        cache.save()
    record = {"kind": args.kind, "n": args.n, "max_parts": args.max_parts, "count": value}
    columns = ["kind", "n", "max_parts", "count"]
    render(record if args.format == "json" else [record], columns, args.format, out)
    return EXIT_OK


def cmd_estimate(args, out, err):
    n, m = args.n, args.max_parts
    if m is None:
        if args.base == "exact":
            value = float(exact.p2d(n))
        else:
            value = asymptotics.p2d_unrestricted_estimate(n, args.base)
        in_window = None
    else:
        in_window = asymptotics.in_validity_window(n, m)
        if not in_window:
            lo, hi = asymptotics.validity_window(n)
            _warn(f"N={m} outside validity window [{lo:.4f}, {hi}) for n={n}", err)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", asymptotics.WindowWarning)
            value = asymptotics.p2d_restricted_estimate(n, m, args.base)
    record = {
        "n": n,
        "max_parts": m,
        "base": args.base,
        "estimate": value,
        "rounded": asymptotics.round_half_away(value),
        "in_window": in_window,
    }
    columns = list(record)
    render(record if args.format == "json" else [record], columns, args.format, out,
           display={"estimate": lambda v: f"{v:.4f}"})
    return EXIT_OK


def cmd_zn(args, out, err):
    point = bose.OscillatorPoint(args.x, args.dim)
    seq = bose.zn_recurrence(point, args.n_max)
    ys = bose.y_n_sequence(point, args.n_max, args.tol)
    records = []
    max_dev = 0.0
    for n in range(1, args.n_max + 1):
        rec = {"N": n, "Z_N": float(seq.values[n]), "y_N": float(ys[n])}
        if args.dim == 1:
            closed = bose.zn_1d_closed(point, n)
            dev = abs(seq.values[n] / closed - 1.0)
            max_dev = max(max_dev, dev)
            rec.update(Z_closed=closed, rel_dev=float(dev))
        records.append(rec)
    columns = ["N", "Z_N", "y_N"] + (["Z_closed", "rel_dev"] if args.dim == 1 else [])
    if args.format == "json":
        payload = {"dim": args.dim, "x": args.x, "rows": records}
        if args.dim == 1:
            payload["max_rel_dev"] = max_dev
        render(payload, columns, "json", out)
        return EXIT_OK
    render(records, columns, args.format, out, display={
        "Z_N": lambda v: f"{v:.7g}",
        "Z_closed": lambda v: f"{v:.7g}",
        "y_N": lambda v: f"{v:.6f}",
        "rel_dev": lambda v: f"{v:.2e}",
    })
    if args.format == "table" and args.dim == 1:
        out.write(f"max relative deviation: {max_dev:.3e}\n")
    return EXIT_OK


def cmd_gen(args, out, err):
    if args.emit:
        parts = generator.generate_all(args.n, ceiling=args.ceiling)
        if args.format == "json":
            rows = [[list(r) for r in p.rows] for p in parts]
            render({"n": args.n, "count": len(rows), "partitions": rows}, [], "json", out)
            return EXIT_OK
        count = generator.write_blocks(parts, out)
        err.write(f"total: {count}\n")
        return EXIT_OK
    hist = generator.count_by_parts(args.n, ceiling=args.ceiling, jobs=args.jobs)
    record = {"n": args.n, "count": sum(hist.values())}
    if args.format == "table":
        out.write(f"{record['count']}\n")
    else:
        render(record if args.format == "json" else [record], ["n", "count"], args.format, out)
    return EXIT_OK


TABLE1_COLUMNS = ["n", "N", "p2d", "exact", "calc1", "calc2", "calc3", "err1", "err2", "err3"]


def cmd_table1(args, out, err):
    reports = asymptotics.table1_report()
    if args.format in ("json", "csv"):
        records = [r.as_dict() for r in reports]
        render(records, list(records[0]), args.format, out)
        return EXIT_OK
    rows = []
    for r in reports:
        rows.append({
            "n": r.n, "N": r.max_parts, "p2d": r.p2d_exact, "exact": r.exact_restricted,
            "calc1": r.calc1, "calc2": r.calc2, "calc3": r.calc3,
            "err1": r.rel_err1, "err2": r.rel_err2, "err3": r.rel_err3,
        })
    count = lambda v: str(asymptotics.round_half_away(v))
    pct = lambda v: f"{asymptotics.round_half_away(v, 1):.1f}"
    render(rows, TABLE1_COLUMNS, "table", out, display={
        "calc1": count, "calc2": count, "calc3": count,
        "err1": pct, "err2": pct, "err3": pct,
    })
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help=f"JSON count cache (default: ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="planepart", parents=[common],
                                     description="Exact and asymptotic counts of restricted plane partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="exact partition counts")
    p.add_argument("kind", choices=SEQUENCES)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--max-parts", type=_pos_int)
    p.add_argument("--ceiling", type=_nonneg_int)
    p.add_argument("--jobs", type=_pos_int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("estimate", parents=[common], help="asymptotic plane-partition estimate")
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--max-parts", type=_pos_int)
    p.add_argument("--base", choices=("exact", "wright", "pr"), default="exact")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("zn", parents=[common], help="oscillator partition function Z_N(x)")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p.add_argument("--x", type=_unit_interval, required=True)
    p.add_argument("--n-max", type=_pos_int, required=True)
    p.add_argument("--tol", type=_positive_decimal, default=1e-15)
    p.set_defaults(func=cmd_zn)

    p = sub.add_parser("gen", parents=[common], help="generate plane partitions of n")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--emit", action="store_true")
    p.add_argument("--ceiling", type=_nonneg_int)
    p.add_argument("--jobs", type=_pos_int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("table1", parents=[common], help="restricted plane partitions, n = 10..20")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "table")
    args.cache = getattr(args, "cache", None)
    try:
        return args.func(args, out, err)
    except ResourceLimitError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CEILING
    except (ConvergenceError, ZnOverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run_captured(argv):
    """Run the CLI in-process; returns (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    status = main(argv, out, err)
    return status, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
