"""Command line surface: counting, listing, paths, edges, fitting, tables.

Exit codes: 0 on success, 1 when a verification-style command finds a
mismatch, 2 on usage errors.  CSV output is byte-stable so the files written
by ``seed-tables`` can be compared verbatim in CI.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import counting, paths, quasi
from .cone import edges_of_cone_star
from .counting import CLASS_FILTERS

TABLE_NAMES = ("genus-small", "contains-p3", "contains-p4")
_CONTAINS_Q = {"contains-p3": (3, (1, 2, 4, 5, 7, 8, 10, 11, 13, 14)),
               "contains-p4": (4, (1, 3, 5, 7, 9, 11, 13, 15))}


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("NSG_WORKERS", "1")))
    except ValueError:
        return 1


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _emit(args, columns, rows, preamble=()):
    """Write rows as CSV (default) or JSON, to stdout or --out."""
    if args.format == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = list(preamble)
        lines.append(",".join(columns))
        lines.extend(",".join(str(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_count(args) -> int:
    workers = args.workers
    rows = []
    if args.genus is not None:
        for g in _parse_range(args.genus):
            rows.append(
                (args.p, g, args.cls, counting.count_by_genus(args.p, g, args.cls, workers))
            )
        columns = ("p", "genus", "class", "count")
    else:
        qs = _parse_range(args.contains)
        explicit = qs.stop - qs.start == 1
        for q in qs:
            if math.gcd(args.p, q) != 1:
                if explicit:
                    raise counting.NotCoprime(f"gcd({args.p}, {q}) != 1")
                continue
            rows.append(
                (args.p, q, args.cls, counting.count_containing(args.p, q, args.cls, workers))
            )
        columns = ("p", "q", "class", "count")
    _emit(args, columns, rows)
    return 0


def _cmd_enumerate(args) -> int:
    rows = []
    for g in _parse_range(args.genus):
        for s in counting.enumerate_by_genus(args.p, g, args.cls):
            frobenius = "" if not any(s.mu) else s.frobenius()
            rows.append(
                (
                    s.p,
                    ";".join(str(m) for m in s.mu),
                    ";".join(str(v) for v in s.minimal_generators()),
                    s.genus(),
                    frobenius,
                    s.multiplicity(),
                    s.embedding_dimension(),
                    str(s.is_symmetric()).lower(),
                    str(s.is_pseudo_symmetric()).lower(),
                    str(s.is_max_embedding_dimension()).lower(),
                )
            )
    _emit(
        args,
        (
            "p", "mu", "generators", "genus", "frobenius", "multiplicity",
            "embedding_dimension", "symmetric", "pseudo_symmetric",
            "max_embedding_dimension",
        ),
        rows,
    )
    return 0


def _cmd_paths(args) -> int:
    if args.verify_recursions:
        q_max = args.q_max if args.q_max is not None else args.q
        report = paths.verify_path_recursions(args.p, q_max)
        rows = [
            (
                args.p, r.q, r.new_total, r.new_symmetric, r.new_pseudo,
                str(r.ok).lower(),
            )
            for r in report.rows
        ]
        _emit(args, ("p", "q", "new_total", "new_symmetric", "new_pseudo", "ok"), rows)
        if not report.ok:
            print("recursion mismatch", file=sys.stderr)
            return 1
        return 0
    system = paths.PathSystem(args.p, args.q)
    if args.list:
        rows = []
        for path in sorted(
            paths.iter_admissible(system), key=lambda t: (len(t.points), t.corners)
        ):
            s = paths.semigroup_from_path(system, path)
            rows.append(
                (
                    " ".join(f"({a},{b})" for a, b in path.corners),
                    ";".join(str(m) for m in s.mu),
                    str(s.is_symmetric()).lower(),
                    str(s.is_pseudo_symmetric()).lower(),
                )
            )
        _emit(args, ("corners", "mu", "symmetric", "pseudo_symmetric"), rows)
        return 0
    _emit(args, ("p", "q", "admissible"), [(system.p, system.q, paths.count_admissible(system))])
    return 0


def _cmd_edges(args) -> int:
    rays = edges_of_cone_star(args.p).rays
    if args.format == "json":
        sys.stdout.write(json.dumps([list(r) for r in rays]) + "\n")
    else:
        sys.stdout.write(" ".join("(" + ",".join(str(v) for v in r) + ")" for r in rays) + "\n")
    return 0


def _fit_values(args):
    if args.target == "G":
        series = counting.genus_count_series(args.p, args.samples - 1, args.cls)
        return [int(v) for v in series]
    residue = args.residue
    if residue is None:
        residue = 1
    if math.gcd(residue, args.p) != 1 or not 0 < residue < args.p:
        raise counting.NotCoprime(f"residue {residue} invalid for p={args.p}")
    return [
        counting.count_containing(args.p, residue + n * args.p, args.cls)
        for n in range(args.samples)
    ]


def _cmd_fit(args) -> int:
    if args.target == "G":
        direction = (1,) * (args.p - 1)
    else:
        residue = args.residue if args.residue is not None else 1
        direction = tuple(1 if i == residue else 0 for i in range(1, args.p))
    predicted = quasi.predict_quasi_period(args.p, direction)
    if args.period == "auto":
        period = None  # smallest divisor of the predicted period that fits
    else:
        period = int(args.period)
    degree = None if args.degree == "auto" else int(args.degree)
    if args.samples is None:
        base = period if period is not None else predicted
        args.samples = base * ((degree if degree is not None else 6) + 2)
    values = _fit_values(args)

    def attempt(n):
        return quasi.fit(values, n, degree)

    if period is not None:
        try:
            qp = attempt(period)
        except quasi.VerificationMismatch as err:
            print(f"fit failed: {err}", file=sys.stderr)
            return 1
    else:
        qp = None
        for n in sorted(d for d in range(1, predicted + 1) if predicted % d == 0):
            try:
                qp = attempt(n)
                break
            except quasi.VerificationMismatch:
                continue
        if qp is None:
            print(f"no divisor of {predicted} yields a consistent fit", file=sys.stderr)
            return 1
    report = quasi.leading_coefficient_report(qp)
    if args.format == "json":
        payload = {
            "period": qp.period,
            "degree": qp.degree,
            "constituents": [[str(c) for c in cons] for cons in qp.constituents],
            "leading": [str(c) for c in report.coefficients],
            "leading_constant": report.constant,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"period: {qp.period}", f"degree: {qp.degree}"]
        for r, cons in enumerate(qp.constituents):
            terms = " + ".join(
                f"{c}" if k == 0 else f"{c}*n^{k}" for k, c in enumerate(cons)
            ) or "0"
            lines.append(f"class {r}: {terms}")
        flag = "constant" if report.constant else "varies"
        lines.append(f"leading: {report.coefficients[0]} ({flag})")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _table_rows(name):
    if name == "genus-small":
        columns = (
            "g", "total_p3", "medim_p3", "symmetric_p3",
            "total_p4", "medim_p4", "symmetric_p4",
        )
        data = {
            p: {
                cls: counting.genus_table(p, 8, cls).values
                for cls in ("all", "medim", "sym")
            }
            for p in (3, 4)
        }
        rows = [
            (
                g,
                data[3]["all"][g], data[3]["medim"][g], data[3]["sym"][g],
                data[4]["all"][g], data[4]["medim"][g], data[4]["sym"][g],
            )
            for g in range(9)
        ]
        return columns, rows
    p, qs = _CONTAINS_Q[name]
    columns = ("q", "total", "medim", "symmetric", "pseudo_symmetric")
    tables = {
        cls: counting.containment_table(p, max(qs), cls).values
        for cls in ("all", "medim", "sym", "psym")
    }
    rows = [
        (q, tables["all"][q], tables["medim"][q], tables["sym"][q], tables["psym"][q])
        for q in qs
    ]
    return columns, rows


def table_text(name: str) -> str:
    columns, rows = _table_rows(name)
    lines = [f"# source: {name}", ",".join(columns)]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> int:
    if args.format == "json":
        columns, rows = _table_rows(args.name)
        payload = {"source": args.name, "rows": [dict(zip(columns, r)) for r in rows]}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(table_text(args.name))
    return 0


def _cmd_seed_tables(args) -> int:
    os.makedirs(args.dir, exist_ok=True)
    for name in TABLE_NAMES:
        target = os.path.join(args.dir, f"{name}.csv")
        with open(target, "w", newline="") as fh:
            fh.write(table_text(name))
        print(f"wrote {target}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsg",
        description="Count and classify numerical semigroups containing a fixed element.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_class=True, with_workers=False):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        if with_class:
            sp.add_argument(
                "--class", dest="cls", choices=CLASS_FILTERS, default="all"
            )
        if with_workers:
            sp.add_argument("--workers", type=int, default=_default_workers())

    sp = sub.add_parser("count", help="count semigroups by genus or by containment")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--genus", help="genus value or range A..B")
    group.add_argument("--contains", help="second element value or range A..B")
    add_common(sp, with_workers=True)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("enumerate", help="list semigroups of a given genus")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--genus", required=True, help="genus value or range A..B")
    add_common(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("paths", help="admissible staircase paths of a (p, q) system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--verify-recursions", action="store_true")
    sp.add_argument("--q-max", type=int, help="upper q for --verify-recursions")
    add_common(sp, with_class=False)
    sp.set_defaults(func=_cmd_paths)

    sp = sub.add_parser("edges", help="edge generators of the recession cone")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_edges)

    sp = sub.add_parser("fit", help="fit a counting sequence as a quasi-polynomial")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--target", choices=("G", "N"), required=True,
                    help="G: counts by genus; N: counts by containment")
    sp.add_argument("--residue", type=int, help="residue of q mod p for target N")
    sp.add_argument("--period", default="auto")
    sp.add_argument("--degree", default="auto")
    sp.add_argument("--samples", type=int)
    add_common(sp)
    sp.set_defaults(func=_cmd_fit)

    sp = sub.add_parser("table", help="print one of the reference tables")
    sp.add_argument("name", choices=TABLE_NAMES)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("seed-tables", help="regenerate the golden table files")
    sp.add_argument("--dir", default="tables")
    sp.set_defaults(func=_cmd_seed_tables)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "paths":
        if args.verify_recursions and args.q_max is None and args.q is None:
            parser.error("--verify-recursions needs --q-max (or --q)")
        if not args.verify_recursions and args.q is None:
            parser.error("paths requires --q unless --verify-recursions is given")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
