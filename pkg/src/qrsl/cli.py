"""Command-line front end.

Subcommands: list, verify, expand, count, crosscheck.  Exit codes follow
the usual convention: 0 when everything passed, 1 on a mathematical
mismatch, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import registry
from .identities import (
    IdentitySpec,
    VerificationReport,
    eval_product_side,
    eval_sum_side,
)
from .idl import IdlValidationError, ParseError, parse_idl, parse_prod_expr
from .partitions import (
    SIGNED_CLASSES,
    THEOREMS,
    count_andrews_lewis_9,
    count_gap2,
    count_residues,
    count_s,
    count_signed,
    count_t,
    crosscheck,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QRSL_JOBS", "1")))
    except ValueError:
        return 1


def _emit_records(records: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec.get(c)) for c in columns])
    else:
        widths = {
            c: max(len(c), *(len(_cell(rec.get(c))) for rec in records))
            if records
            else len(c)
            for c in columns
        }
        out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
        for rec in records:
            out.write(
                "  ".join(
                    _cell(rec.get(c)).ljust(widths[c]) for c in columns
                ).rstrip()
                + "\n"
            )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, dict):
        return ";".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _run_ordered(tasks, jobs: int):
    """Evaluate a list of thunks, possibly on a thread pool, returning the
    results in submission order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda t: t(), tasks))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_list(args) -> int:
    records = []
    for spec in registry.builtin_registry():
        records.append({"kind": "identity", "name": spec.name, "label": spec.label})
    for name in registry.BIVARIATE_NAMES:
        records.append(
            {
                "kind": "bivariate",
                "name": name,
                "label": registry.BIVARIATE_LABELS[name],
            }
        )
    for th in THEOREMS.values():
        records.append({"kind": "theorem", "name": th.name, "label": th.description})
    if args.grep:
        records = [
            rec
            for rec in records
            if args.grep in rec["name"] or args.grep in rec["label"]
        ]
    _emit_records(records, ["kind", "name", "label"], args.format, sys.stdout)
    return EXIT_OK


def _verify_tasks(args) -> list:
    tasks = []
    if args.file:
        text = Path(args.file).read_bytes()
        specs = parse_idl(text.decode("ascii", errors="strict"))
        for spec in specs:
            tasks.append(lambda s=spec: [_verify_one(s, args.order)])
        return tasks
    if args.builtin:
        if args.builtin == "all":
            specs = registry.builtin_registry()
        else:
            specs = [registry.builtin(args.builtin)]
        for spec in specs:
            tasks.append(lambda s=spec: [_verify_one(s, args.order)])
    if args.bivariate:
        names = (
            registry.BIVARIATE_NAMES
            if args.bivariate == "all"
            else (args.bivariate,)
        )
        for name in names:
            if name not in registry.BIVARIATE_NAMES:
                raise ValueError(f"unknown bivariate relation {name!r}")
            tasks.append(
                lambda n=name: [registry.verify_bivariate_relation(n, args.order)]
            )
    if args.combination:
        tasks.append(lambda: [registry.verify_combination(args.order)])
    return tasks


def _verify_one(spec: IdentitySpec, order: int) -> VerificationReport:
    from .identities import verify_identity

    return verify_identity(spec, order)


def _cmd_verify(args) -> int:
    if not (args.builtin or args.bivariate or args.combination or args.file):
        print("verify: select --builtin, --bivariate, --combination or --file",
              file=sys.stderr)
        return EXIT_USAGE
    if args.file and (args.builtin or args.bivariate or args.combination):
        print("verify: --file excludes the builtin selectors", file=sys.stderr)
        return EXIT_USAGE
    tasks = _verify_tasks(args)
    reports: list[VerificationReport] = []
    for group in _run_ordered(tasks, args.jobs):
        reports.extend(group)
    records = [rep.to_record() for rep in reports]
    _emit_records(
        records, ["name", "order", "status", "mismatch", "millis"],
        args.format, sys.stdout,
    )
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_MISMATCH


def _expand_target(args):
    if args.expr:
        side = parse_prod_expr(args.expr)
        return eval_product_side(side, args.order)
    if args.file:
        specs = parse_idl(Path(args.file).read_bytes().decode("ascii"))
        match = [s for s in specs if s.name == args.builtin]
        if not match:
            raise ValueError(f"no identity named {args.builtin!r} in {args.file}")
        spec = match[0]
    else:
        spec = registry.builtin(args.builtin)
    if args.side == "rhs":
        return eval_product_side(spec.rhs, args.order)
    return eval_sum_side(spec.lhs, args.order)


def _cmd_expand(args) -> int:
    if not args.expr and not args.builtin:
        print("expand: select --builtin or --expr", file=sys.stderr)
        return EXIT_USAGE
    series = _expand_target(args)
    coeffs = series.coeffs
    if args.format == "jsonl":
        for n, c in enumerate(coeffs):
            sys.stdout.write(json.dumps({"n": n, "coeff": str(c)}) + "\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "coeff"])
        for n, c in enumerate(coeffs):
            writer.writerow([n, str(c)])
    else:
        sys.stdout.write(",".join(str(c) for c in coeffs) + "\n")
    return EXIT_OK


def _cmd_count(args) -> int:
    name = args.cls
    n = args.n if args.n is not None else args.n_flag
    if name in ("s-count", "t-count"):
        if args.l is None or n is None:
            print(f"count {name}: requires --l and a value of n", file=sys.stderr)
            return EXIT_USAGE
        value = (count_s if name == "s-count" else count_t)(args.l, n)
    elif name == "residues":
        if args.mod is None or not args.residues or n is None:
            print("count residues: requires n, --mod and --residues",
                  file=sys.stderr)
            return EXIT_USAGE
        residues = [int(r) for r in args.residues.split(",")]
        value = count_residues(n, args.mod, residues)
    elif name == "rr1-gap2":
        if n is None:
            print("count: missing n", file=sys.stderr)
            return EXIT_USAGE
        value = count_gap2(n, 1)
    elif name == "rr2-gap2-no1":
        if n is None:
            print("count: missing n", file=sys.stderr)
            return EXIT_USAGE
        value = count_gap2(n, 2)
    elif name == "andrews-lewis-9":
        if n is None:
            print("count: missing n", file=sys.stderr)
            return EXIT_USAGE
        value = count_andrews_lewis_9(n)
    elif name in SIGNED_CLASSES:
        if n is None:
            print("count: missing n", file=sys.stderr)
            return EXIT_USAGE
        value = count_signed(name, n, as_stated=args.as_stated)
    else:
        print(f"count: unknown class {name!r}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "jsonl":
        rec = {"class": name, "n": n, "count": value}
        if args.l is not None:
            rec["l"] = args.l
        sys.stdout.write(json.dumps(rec) + "\n")
    else:
        sys.stdout.write(f"{value}\n")
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    names = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    for name in names:
        if name not in THEOREMS:
            print(f"crosscheck: unknown theorem {name!r}", file=sys.stderr)
            return EXIT_USAGE
    tasks = [
        (lambda n=name: crosscheck(n, args.n_max, as_stated=args.as_stated))
        for name in names
    ]
    reports = _run_ordered(tasks, args.jobs)
    if args.format == "jsonl":
        for rep in reports:
            sys.stdout.write(json.dumps(rep.to_record()) + "\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["theorem", "shift", "n", "l", "count", "oracle", "lhs", "rhs", "ok"]
        )
        for rep in reports:
            for row in rep.rows:
                writer.writerow(
                    [
                        rep.theorem,
                        rep.shift,
                        row.n,
                        "" if row.a_deg is None else row.a_deg,
                        row.count,
                        "" if row.oracle is None else row.oracle,
                        str(row.lhs),
                        str(row.rhs),
                        "true" if row.ok else "false",
                    ]
                )
    else:
        for rep in reports:
            sys.stdout.write(
                f"{rep.theorem}: {rep.status} "
                f"(shift d={rep.shift}, n <= {rep.n_max}, {rep.millis} ms)\n"
            )
            for row in rep.rows:
                if args.theorem != "all" or not row.ok:
                    where = f"n={row.n}" if row.a_deg is None else f"l={row.a_deg},n={row.n}"
                    oracle = "" if row.oracle is None else f" oracle={row.oracle}"
                    sys.stdout.write(
                        f"  {where}: count={row.count}{oracle} "
                        f"lhs={row.lhs} rhs={row.rhs} "
                        f"{'ok' if row.ok else 'MISMATCH'}\n"
                    )
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrsl",
        description="verify q-series identities and crosscheck their "
        "partition-counting interpretations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("table", "csv", "jsonl"),
            default="table",
        )

    p_list = sub.add_parser("list", help="list builtin identities and theorems")
    p_list.add_argument("--grep", help="substring filter on name and label")
    add_format(p_list)
    p_list.set_defaults(func=_cmd_list)

    p_verify = sub.add_parser("verify", help="verify identities to an order")
    p_verify.add_argument("--builtin", help="builtin identity name, or 'all'")
    p_verify.add_argument("--bivariate", help="bivariate relation name, or 'all'")
    p_verify.add_argument(
        "--combination",
        action="store_true",
        help="check slater124 + q*slater125 = new36 on both sides",
    )
    p_verify.add_argument("--file", help="IDL file with identities to verify")
    p_verify.add_argument("--order", type=int, default=100)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs())
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_expand = sub.add_parser("expand", help="print coefficients of a side")
    p_expand.add_argument("--builtin", help="identity name (builtin or in --file)")
    p_expand.add_argument("--file", help="IDL file to take the identity from")
    p_expand.add_argument("--side", choices=("lhs", "rhs"), default="lhs")
    p_expand.add_argument("--expr", help="standalone product expression")
    p_expand.add_argument("--order", type=int, default=100)
    add_format(p_expand)
    p_expand.set_defaults(func=_cmd_expand)

    p_count = sub.add_parser("count", help="evaluate one enumerator")
    p_count.add_argument("cls", metavar="class")
    p_count.add_argument("n", nargs="?", type=int, default=None)
    p_count.add_argument("--n", dest="n_flag", type=int, default=None)
    p_count.add_argument("--l", type=int, default=None)
    p_count.add_argument("--mod", type=int, default=None)
    p_count.add_argument("--residues", help="comma-separated residues")
    p_count.add_argument(
        "--as-stated",
        action="store_true",
        help="use the prose variants of the three contested classes",
    )
    add_format(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_cross = sub.add_parser("crosscheck", help="run a combinatorial crosscheck")
    p_cross.add_argument("theorem", help="theorem name, or 'all'")
    p_cross.add_argument("--n-max", type=int, default=24)
    p_cross.add_argument("--jobs", type=int, default=_default_jobs())
    p_cross.add_argument(
        "--as-stated",
        action="store_true",
        help="use the prose variants of the three contested classes",
    )
    add_format(p_cross)
    p_cross.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, IdlValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnicodeDecodeError:
        print("error: input is not ASCII", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
