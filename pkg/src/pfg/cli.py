"""Command line interface: ``pfg spectrum``, ``pfg tables --paper``, ``pfg verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from . import golden
from .cache import cached_spectrum
from .errors import InternalConsistencyError, TableInvariantError
from .partitions import format_partition
from .spectra import SpectrumTable
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_MISMATCH = 4
EXIT_SUITE_FAILED = 5


def table_to_csv(table: SpectrumTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "f", "eta", "multiplicity"])
    for e in table.entries:
        writer.writerow([format_partition(e.shape), e.dim, e.eta, e.multiplicity])
    return buf.getvalue()


def table_to_json(table: SpectrumTable) -> str:
    doc = {
        "n": table.n,
        "k": table.k,
        "entries": [
            {
                "lambda": list(e.shape),
                "f": str(e.dim),
                "eta": str(e.eta),
                "multiplicity": str(e.multiplicity),
            }
            for e in table.entries
        ],
    }
    return json.dumps(doc, indent=1) + "\n"


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.n < 2 or not 0 <= args.k < args.n:
        print(f"error: need --n >= 2 and 0 <= --k < --n (got n={args.n}, k={args.k})", file=sys.stderr)
        return EXIT_USAGE
    try:
        table = cached_spectrum(args.n, args.k)
    except (InternalConsistencyError, TableInvariantError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = table_to_csv(table) if args.format == "csv" else table_to_json(table)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    if not args.paper:
        print("error: only the published tables are available; pass --paper", file=sys.stderr)
        return EXIT_USAGE
    for fix in golden.label_corrections():
        print(f"note: n={fix['n']} printed label [{fix['printed']}] read as ({fix['shape']})")
    bad = 0
    for cmp in golden.compare_all():
        status = "ok" if cmp.ok else "MISMATCH"
        print(f"n={cmp.n}: {cmp.checked} eigenvalues compared, {status}")
        for m in cmp.mismatches:
            print(
                f"  ({format_partition(m.shape)}): printed {m.printed}, computed {m.computed}, "
                f"character sum {m.direct}; trace with printed value {m.trace_if_printed}"
            )
        for lam in cmp.missing:
            print(f"  ({format_partition(lam)}): not in printed table")
        for lam in cmp.unexpected:
            print(f"  ({format_partition(lam)}): printed but not a shape of this table")
        bad += len(cmp.mismatches) + len(cmp.missing) + len(cmp.unexpected)
    print(f"{bad} discrepancies")
    return EXIT_OK if bad == 0 else EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        res = run_suite(name, args.max_n)
        for note in res.notes:
            print(f"  {note}")
        for failure in res.failures[:20]:
            print(f"  FAIL {failure}")
        print(res.summary())
        failed |= not res.passed
    return EXIT_SUITE_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfg", description="Spectra of the k-point fixing graphs F(n, k)."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="full spectrum of F(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tables", help="compare with the published F(n, 1) tables")
    p.add_argument("--paper", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
