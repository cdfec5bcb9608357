"""Command line front end; see ``gorenstein-families --help``."""

from __future__ import annotations

import argparse
import sys

from .errors import SchemaError, InvalidDegreeData, WrongMu
from .report import emit, parse_input, run

EXIT_OK = 0
EXIT_ENTRY_ERRORS = 1  # the batch ran but some s-entries recorded errors
EXIT_SCHEMA = 2
EXIT_MATH = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gorenstein-families",
        description="Family dimensions and resolutions of Gorenstein quotients of a codimension two CM algebra.",
    )
    p.add_argument("input", help="JSON job file, or - for stdin")
    p.add_argument("-f", "--format", choices=("text", "json"), default="text")
    p.add_argument("--s-range", nargs=2, type=int, metavar=("LO", "HI"), help="override the job's s or s-range")
    p.add_argument("--assume-ext2-zero", action=argparse.BooleanOptionalAction, default=None,
                   help="treat 0ext^2(N_B,N_B) as zero (NB, small s)")
    p.add_argument("--char-not-2", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--lci-outside-codim", type=int, default=None, metavar="K")
    p.add_argument("-j", "--jobs", type=int, default=1, help="worker threads over the s-range")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        job = parse_input(text)
        if args.s_range and args.s_range[0] > args.s_range[1]:
            raise SchemaError(f"--s-range: empty range {args.s_range}")
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (InvalidDegreeData, WrongMu) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH
    job = job.with_overrides(
        s_range=args.s_range,
        assume_ext2_zero=args.assume_ext2_zero,
        char_not_2=args.char_not_2,
        lci_outside_codim=args.lci_outside_codim,
    )
    report = run(job, workers=args.jobs)
    sys.stdout.write(emit(report, args.format))
    return EXIT_OK if report.ok else EXIT_ENTRY_ERRORS


if __name__ == "__main__":
    sys.exit(main())
