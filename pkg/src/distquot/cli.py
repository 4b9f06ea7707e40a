"""Command-line entry point.

Subcommands: verify (identity sweep for one field and dimension), theorem
(seeded random-set trials of the coverage statements), sharpness (the
degree-2 subfield construction), and nu (profile a point-set file). Reports
are JSON on stdout or --out, with an optional per-row CSV via --csv.

Exit codes: 0 all mandatory checks passed, 1 a check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DistquotError
from .field import ELEMENT_CAP
from .geometry import GRID_CAP
from .harness import ExperimentConfig, exit_code_for, report_json, run, write_csv


def _common(parser: argparse.ArgumentParser, *, needs_size: bool = False) -> None:
    parser.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    parser.add_argument("--ell", type=int, default=1, help="extension degree (q = p^ell)")
    parser.add_argument("--d", type=int, default=2, help="grid dimension (>= 2)")
    parser.add_argument("--seed", type=int, default=0, help="experiment seed")
    parser.add_argument("--trials", type=int, default=20,
                        help="trial count (random sets / random grid functions)")
    parser.add_argument("--samples", type=int, default=10_000,
                        help="sample count for non-exhaustive identity sweeps")
    parser.add_argument("--r", dest="ratio", type=int, default=None,
                        help="restrict ratio checks to this nonzero element")
    parser.add_argument("--threshold-override", type=float, default=None,
                        help="explore below the stated size threshold (informational)")
    parser.add_argument("--cap", dest="grid_cap", type=int, default=GRID_CAP,
                        help="grid cap on q^d")
    parser.add_argument("--element-cap", type=int, default=ELEMENT_CAP,
                        help="cap on field size q")
    parser.add_argument("--out", default=None, help="write the JSON report here")
    parser.add_argument("--csv", default=None, help="also write a flat CSV here")
    if needs_size:
        parser.add_argument("--size", type=int, default=None,
                            help="point-set size (default: the stated threshold)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distquot",
        description="Distance-set and quotient-set checks over finite fields.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    _common(sub.add_parser("verify", help="run the identity suite"))

    theorem = sub.add_parser("theorem", help="seeded random-set coverage trials")
    _common(theorem, needs_size=True)
    theorem.add_argument(
        "--statement",
        choices=("auto", "even", "odd", "distance"),
        default="auto",
        help="which coverage statement to test (auto picks by dimension parity)",
    )

    _common(sub.add_parser("sharpness", help="degree-2 subfield construction"))

    nu = sub.add_parser("nu", help="profile a point-set file")
    _common(nu)
    nu.add_argument("points_file", help="text file: one vector of indices per line")

    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        mode=args.mode,
        p=args.p,
        ell=args.ell,
        d=args.d,
        size=getattr(args, "size", None),
        trials=args.trials,
        seed=args.seed,
        ratio=args.ratio,
        statement=getattr(args, "statement", "auto"),
        threshold_override=args.threshold_override,
        samples=args.samples,
        element_cap=args.element_cap,
        grid_cap=args.grid_cap,
        points_file=getattr(args, "points_file", None),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        report = run(config)
    except DistquotError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = report_json(report)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    if args.csv:
        write_csv(report, args.csv)
    status = exit_code_for(report)
    summary = report.get("summary", {})
    print(
        f"{config.mode}: {'PASS' if status == 0 else 'FAIL'} "
        f"({summary.get('checks_run', 0)} checks)",
        file=sys.stderr,
    )
    return status


if __name__ == "__main__":
    sys.exit(main())
