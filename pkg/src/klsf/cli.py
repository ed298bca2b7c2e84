"""Command-line interface for sum-free-set computations on cyclic groups.

Subcommands:
  mu         closed-form maximum size, with the per-divisor table
  construct  build a maximum witness set plus its checkable certificate
  verify     check a set literal for sum-freeness (and completeness)
  survey     grid sweep over (n, k, l) emitting CSV, optionally a figure
  ptuples    minimum additive pair counts over m-subsets of a prime group

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 no
nonempty witness exists, 4 instance exceeds an oracle cap.  The env var
KLSF_ORACLE_MAX overrides the exhaustive-search cap that --oracle-max is
checked against.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .construct import middle_set, witness_with_certificate
from .errors import InstanceTooLarge, KlsfError, NoWitness, NotSumFree, OutOfRange
from .formulas import min_additive_pairs, mu_cyclic, mu_prime
from .groups import format_set_literal, parse_set_literal
from .oracle import MAX_SUBSET_SEARCH, min_additive_tuples_bruteforce
from .sumsets import h_fold_sumset, is_complete, is_kl_sumfree
from .survey import build_instances, parse_range, rows_to_csv, run_survey

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_NOWITNESS = 3
EXIT_CAP = 4


def _oracle_cap() -> int:
    """Exhaustive-search cap, overridable through KLSF_ORACLE_MAX."""
    raw = os.environ.get("KLSF_ORACLE_MAX")
    if raw is None:
        return MAX_SUBSET_SEARCH
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"KLSF_ORACLE_MAX must be an integer, got {raw!r}") from None


def cmd_mu(args: argparse.Namespace) -> int:
    report = mu_cyclic(args.n, args.k, args.l)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
        return EXIT_OK
    print(f"mu(Z_{report.n}, {{{report.k},{report.l}}}) = {report.mu}")
    print(f"best divisor: {report.best_divisor}")
    print(f"bounds: {report.lower_bound} <= mu <= {report.upper_bound}")
    print(f"{'d':>6} {'delta':>6} {'remainder':>10} {'interval_max':>13} {'contribution':>13}")
    for row in report.rows:
        print(
            f"{row.d:>6} {row.delta:>6} {row.remainder:>10}"
            f" {row.interval_max:>13} {row.contribution:>13}"
        )
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    witness, report, certificate = witness_with_certificate(args.n, args.k, args.l)
    if args.json:
        doc = {
            "n": report.n,
            "k": report.k,
            "l": report.l,
            "size": len(witness),
            "best_divisor": report.best_divisor,
            "set": list(witness),
            "certificate": certificate.as_dict(),
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(
        f"mu(Z_{report.n}, {{{report.k},{report.l}}}) = {report.mu}"
        f" via divisor {report.best_divisor}"
    )
    print(f"set: {format_set_literal(witness)}")
    cert = certificate.as_dict()
    print(
        f"certificate: C={cert['C']} a={cert['a']} b={cert['b']}"
        f" delta={cert['delta']}"
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    a = parse_set_literal(args.set, args.n)
    if not is_kl_sumfree(a, args.k, args.l):
        overlap = h_fold_sumset(a, args.k).intersection(h_fold_sumset(a, args.l))
        violation = next(iter(overlap))
        print(f"NOT SUMFREE violation={violation}")
        return EXIT_VERIFY
    if args.complete:
        word = "COMPLETE" if is_complete(a, args.k, args.l) else "INCOMPLETE"
        print(f"SUMFREE {word}")
    else:
        print("SUMFREE")
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    n_range = parse_range(args.n_range)
    k_range = parse_range(args.k_range)
    l_range = parse_range(args.l_range)
    if not build_instances(n_range, k_range, l_range):
        print("error: empty instance grid (no points with k > l)", file=sys.stderr)
        return EXIT_USAGE
    rows = run_survey(
        n_range,
        k_range,
        l_range,
        oracle_max=args.oracle_max,
        workers=args.workers,
        hard_cap=_oracle_cap(),
    )
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plots import render_survey_figure

        render_survey_figure(rows, args.plot)
    bad = [r for r in rows if not r.agree]
    if bad:
        first = bad[0]
        print(
            f"error: {len(bad)} rows disagree, first at"
            f" n={first.n} k={first.k} l={first.l}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def cmd_ptuples(args: argparse.Namespace) -> int:
    value = min_additive_pairs(args.p, args.m)
    mid = middle_set(args.p, args.m)
    print(f"p={args.p} m={args.m}")
    print(f"min additive pairs (formula): {value}")
    print(f"middle set: {format_set_literal(mid)}")
    if not args.oracle:
        return EXIT_OK
    result = min_additive_tuples_bruteforce(args.p, 2, args.m)
    print(f"oracle minimum: {result.optimum}")
    print(f"minimizers: {result.witness_count}")
    threshold = mu_prime(args.p, 2, 1)
    dilations_ok = True
    if args.m > threshold:
        dilation_masks = {mid.dilate(u).mask for u in range(1, args.p)}
        dilations_ok = all(w.mask in dilation_masks for w in result.witnesses)
        print(
            "all minimizers are unit dilations of the middle set:"
            f" {'true' if dilations_ok else 'false'}"
        )
    else:
        print(
            "all minimizers are unit dilations of the middle set:"
            " n/a (at or below the sum-free threshold)"
        )
    if result.optimum != value or not dilations_ok:
        print(
            f"error: oracle disagrees with formula at p={args.p} m={args.m}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klsf",
        description="Maximum (k,l)-sum-free sets in cyclic groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="closed-form maximum size over Z_n")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("construct", help="build a maximum witness with certificate")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--json", action="store_true", help="emit the witness as JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a set literal for sum-freeness")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("set", help="set literal, e.g. [1,2]")
    p.add_argument(
        "--complete",
        action="store_true",
        help="also report whether the sumsets cover the whole group",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="grid sweep emitting CSV")
    p.add_argument("n_range", help="inclusive range A..B or a single N")
    p.add_argument("k_range", help="inclusive range A..B or a single K")
    p.add_argument("l_range", help="inclusive range A..B or a single L")
    p.add_argument(
        "--oracle-max",
        type=int,
        default=0,
        metavar="N",
        help="run the exhaustive search for instances with n <= N",
    )
    p.add_argument("--out", metavar="FILE.csv", help="write CSV here instead of stdout")
    p.add_argument(
        "--workers", type=int, default=1, metavar="W", help="parallel workers"
    )
    p.add_argument(
        "--plot", metavar="FILE.png", help="also render a figure of the sweep"
    )
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser(
        "ptuples", help="minimum additive pair counts over m-subsets mod a prime"
    )
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also run the exhaustive scan and the minimizer classification",
    )
    p.set_defaults(func=cmd_ptuples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except NoWitness as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOWITNESS
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotSumFree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (OutOfRange, KlsfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
