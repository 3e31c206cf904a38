"""Command-line front end.

Subcommands: construct, analyze, decode, puncture, bounds, compare-dg,
charsum, next-prime-power. Primary outputs are deterministic (JSON with
sorted keys, or CSV); anything time-dependent goes to the optional sidecar
log. Exit codes: 0 success, 2 bad input or precondition, 3 resource cap
exceeded, 4 internal invariant violation.
"""

import argparse
import csv
import json
import os
import sys
import time

from . import analysis, bounds, charsum
from .algebra import (
    FiniteField,
    enumerate_monic_irreducibles,
    next_prime_power_gt,
    prime_power_decompose,
)
from .errors import NotPrime, ShadowCodeError, TooLarge
from .shadow_code import (
    ERASED,
    ShadowCodeSpec,
    build,
    construct_code,
    erasure_decode,
    load_matrix,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


def _emit(doc, out=None):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field_for(q):
    decomp = prime_power_decompose(q)
    if decomp is None:
        raise NotPrime(f"{q} is not a prime power")
    return FiniteField(*decomp)


def cmd_construct(args):
    if args.epsilon is not None:
        report = construct_code(args.q, args.r, epsilon=args.epsilon)
    else:
        report = construct_code(args.q, args.r, L=args.L)
    if args.matrix_out:
        if args.format == "json":
            report.matrix.save_json(args.matrix_out)
        else:
            report.matrix.save_text(args.matrix_out)
    _emit(report.as_dict(), args.out)
    return EXIT_OK


def cmd_analyze(args):
    G = load_matrix(args.matrix)
    report = analysis.weight_distribution(
        G, cap=args.exhaustive_cap, workers=args.workers
    )
    if args.weights_csv:
        with open(args.weights_csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["weight", "count"])
            for w, c in sorted(report.weight_distribution.items()):
                writer.writerow([w, c])
    _emit(report.as_dict(), args.out)
    return EXIT_OK


def cmd_decode(args):
    G = load_matrix(args.matrix)
    received = [ERASED if c == "?" else int(c) for c in args.received]
    message = erasure_decode(G, received)
    _emit({"message": [int(v) for v in message]}, args.out)
    return EXIT_OK


def cmd_puncture(args):
    G = load_matrix(args.matrix)
    positions = [int(t) for t in args.positions.split(",")] if args.positions else []
    punctured = G.puncture(positions)
    punctured.save_text(args.matrix_out)
    _emit(
        {
            "n": punctured.n,
            "removed": sorted(set(positions)),
            "rank": punctured.rank(),
        },
        args.out,
    )
    return EXIT_OK


def cmd_bounds(args):
    k_range = None
    if args.k_range:
        lo, hi = (int(t) for t in args.k_range.split(":"))
        k_range = range(lo, hi + 1)
    report = bounds.bound_report(args.n, args.d, args.r, k_range=k_range)
    _emit(report.as_dict(), args.out)
    return EXIT_OK


def cmd_compare_dg(args):
    rows = [bounds.compare_dg(m, args.delta, workers=args.workers) for m in args.m]
    writer = csv.writer(sys.stdout)
    header = list(rows[0].as_dict().keys())
    writer.writerow(header)
    for row in rows:
        writer.writerow([row.as_dict()[key] for key in header])
    return EXIT_OK


def cmd_charsum(args):
    writer = csv.writer(sys.stdout)
    writer.writerow(["q", "ell", "max_sum", "ratio_sqrt_q", "argmax_exponents"])
    for q in args.q:
        if args.ell is not None:
            field = _field_for(q)
            polys = enumerate_monic_irreducibles(field, 2, args.ell)
            spec = ShadowCodeSpec(field, args.r, polys)
            result = charsum.max_charsum(spec, workers=args.workers)
            ell = args.ell
            max_sum = result.max_abs
            ratio = result.ratio_sqrt_q
            argmax = "".join(str(e) for e in result.best_exponents)
        else:
            report = charsum.verify_claims(q, mode=args.mode, workers=args.workers)
            ell = report.ell
            max_sum = report.max_abs
            ratio = report.ratio_sqrt_q
            argmax = "".join(str(e) for e in report.best_exponents)
        writer.writerow([q, ell, max_sum, ratio, argmax])
    return EXIT_OK


def cmd_next_prime_power(args):
    value = next_prime_power_gt(args.gt, odd_only=args.odd)
    _emit({"gt": args.gt, "odd_only": args.odd, "value": value}, args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shadowcodes",
        description="Construct and analyze character-sum based linear codes.",
    )
    parser.add_argument("--log-file", help="sidecar log for timing information")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and save its matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--L", type=int)
    p.add_argument("--matrix-out", help="where to write the generator matrix")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="report destination (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="exhaustive metrics of a saved matrix")
    p.add_argument("matrix")
    p.add_argument("--exhaustive-cap", type=int, default=analysis.DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--weights-csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decode", help="erasure-decode a received word")
    p.add_argument("matrix")
    p.add_argument("--received", required=True, help="digits with ? for erasures")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("puncture", help="remove coordinates from a matrix")
    p.add_argument("matrix")
    p.add_argument("--positions", default="", help="comma-separated indices")
    p.add_argument("--matrix-out", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("bounds", help="evaluate classical bounds at (n, d, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--k-range", help="spectral k range, e.g. 1:12")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare-dg", help="race a shadow code against DG codes")
    p.add_argument("--m", type=int, nargs="+", required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_compare_dg)

    p = sub.add_parser("charsum", help="search extreme character sums")
    p.add_argument("--q", type=int, nargs="+", required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--mode", choices=["sum_gt_one", "omega_sqrt"], default="sum_gt_one")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_charsum)

    p = sub.add_parser("next-prime-power", help="least prime power above a value")
    p.add_argument("--gt", type=int, required=True)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_next_prime_power)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except TooLarge as exc:
        _error(exc)
        code = EXIT_CAP
    except (ShadowCodeError, ValueError, OSError) as exc:
        _error(exc)
        code = EXIT_INPUT
    except AssertionError as exc:
        _error(exc)
        code = EXIT_INTERNAL
    if args.log_file:
        with open(args.log_file, "a") as fh:
            fh.write(
                f"{time.strftime('%Y-%m-%dT%H:%M:%S')} {args.command} "
                f"elapsed={time.monotonic() - start:.3f}s exit={code}\n"
            )
    return code


def _error(exc):
    doc = {"error": type(exc).__name__, "message": str(exc)}
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())
