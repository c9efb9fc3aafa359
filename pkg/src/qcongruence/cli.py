"""Command line front end: ``verify``, ``show`` and ``bench``."""

from __future__ import annotations

import argparse
import sys

from .congruences import THEOREMS, modulus_poly
from .polyring import render
from .primes import is_prime
from .qcombinatorics import gaussian_binomial, gaussian_binomial_mod
from .sweep import (
    ConfigError,
    SweepConfig,
    bench,
    format_bench,
    format_summary,
    parse_range,
    run_sweep,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcongruence",
        description="Exact verification of q-binomial congruences modulo powers of [p]_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    v.add_argument("--p", help="prime or range a..b (not used by q_vandermonde)")
    v.add_argument("--k", default="0..4", help="range a..b (default 0..4)")
    v.add_argument("--s", default="0..4", help="range a..b (default 0..4)")
    v.add_argument("--m", default="1..1", help="range a..b (default 1)")
    v.add_argument("--power", type=int, help="modulus exponent (default: as stated in the theorem)")
    v.add_argument("--strategy", default="auto", choices=("auto", "full", "modular", "both"))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", default="text", choices=("text", "json", "csv"))
    v.add_argument("--output", help="write the report here instead of stdout")
    v.add_argument(
        "--no-timings",
        action="store_true",
        help="zero all timing fields so reports are byte-reproducible",
    )

    sh = sub.add_parser("show", help="print a Gaussian binomial coefficient")
    sh.add_argument("n", type=int)
    sh.add_argument("k", type=int)
    sh.add_argument("--mod-p", type=int, help="reduce modulo [P]_q**E")
    sh.add_argument("--power", type=int, default=1)

    b = sub.add_parser("bench", help="time full vs modular computation mod [p]_q^3")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--reps", type=int, default=1)
    return parser


def _config_from_args(args) -> SweepConfig:
    if args.p is None:
        if args.theorem != "q_vandermonde":
            raise ConfigError("--p is required for this theorem")
        p_range = (0, 0)
    else:
        p_range = parse_range(args.p)
    return SweepConfig(
        theorem=args.theorem,
        p_range=p_range,
        k_range=parse_range(args.k),
        s_range=parse_range(args.s),
        m_range=parse_range(args.m),
        power=args.power,
        strategy=args.strategy,
        jobs=args.jobs,
        format=args.format,
        output=args.output,
        timings=not args.no_timings,
    )


def _cmd_verify(args) -> int:
    config = _config_from_args(args)
    summary = run_sweep(config)
    text = format_summary(summary, config.format)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if summary.total_cases == 0:
        print(
            f"warning: no cases generated ({summary.skipped_nonprime} non-prime, "
            f"{summary.skipped_constraint} outside hypothesis skipped)",
            file=sys.stderr,
        )
    return summary.exit_code


def _cmd_show(args) -> int:
    if args.n < 0:
        raise ConfigError("n must be nonnegative")
    if args.mod_p is None:
        poly = gaussian_binomial(args.n, args.k)
    else:
        if not is_prime(args.mod_p):
            raise ConfigError(f"--mod-p {args.mod_p} is not prime")
        if args.power < 1:
            raise ConfigError("--power must be >= 1")
        poly = gaussian_binomial_mod(args.n, args.k, modulus_poly(args.mod_p, args.power))
    print(render(poly))
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows, straub_ok = bench(args.p, args.k, args.s, args.reps)
    sys.stdout.write(format_bench(args.p, args.k, args.s, rows, straub_ok))
    return EXIT_OK if straub_ok in (None, True) else EXIT_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {"verify": _cmd_verify, "show": _cmd_show, "bench": _cmd_bench}[args.command]
    try:
        return handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
