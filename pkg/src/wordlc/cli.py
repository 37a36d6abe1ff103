"""Command-line front end.

Exit codes: 0 ok, 1 verify failure, 2 parse / usage error, 3 insufficient
data, 4 not periodic, 5 exhausted, 6 singular leading coefficient.

Under ``--format kv`` every report is ``key=value`` lines in a fixed order:

  lc:      lc, minpoly
  wlc:     lc, minpoly, n, divisible, block_rank, nontrivial, wlc, A0 .. A{d-1}
  invert:  x, verified, route, terms, lc, nontrivial
  verify:  one <check>=<pass|fail|skip> line per check, in run order
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import formats
from .checks import FAIL, run_checks
from .dynamics import (
    MAX_TABLE_SIZE,
    SplitMix64,
    apply_map,
    decode,
    detect_period,
    draw_map,
    iterate_map,
    local_invert,
)
from .errors import (
    DimensionMismatch,
    Exhausted,
    FormatError,
    InsufficientData,
    NotPeriodic,
    SingularLeadingCoefficient,
    WordLCError,
    ZeroConstantTerm,
)
from .field import check_modulus
from .matpoly import Side, euclid_divide
from .wlc import compute_wlc

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DATA = 0, 1, 2, 3
EXIT_NOT_PERIODIC, EXIT_EXHAUSTED, EXIT_SINGULAR = 4, 5, 6


def _csv(values) -> str:
    return ",".join(str(int(a)) for a in np.asarray(values).reshape(-1))


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _opt(x) -> str:
    return "none" if x is None else str(x)


def _parse_point(text: str) -> np.ndarray:
    try:
        return np.array([int(t) for t in text.split(",")], dtype=np.int64)
    except ValueError:
        raise FormatError(f"cannot parse point {text!r}") from None


# -- commands ---------------------------------------------------------------


def cmd_lc(args, out) -> int:
    v = formats.read_sequence(args.seqfile)
    r = compute_wlc(v)
    print(f"lc={r.lc}", file=out)
    print(f"minpoly={_csv(r.scalar_minpoly.descending())}", file=out)
    if args.format == "text":
        print(f"# m(X) = {r.scalar_minpoly}", file=out)
    return EXIT_OK


def cmd_wlc(args, out) -> int:
    v = formats.read_sequence(args.seqfile)
    r = compute_wlc(v)
    if args.format == "kv":
        pairs = [
            ("lc", r.lc),
            ("minpoly", _csv(r.scalar_minpoly.descending())),
            ("n", r.n),
            ("divisible", _bool(r.divisible)),
            ("block_rank", _opt(r.block_rank)),
            ("nontrivial", _bool(r.nontrivial)),
            ("wlc", _opt(r.wlc)),
        ]
        pairs += [(f"A{i}", _csv(a)) for i, a in enumerate(r.coefficient_blocks)]
        for k, val in pairs:
            print(f"{k}={val}", file=out)
        return EXIT_OK
    print(f"LC          {r.lc}", file=out)
    print(f"m(X)        {r.scalar_minpoly}", file=out)
    print(f"n           {r.n}", file=out)
    print(f"divisible   {_bool(r.divisible)}", file=out)
    print(f"block rank  {_opt(r.block_rank)}", file=out)
    print(f"nontrivial  {_bool(r.nontrivial)}", file=out)
    if r.nontrivial:
        print(f"WLC         {r.wlc}", file=out)
        print(f"M(X)        X^{r.wlc} I + sum A_i X^i", file=out)
        for i, a in enumerate(r.coefficient_blocks):
            print(f"A{i} =", file=out)
            for row in a:
                print("  " + " ".join(str(int(x)) for x in row), file=out)
    else:
        print("M(X)        m(X) I", file=out)
    for note in r.diagnostics:
        print(f"note: {note}", file=out)
    return EXIT_OK


def cmd_invert(args, out) -> int:
    f = formats.read_map(args.mapfile)
    y = _parse_point(args.y)
    res = local_invert(f, y, max_terms=args.max_terms)
    verified = np.array_equal(apply_map(f, res.x), y % f.p)
    pairs = [
        ("x", _csv(res.x)),
        ("verified", _bool(verified)),
        ("route", res.route),
        ("terms", res.terms),
        ("lc", res.report.lc),
        ("nontrivial", _bool(res.report.nontrivial)),
    ]
    for k, val in pairs:
        print(f"{k}={val}", file=out)
    return EXIT_OK if verified else EXIT_EXHAUSTED


def cmd_iterate(args, out) -> int:
    f = formats.read_map(args.mapfile)
    y = _parse_point(args.y)
    if args.count < 1:
        raise FormatError("--count must be >= 1")
    v = iterate_map(f, y, args.count)
    if args.out:
        try:
            formats.write_sequence(args.out, v)
        except OSError as exc:
            raise FormatError(str(exc)) from None
    else:
        out.write(formats.format_sequence(v))
    return EXIT_OK


def cmd_divide(args, out) -> int:
    P = formats.read_mpoly(args.dividend)
    D = formats.read_mpoly(args.divisor)
    if (P.p, P.n) != (D.p, D.n):
        raise FormatError("dividend and divisor differ in field or size")
    Q, R = euclid_divide(P, D, Side(args.side))
    print("# quotient", file=out)
    out.write(formats.format_mpoly(Q))
    print("# remainder", file=out)
    out.write(formats.format_mpoly(R))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    v = formats.read_sequence(args.seqfile, check_period=False)
    if v.period is None:
        raise FormatError("verify needs a sequence file with 'period <N>'")
    checks = run_checks(v)
    for c in checks:
        if args.format == "kv" or not c.detail:
            print(f"{c.name}={c.status}", file=out)
        else:
            print(f"{c.name}={c.status}  # {c.detail}", file=out)
    return EXIT_VERIFY if any(c.status == FAIL for c in checks) else EXIT_OK


def bench_trial(p: int, n: int, seed: int, permutation: bool, max_terms: int) -> dict:
    """One benchmark trial; all randomness comes from SplitMix64(seed)."""
    rng = SplitMix64(seed)
    f = draw_map(rng, p, n, permutation)
    y = decode(rng.below(p**n), p, n)
    row = dict(seed=seed, period="-", lc="-", wlc_nontrivial="-", wlc="-", inverse_verified="false")
    # every orbit in a space of p^n points closes within p^n steps
    info = detect_period(f, y, p**n)
    row["period"] = info.period
    try:
        res = local_invert(f, y, max_terms=max_terms)
    except WordLCError:
        # LC <= preperiod + period, so this many terms fix the recurrence
        count = min(max_terms, 2 * (info.preperiod + info.period) + 2)
        try:
            r = compute_wlc(iterate_map(f, y, count))
        except WordLCError:
            return row
    else:
        r = res.report
        row["inverse_verified"] = _bool(np.array_equal(apply_map(f, res.x), y))
    row["lc"] = r.lc
    row["wlc_nontrivial"] = _bool(r.nontrivial)
    row["wlc"] = _opt(r.wlc)
    return row


BENCH_FIELDS = ("seed", "period", "lc", "wlc_nontrivial", "wlc", "inverse_verified")


def cmd_bench(args, out) -> int:
    try:
        p = check_modulus(args.field)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if args.dim < 1 or args.trials < 0 or args.max_terms < 4:
        raise FormatError("need --dim >= 1, --trials >= 0, --max-terms >= 4")
    if p**args.dim > MAX_TABLE_SIZE:
        raise FormatError(f"{p}^{args.dim} exceeds {MAX_TABLE_SIZE} points")
    print(",".join(BENCH_FIELDS), file=out)
    verified = nontrivial = 0
    for t in range(args.trials):
        row = bench_trial(p, args.dim, args.seed + t, args.permutation, args.max_terms)
        verified += row["inverse_verified"] == "true"
        nontrivial += row["wlc_nontrivial"] == "true"
        print(",".join(str(row[k]) for k in BENCH_FIELDS), file=out)
    denom = max(args.trials, 1)
    print(
        f"# summary trials={args.trials} verified={verified} "
        f"verified_rate={verified / denom:.4f} nontrivial={nontrivial} "
        f"nontrivial_rate={nontrivial / denom:.4f}",
        file=out,
    )
    return EXIT_OK


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wordlc",
        description="Linear and word linear complexity of vector sequences over GF(p).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def with_format(sp):
        sp.add_argument("--format", choices=("text", "kv"), default="text")
        return sp

    sp = with_format(sub.add_parser("lc", help="scalar minimal polynomial / LC"))
    sp.add_argument("seqfile")
    sp.set_defaults(func=cmd_lc)

    sp = with_format(sub.add_parser("wlc", help="matrix minimal polynomial / WLC"))
    sp.add_argument("seqfile")
    sp.set_defaults(func=cmd_wlc)

    sp = sub.add_parser("invert", help="local inverse of a map at y")
    sp.add_argument("mapfile")
    sp.add_argument("--y", required=True, help="comma-separated point")
    sp.add_argument("--max-terms", type=int, default=4096)
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("iterate", help="write the orbit of y as a sequence file")
    sp.add_argument("mapfile")
    sp.add_argument("--y", required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_iterate)

    sp = sub.add_parser("divide", help="Euclidean division of matrix polynomials")
    sp.add_argument("--dividend", required=True)
    sp.add_argument("--divisor", required=True)
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp.set_defaults(func=cmd_divide)

    sp = with_format(sub.add_parser("verify", help="run structural checks on a periodic sequence"))
    sp.add_argument("seqfile")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="local inversion on seeded random maps")
    sp.add_argument("--field", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--permutation", action="store_true")
    sp.add_argument("--max-terms", type=int, default=4096)
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (FormatError, DimensionMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotPeriodic, ZeroConstantTerm) as exc:
        print(f"error: not periodic: {exc}", file=sys.stderr)
        return EXIT_NOT_PERIODIC
    except Exhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except SingularLeadingCoefficient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (InsufficientData, WordLCError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
