"""Command-line front end.

Subcommands: pmf, cdf, moment, sample, error-sweep, bench. Tabular output is
CSV with a header row, "\\n" line endings and computed floats printed with
17 significant digits. Exit status is 0 on success, 2 on invalid arguments and 1
on anything unexpected.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
import time

import numpy as np

from .analysis import SweepGrid, run_sweep
from .approx import DEFAULT_ALPHA_GUARD, DEFAULT_K, ApproxMethod, Kind, approx_sum
from .core import ZipfParams, power_sum
from .dist import TruncatedZeta
from .errors import ZipfError

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return format(x, ".17g")


def parse_ranks(text: str, n: int) -> list[int]:
    """``"1-4,7,10-12"`` -> ``[1, 2, 3, 4, 7, 10, 11, 12]``; ranges are inclusive."""
    ranks = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"empty item in rank list {text!r}")
        lo, sep, hi = part.partition("-")
        try:
            a = int(lo)
            b = int(hi) if sep else a
        except ValueError:
            raise UsageError(f"bad rank item {part!r}") from None
        if a > b:
            raise UsageError(f"descending rank range {part!r}")
        if a < 1 or b > n:
            raise UsageError(f"ranks {part!r} fall outside [1, {n}]")
        ranks.extend(range(a, b + 1))
    return ranks


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None
    return vals


def parse_methods(text: str, ks: list[int]) -> list[ApproxMethod]:
    out = []
    for name in text.split(","):
        try:
            kind = Kind(name.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in Kind)
            raise UsageError(f"unknown method {name!r} (choose from {choices})") from None
        if kind is Kind.TRAPEZOIDAL:
            out.extend(ApproxMethod(kind, k) for k in ks)
        else:
            out.append(ApproxMethod(kind))
    return out


def _common(p: argparse.ArgumentParser, *, method=True, n_required=True):
    p.add_argument("--alpha", type=float, default=1.0, help="Zipf exponent (default 1.0)")
    p.add_argument("--n", type=int, required=n_required, help="number of species")
    if method:
        p.add_argument("--method", default="exact",
                       choices=[k.value for k in Kind], help="normalizer (default exact)")
    p.add_argument("--k", default=str(DEFAULT_K),
                   help="trapezoidal head length (default 2); error-sweep accepts a comma list")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--alpha-guard", type=float, default=DEFAULT_ALPHA_GUARD,
                   help="half-width of the singular band around alpha=1")
    p.add_argument("--allow-alpha-one", action="store_true",
                   help="use the alpha->1 limit inside the guard band instead of failing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trunczeta",
        description="Truncated Zeta (Zipf) distribution with closed-form normalizers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pmf", help="probability of selected ranks")
    _common(p)
    p.add_argument("--ranks", default="1", help="ranks, e.g. 1-4,7 (default 1)")

    p = sub.add_parser("cdf", help="cumulative probability of selected ranks")
    _common(p)
    p.add_argument("--ranks", default="1", help="ranks, e.g. 1-4,7 (default 1)")

    p = sub.add_parser("moment", help="raw moment E[X^m]")
    _common(p)
    p.add_argument("--m", type=int, default=1, help="moment order (default 1)")

    p = sub.add_parser("sample", help="draw ranks from the exact distribution")
    _common(p, method=False)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("error-sweep", help="relative error of the approximations over a grid")
    _common(p, method=False, n_required=False)
    p.add_argument("--alpha-min", type=float, default=0.1)
    p.add_argument("--alpha-max", type=float, default=2.0)
    p.add_argument("--alpha-step", type=float, default=0.01)
    p.add_argument("--n-list", default="100,1000,10000")
    p.add_argument("--methods", default="integral,avg-integral,trapezoidal")
    p.add_argument("--guard-exclusion", type=float, default=0.05)

    p = sub.add_parser("bench", help="mean time per normalizer evaluation")
    _common(p, method=False)
    p.add_argument("--methods", default="exact,integral,avg-integral,trapezoidal")
    p.add_argument("--iterations", type=int, default=100)
    return parser


def _single_k(args) -> int:
    ks = parse_int_list(args.k, "--k")
    if len(ks) != 1:
        raise UsageError("--k takes a single integer for this command")
    return ks[0]


def _setup(args):
    if not args.alpha_guard >= 0:
        raise UsageError("--alpha-guard must be >= 0")
    params = ZipfParams(args.alpha, args.n)
    method = ApproxMethod.parse(args.method, _single_k(args))
    opts = dict(alpha_guard=args.alpha_guard, allow_alpha_one=args.allow_alpha_one)
    # evaluate once up front so guard/k errors surface before any output
    norm = approx_sum(params, method, **opts)
    return params, method, norm


def cmd_pmf(args) -> list[str]:
    params, method, norm = _setup(args)
    ranks = parse_ranks(args.ranks, params.n)
    lines = ["rank,pmf"]
    lines += [f"{r},{fmt(r ** -params.alpha / norm)}" for r in ranks]
    return lines


def cmd_cdf(args) -> list[str]:
    params, method, norm = _setup(args)
    ranks = parse_ranks(args.ranks, params.n)
    lines = ["rank,cdf"]
    if method.kind is Kind.EXACT:
        d = TruncatedZeta.from_params(params)
        lines += [f"{r},{fmt(d.cdf(r))}" for r in ranks]
    else:
        lines += [f"{r},{fmt(power_sum(r, params.alpha) / norm)}" for r in ranks]
    return lines


def cmd_moment(args) -> list[str]:
    params, method, norm = _setup(args)
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    value = power_sum(params.n, params.alpha, args.m) / norm
    return ["m,moment", f"{args.m},{fmt(value)}"]


def cmd_sample(args) -> list[str]:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    if args.seed < 0 or args.seed >= 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    d = TruncatedZeta(args.alpha, args.n)
    draws = d.sample(np.random.default_rng(args.seed), size=args.count)
    return [str(r) for r in draws.tolist()]


def sweep_grid_from_args(args) -> SweepGrid:
    n_values = parse_int_list(args.n_list, "--n-list")
    methods = parse_methods(args.methods, parse_int_list(args.k, "--k"))
    grid = SweepGrid(args.alpha_min, args.alpha_max, args.alpha_step,
                     tuple(n_values), tuple(methods), args.guard_exclusion)
    for n in n_values:
        for m in methods:
            if m.k is not None and m.k > n:
                raise UsageError(f"k={m.k} exceeds n={n}")
    return grid


def cmd_error_sweep(args) -> list[str]:
    grid = sweep_grid_from_args(args)
    lines = ["method,k,n,alpha,epsilon"]
    for rec in run_sweep(grid):
        k = "" if rec.k is None else str(rec.k)
        # alpha is a grid label: shortest round-trip repr keeps 0.55 as "0.55"
        lines.append(f"{rec.method.name},{k},{rec.n},{rec.alpha!r},{fmt(rec.epsilon)}")
    return lines


def time_method(params: ZipfParams, method: ApproxMethod, iterations: int, **opts) -> float:
    """Mean wall time of one ``approx_sum`` call in nanoseconds."""
    clock = time.perf_counter_ns
    start = clock()
    for _ in range(iterations):
        approx_sum(params, method, **opts)
    return (clock() - start) / iterations


def cmd_bench(args) -> list[str]:
    if args.iterations < 1:
        raise UsageError("--iterations must be >= 1")
    params = ZipfParams(args.alpha, args.n)
    methods = parse_methods(args.methods, [_single_k(args)])
    opts = dict(alpha_guard=args.alpha_guard, allow_alpha_one=args.allow_alpha_one)
    for m in methods:
        approx_sum(params, m, **opts)
    lines = ["method,n,ns_per_eval"]
    for m in methods:
        ns = time_method(params, m, args.iterations, **opts)
        lines.append(f"{m.name},{params.n},{fmt(ns)}")
    return lines


COMMANDS = {
    "pmf": cmd_pmf,
    "cdf": cmd_cdf,
    "moment": cmd_moment,
    "sample": cmd_sample,
    "error-sweep": cmd_error_sweep,
    "bench": cmd_bench,
}


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as fh:
            yield fh


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        lines = COMMANDS[args.command](args)
    except (UsageError, ZipfError) as exc:
        print(f"trunczeta {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"trunczeta {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        with _open_out(args.out) as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"trunczeta: cannot write output: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
