"""Command-line front end.

Each subcommand evaluates one quantity on a grid and emits CSV to stdout
(or ``--out``); ``--plot`` additionally renders a figure to a file.
Floats are printed with ``repr``, the shortest representation that parses
back to the identical double, so output is byte-reproducible given the
full flag set.

Exit codes: 0 success, 1 internal numeric failure (non-convergence),
2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import convergence, geometry
from .marginal import MarginalDist
from .charfn import charfn_gauss_limit, charfn_hyp
from .sampling import RngStream, SampleMethod, sample_coordinate

__all__ = ["main", "GridSpec"]


class UsageError(Exception):
    """Inconsistent or out-of-range flag values."""


@dataclass(frozen=True)
class GridSpec:
    """Uniform evaluation grid with abscissae lo + i (hi - lo)/(steps - 1)."""

    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise UsageError(f"--lo must be below --hi (got {self.lo} >= {self.hi})")
        if self.steps < 2:
            raise UsageError(f"--steps must be at least 2, got {self.steps}")

    def points(self) -> list:
        span = self.hi - self.lo
        return [self.lo + i * span / (self.steps - 1) for i in range(self.steps)]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _dims(text: str) -> tuple:
    """Parse ``a..b`` (inclusive) or a comma list of dimensions."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise ValueError
            values = tuple(range(lo, hi + 1))
        else:
            values = tuple(int(part) for part in text.split(","))
        if not values or any(v < 1 for v in values):
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'a..b' or a comma list of positive integers, got {text!r}")
    return values


def _fmt(value) -> str:
    return repr(float(value))


def _grid(lo: float, hi: float, steps: int) -> list:
    return GridSpec(lo, hi, steps).points()


def _emit(header: str, rows, out_path) -> None:
    lines = [header]
    lines.extend(rows)
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_pdf(args) -> None:
    xs = _grid(args.lo, args.hi, args.steps)
    dims = args.dims if args.dims else (args.n,)
    tables = [(n, [MarginalDist(n).pdf(x) for x in xs]) for n in dims]
    if args.dims:
        rows = [f"{n},{_fmt(x)},{_fmt(v)}"
                for n, vals in tables for x, v in zip(xs, vals)]
        _emit("n,x,pdf", rows, args.out)
    else:
        n, vals = tables[0]
        _emit("x,pdf", [f"{_fmt(x)},{_fmt(v)}" for x, v in zip(xs, vals)],
              args.out)
    if args.plot:
        from . import plotting
        if len(tables) == 1:
            n, vals = tables[0]
            plotting.save_curves(args.plot, xs, [(f"n={n}", vals)], "x", "pdf")
        else:
            plotting.save_density_surface(
                args.plot, xs, [n for n, _ in tables],
                [v for _, vals in tables for v in vals], "pdf")


def _cmd_cdf(args) -> None:
    xs = _grid(args.lo, args.hi, args.steps)
    dims = args.dims if args.dims else (args.n,)
    tables = [(n, [MarginalDist(n).cdf(x) for x in xs]) for n in dims]
    if args.dims:
        rows = [f"{n},{_fmt(x)},{_fmt(v)}"
                for n, vals in tables for x, v in zip(xs, vals)]
        _emit("n,x,cdf", rows, args.out)
    else:
        n, vals = tables[0]
        _emit("x,cdf", [f"{_fmt(x)},{_fmt(v)}" for x, v in zip(xs, vals)],
              args.out)
    if args.plot:
        from . import plotting
        plotting.save_curves(args.plot, xs,
                             [(f"n={n}", vals) for n, vals in tables],
                             "x", "cdf")


def _cmd_charfn(args) -> None:
    ts = _grid(args.lo, args.hi, args.steps)
    phi = [charfn_hyp(args.n, t) for t in ts]
    gauss = [charfn_gauss_limit(t) for t in ts]
    rows = [f"{_fmt(t)},{_fmt(p)},{_fmt(g)},{_fmt(abs(p - g))}"
            for t, p, g in zip(ts, phi, gauss)]
    _emit("t,phi_n,phi_gauss,abs_err", rows, args.out)
    if args.plot:
        from . import plotting
        plotting.save_charfn(args.plot, ts, phi, gauss, args.n)


def _cmd_volume(args) -> None:
    dims = args.dims if args.dims else (args.n,)
    volumes = [geometry.ball_volume(n) for n in dims]
    logs = [geometry.log_ball_volume(n) for n in dims]
    ratios = [geometry.cube_ratio(n) for n in dims]
    rows = [f"{n},{_fmt(v)},{_fmt(lv)},{_fmt(r)}"
            for n, v, lv, r in zip(dims, volumes, logs, ratios)]
    _emit("n,volume,log_volume,cube_ratio", rows, args.out)
    if args.plot:
        from . import plotting
        plotting.save_volume(args.plot, dims, volumes, ratios)


def _cmd_sample(args) -> None:
    method = SampleMethod(args.method)
    rng = RngStream(args.seed)
    xs = sample_coordinate(args.n, method, args.count, rng)
    if args.bins:
        counts, edges = np.histogram(xs, bins=args.bins, range=(-1.0, 1.0))
        rows = [f"{_fmt(edges[i])},{_fmt(edges[i + 1])},{int(c)}"
                for i, c in enumerate(counts)]
        _emit("bin_lo,bin_hi,count", rows, args.out)
    else:
        _emit("x", [_fmt(x) for x in xs], args.out)
    if args.plot:
        from . import plotting
        plotting.save_sample_hist(args.plot, xs, args.n, MarginalDist(args.n).pdf)


def _cmd_converge(args) -> None:
    report = convergence.build_report(args.dims)
    rows = [f"{n},{_fmt(p)},{_fmt(c)}"
            for n, p, c in zip(report.dims, report.pdf_sup_err,
                               report.cf_sup_err)]
    _emit("n,pdf_sup_err,cf_sup_err", rows, args.out)
    if args.plot:
        from . import plotting
        plotting.save_convergence(args.plot, report.dims, report.pdf_sup_err,
                                  report.cf_sup_err)


def _add_output_flags(sub) -> None:
    sub.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    sub.add_argument("--plot", metavar="PATH", help="also render a figure to this file")


def _add_grid_flags(sub, lo: float, hi: float, steps: int) -> None:
    sub.add_argument("--lo", type=float, default=lo, help=f"grid start (default {lo})")
    sub.add_argument("--hi", type=float, default=hi, help=f"grid end (default {hi})")
    sub.add_argument("--steps", type=_positive_int, default=steps,
                     help=f"grid points (default {steps})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballcoord",
        description="Coordinate law of a uniform random point in the unit n-ball.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("pdf", help="marginal density on a grid")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=_positive_int, help="single dimension")
    which.add_argument("--dims", type=_dims, help="range a..b or comma list")
    _add_grid_flags(p, -1.0, 1.0, 201)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_pdf)

    p = subs.add_parser("cdf", help="marginal CDF on a grid")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=_positive_int, help="single dimension")
    which.add_argument("--dims", type=_dims, help="range a..b or comma list")
    _add_grid_flags(p, -1.0, 1.0, 201)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_cdf)

    p = subs.add_parser("charfn",
                        help="characteristic function of z vs its Gaussian limit")
    p.add_argument("--n", type=_positive_int, required=True)
    _add_grid_flags(p, 0.0, 3.0, 25)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_charfn)

    p = subs.add_parser("volume", help="unit-ball volume and cube ratio")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=_positive_int, help="single dimension")
    which.add_argument("--dims", type=_dims, help="range a..b or comma list")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_volume)

    p = subs.add_parser("sample", help="coordinate samples or histogram counts")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, default=0,
                   help="stream seed (default 0); output is bit-reproducible given it")
    p.add_argument("--method", choices=[m.value for m in SampleMethod],
                   default=SampleMethod.DIR_RADIUS.value)
    p.add_argument("--bins", type=_positive_int,
                   help="emit histogram counts over [-1, 1] instead of raw values")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_sample)

    p = subs.add_parser("converge", help="per-dimension Gaussian-limit report")
    p.add_argument("--dims", type=_dims,
                   default=convergence.DEFAULT_DIMS,
                   help="range a..b or comma list (default 1,2,4,...,256)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_converge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
