"""Command-line interface: compress, decompress, info, experiment, sweep.

Exit codes: 0 success, 2 parse/validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import experiments
from .bitstream import U64_MAX
from .cmatrix import CompressedMatrix
from .container import load_matrix, save_matrix
from .efficiency import WORST_CASE_K, measure
from .errors import CcmatrixError
from .genmat import (
    BetaMixture,
    Binomial,
    Constant,
    PoissonTrunc,
    TwoPoint,
    Uniform,
)
from .vlb import DEFAULT_CHECKPOINT_STRIDE


def parse_text_matrix(text: str) -> list[list[int]]:
    """Parse whitespace/comma-separated non-negative integers, one row per line."""
    from .errors import ParseError

    rows: list[list[int]] = []
    for ln, line in enumerate(text.splitlines(), 1):
        fields = line.replace(",", " ").split()
        if not fields:
            continue
        row = []
        for tok in fields:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"line {ln}: {tok!r} is not an integer") from None
            if v < 0 or v > U64_MAX:
                raise ParseError(f"line {ln}: {v} outside unsigned 64-bit range")
            row.append(v)
        rows.append(row)
    if not rows:
        raise ParseError("input contains no matrix rows")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"row {i + 1} has {len(row)} fields, expected {width}")
    return rows


def format_text_matrix(dense) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in dense) + "\n"


def _print_report(m: CompressedMatrix, show_histogram: bool = False) -> None:
    rep = measure(m)
    inner = m.inner
    print(f"method: {rep.method}")
    print(f"rows: {m.rows}")
    print(f"cols: {m.cols}")
    print(f"order: {inner.order}")
    if rep.method == "sm":
        print(f"width: {inner.width}")
    else:
        print(f"k: {inner.k}")
    print(f"bits_allocated: {rep.bits_allocated}")
    print(f"bits_used: {rep.bits_used}")
    print(f"eta: {rep.eta!r}")
    if show_histogram:
        print("histogram:")
        for b, f in rep.histogram.items():
            print(f"  {b}: {f}")


def cmd_compress(args) -> int:
    with open(args.input) as f:
        dense = parse_text_matrix(f.read())
    m = CompressedMatrix.compress(
        dense, method=args.method, order=args.order, checkpoint_stride=args.stride
    )
    save_matrix(m, args.output)
    _print_report(m)
    return 0


def cmd_decompress(args) -> int:
    m = load_matrix(args.input)
    with open(args.output, "w") as f:
        f.write(format_text_matrix(m.decompress()))
    return 0


def cmd_info(args) -> int:
    _print_report(load_matrix(args.input), show_histogram=True)
    return 0


def _build_dist(args):
    name = args.dist
    if name == "uniform":
        return f"uniform({args.a},{args.b})", args.b, Uniform(args.a, args.b)
    if name == "binomial":
        return f"binomial({args.n},{args.p})", args.n, Binomial(args.n, args.p)
    if name == "poisson":
        lam = args.lam
        return f"poisson({lam})", int(lam), PoissonTrunc(lam)
    if name == "beta-mixture":
        d = BetaMixture(args.alpha1, args.beta1, args.alpha2, args.beta2, args.w)
        return f"beta-mixture({args.alpha1},{args.beta1},{args.alpha2},{args.beta2},w={args.w})", 0, d
    if name == "constant":
        return f"constant({args.b})", args.b, Constant(args.b)
    if name == "two-point":
        return f"two-point({args.a},{args.b},p1={args.p})", args.b, TwoPoint(args.a, args.b, args.p)
    raise ValueError(f"unknown distribution {name!r}")


def cmd_experiment(args) -> int:
    if args.table is not None:
        dists = experiments.table_preset(args.table)
    elif args.dist is not None:
        dists = [_build_dist(args)]
    else:
        raise ValueError("experiment needs either --table or --dist")
    k = WORST_CASE_K if args.k_policy == "fixed-7" else None
    rows = experiments.run_experiment(
        dists, sizes=args.size, replicates=args.replicates, seed=args.seed, k=k
    )
    comments = (
        f"sizes={','.join(str(s) for s in args.size)} replicates={args.replicates} "
        f"seed={args.seed} k_policy={args.k_policy}",
    )
    if args.csv:
        experiments.write_csv(args.csv, experiments.EXPERIMENT_FIELDS, rows, comments)
    else:
        _print_rows(experiments.EXPERIMENT_FIELDS, rows, comments)
    return 0


def cmd_sweep(args) -> int:
    if args.fig == 19:
        rows = experiments.constant_bitlen_rows()
        fields = experiments.CONSTANT_FIELDS
        comments = ("constant bit-length comparison, b=1..64, k derived",)
        sm_count = sum(1 for r in rows if float(r["D"]) >= 0)
    else:
        values = list(range(args.lo, args.hi, args.step))
        if not values:
            raise ValueError("empty parameter grid")
        if args.fig == 6:
            rows, sm_count = experiments.run_single_beta_grid(
                values, sample_size=args.size, seed=args.seed
            )
            fields = experiments.SINGLE_BETA_FIELDS
        else:
            rows, sm_count = experiments.run_mixture_grid(
                values, w=args.w, sample_size=args.size, seed=args.seed
            )
            fields = experiments.MIXTURE_FIELDS
        comments = (
            f"grid step={args.step} lo={args.lo} hi={args.hi} axis_values={len(values)} "
            f"points={len(rows)} sample_size={args.size} w={args.w if args.fig != 6 else 0.0} "
            f"seed={args.seed}",
            f"sm_favored={sm_count} share={100 * sm_count / len(rows):.4f}%",
        )
    if args.csv:
        experiments.write_csv(args.csv, fields, rows, comments)
    else:
        _print_rows(fields, rows, comments)
    return 0


def _print_rows(fields, rows, comments=()) -> None:
    for c in comments:
        print(f"# {c}")
    print(",".join(fields))
    for r in rows:
        print(",".join(str(r[f]) for f in fields))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccmatrix", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compress", help="pack a text matrix into a container file")
    c.add_argument("input", help="text matrix (whitespace/comma separated)")
    c.add_argument("output", help="container file to write")
    c.add_argument("--method", choices=("sm", "vlb"), default="sm")
    c.add_argument("--order", choices=("row", "col"), default="row")
    c.add_argument("--stride", type=int, default=DEFAULT_CHECKPOINT_STRIDE,
                   help="checkpoint stride for vlb random access")
    c.set_defaults(func=cmd_compress)

    d = sub.add_parser("decompress", help="expand a container file back to text")
    d.add_argument("input")
    d.add_argument("output")
    d.set_defaults(func=cmd_decompress)

    i = sub.add_parser("info", help="report storage stats of a container file")
    i.add_argument("input")
    i.set_defaults(func=cmd_info)

    e = sub.add_parser("experiment", help="replicated efficiency experiments (CSV)")
    e.add_argument("--table", type=int, choices=(3, 4, 5),
                   help="preset: 3=uniform, 4=binomial, 5=poisson rows")
    e.add_argument("--dist", choices=("uniform", "binomial", "poisson",
                                      "beta-mixture", "constant", "two-point"))
    e.add_argument("--a", type=int, default=1, help="uniform low / two-point b1")
    e.add_argument("--b", type=int, default=64, help="uniform high / constant / two-point b2")
    e.add_argument("--n", type=int, default=64, help="binomial trials")
    e.add_argument("--p", type=float, default=0.5, help="binomial p / two-point p1")
    e.add_argument("--lambda", dest="lam", type=float, default=32.0, help="poisson mean")
    e.add_argument("--alpha1", type=float, default=1.0)
    e.add_argument("--beta1", type=float, default=1.0)
    e.add_argument("--alpha2", type=float, default=1.0)
    e.add_argument("--beta2", type=float, default=1.0)
    e.add_argument("--w", type=float, default=0.5, help="mixture weight of component 1")
    e.add_argument("--size", type=int, nargs="+", default=list(experiments.DEFAULT_SIZES),
                   help="sample sizes, one experiment row each")
    e.add_argument("--replicates", type=int, default=experiments.DEFAULT_REPLICATES)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--k-policy", choices=("fixed-7", "derived"), default="fixed-7")
    e.add_argument("--csv", help="output CSV path (default: stdout)")
    e.set_defaults(func=cmd_experiment)

    s = sub.add_parser("sweep", help="efficiency sweep over a Beta parameter grid (CSV)")
    s.add_argument("--step", type=int, default=experiments.SWEEP_DEFAULT_STEP)
    s.add_argument("--lo", type=int, default=experiments.SWEEP_DEFAULT_LO)
    s.add_argument("--hi", type=int, default=experiments.SWEEP_DEFAULT_HI)
    s.add_argument("--w", type=float, default=0.5)
    s.add_argument("--size", type=int, default=experiments.SWEEP_DEFAULT_SAMPLE,
                   help="bit-length sample size per grid point")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--fig", type=int, choices=(6, 19),
                   help="preset: 6=single-Beta grid, 19=constant bit-length table")
    s.add_argument("--csv", help="output CSV path (default: stdout)")
    s.set_defaults(func=cmd_sweep)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CcmatrixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
