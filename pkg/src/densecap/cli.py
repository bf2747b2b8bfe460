"""Command-line front end: point, sweep, critical-temp, figure.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 I/O error.
"""
import argparse
import os
import sys

from . import figures
from .densecoding import critical_temperature, critical_temperatures, sign_change_intervals
from .errors import DomainError
from .spinmodels import Model, ModelParams
from .sweep import (
    OUTPUTS,
    Axis,
    SpecError,
    SweepSpec,
    evaluate,
    format_float,
    run_sweep,
    to_csv,
    to_json,
)

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


def _model_params(args, need_t=True):
    model = Model(args.model)
    if model is Model.XXZ:
        if args.d is not None:
            raise UsageError("--d applies to the dm model; use --delta")
        aniso = args.delta
        flag = "--delta"
    else:
        if args.delta is not None:
            raise UsageError("--delta applies to the xxz model; use --d")
        aniso = args.d
        flag = "--d"
    if args.j is None or aniso is None:
        raise UsageError(f"--j and {flag} are required")
    if need_t and args.t is None:
        raise UsageError("--t is required")
    return ModelParams(model, args.j, aniso, args.t if need_t else None)


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


def _render(records, fmt):
    return to_json(records) if fmt == "json" else to_csv(records)


def cmd_point(args):
    params = _model_params(args)
    _emit(_render([evaluate(params)], args.format), args.out)


def _parse_axis(text):
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"axis {text!r} must look like NAME:START:STOP:COUNT")
    try:
        return Axis(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise UsageError(f"bad axis {text!r}: {exc}") from None


def cmd_sweep(args):
    model = Model(args.model)
    fixed = {name: val for name, val in (("J", args.j), ("Delta", args.delta), ("D", args.d), ("T", args.t))
             if val is not None}
    axes = tuple(_parse_axis(a) for a in args.axis or ())
    outputs = frozenset(s.strip() for s in args.outputs.split(",")) if args.outputs else OUTPUTS
    try:
        spec = SweepSpec(model, fixed, axes, outputs)
    except SpecError as exc:
        raise UsageError(str(exc)) from None
    _emit(_render(run_sweep(spec), args.format), args.out)


def cmd_critical_temp(args):
    params = _model_params(args, need_t=False)
    if args.all:
        intervals = sign_change_intervals(params, args.t_lo, args.t_hi)
        if not intervals:
            print("none")
        roots = critical_temperatures(params, args.t_lo, args.t_hi)
        for (a, b), root in zip(intervals, roots):
            print(f"{format_float(a)},{format_float(b)},{format_float(root)}")
        return
    root = critical_temperature(params, args.t_lo, args.t_hi)
    print("none" if root is None else format_float(root))


def cmd_figure(args):
    try:
        fig = figures.figure(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = [rec for spec in fig.specs for rec in run_sweep(spec)]
    csv_name = f"fig{fig.number}.csv"
    os.makedirs(args.out_dir, exist_ok=True)
    _emit(to_csv(records), os.path.join(args.out_dir, csv_name))
    _emit(figures.gnuplot_script(fig, csv_name), os.path.join(args.out_dir, f"fig{fig.number}.gp"))
    if args.format == "json":
        _emit(to_json(records), os.path.join(args.out_dir, f"fig{fig.number}.json"))
    print(os.path.join(args.out_dir, csv_name))


def _add_model_flags(p, with_t=True):
    p.add_argument("--model", choices=[m.value for m in Model], required=True)
    p.add_argument("--j", type=float)
    p.add_argument("--delta", type=float, help="XXZ anisotropy")
    p.add_argument("--d", type=float, help="DM interaction strength")
    if with_t:
        p.add_argument("--t", type=float, help="temperature")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="densecap", description="Dense-coding capacity of thermal two-qubit Heisenberg states."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate one parameter point")
    _add_model_flags(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="evaluate a 1-D or 2-D parameter grid")
    _add_model_flags(p)
    p.add_argument("--axis", action="append", metavar="NAME:START:STOP:COUNT",
                   help="swept parameter (J, Delta, D or T); give once or twice")
    p.add_argument("--outputs", help="comma list from chi,entropy,concurrence,valid")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("critical-temp", help="temperature where chi crosses 1")
    _add_model_flags(p, with_t=False)
    p.add_argument("--t-lo", type=float, default=1e-3)
    p.add_argument("--t-hi", type=float, default=20.0)
    p.add_argument("--all", action="store_true", help="list every sign-change interval and its root")
    p.set_defaults(func=cmd_critical_temp)

    p = sub.add_parser("figure", help="write the data grid and gnuplot script of a figure")
    p.add_argument("n", type=int)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="json additionally writes figN.json")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"densecap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"densecap: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"densecap: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
