"""Command-line front end.

Subcommands::

    fgur unruh-scan   [--r-min --r-max --steps --ql Q [Q ...] --mcs --grid-n]
    fgur cavity-scan  [--u-min --u-max --steps --h --k --s S [S ...] --f-minus-prefactor]
    fgur mcs          [--scenario {unruh,cavity} --pair --r --ql --h --k --s --u --grid-n]
    fgur oracle-check [--grid --tolerance --ordering]

Every subcommand accepts ``--out PATH`` (CSV; stdout when omitted) and
``--config PATH``, a ``key=value`` file whose keys are the flag names without
leading dashes.  Flags given on the command line win over the file.

Exit codes: 0 success, 1 usage error, 2 oracle mismatch, 3 I/O error.
"""

import argparse
import math
import sys

from fgur import fock, optimizer, scans
from fgur.output import csv_text, emit_csv, emit_svg

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser():
    parser = _Parser(prog="fgur", description="Fine-grained uncertainty bounds for accelerated observers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--config", help="key=value file with default flag values")
        p.add_argument("--out", help="CSV output path (default: stdout)")

    p = sub.add_parser("unruh-scan", help="bounds versus the acceleration parameter r")
    common(p)
    p.add_argument("--r-min", type=float, default=0.0)
    p.add_argument("--r-max", type=float, default=math.pi / 4)
    p.add_argument("--steps", type=int, default=scans.DEFAULT_R_STEPS)
    p.add_argument("--ql", type=float, nargs="+", default=[0.0], help="one curve family per value")
    p.add_argument("--mcs", action="store_true", help="also maximise numerically at every r")
    p.add_argument("--grid-n", type=int, default=optimizer.DEFAULT_GRID_N)
    p.add_argument("--svg")

    p = sub.add_parser("cavity-scan", help="cavity bounds versus acceleration duration u")
    common(p)
    p.add_argument("--u-min", type=float, default=0.0)
    p.add_argument("--u-max", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=scans.DEFAULT_U_STEPS)
    p.add_argument("--h", type=float, default=0.1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--s", type=float, nargs="+", default=[0.0], help="one curve family per value")
    p.add_argument("--f-minus-prefactor", type=int, choices=(16, 8), default=16)
    p.add_argument("--svg")

    p = sub.add_parser("mcs", help="maximally certain state and gap to the closed-form bound")
    common(p)
    p.add_argument("--scenario", choices=("unruh", "cavity"), default="unruh")
    p.add_argument("--pair", choices=("00", "01", "10", "11"), default="00")
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--ql", type=float, default=0.0)
    p.add_argument("--h", type=float, default=0.1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--u", type=float, default=0.5)
    p.add_argument("--grid-n", type=int, default=optimizer.DEFAULT_GRID_N)
    p.add_argument("--f-minus-prefactor", type=int, choices=(16, 8), default=16)

    p = sub.add_parser("oracle-check", help="closed forms versus the brute-force Fock pipeline")
    common(p)
    p.add_argument("--grid", type=int, default=5, help="points per parameter")
    p.add_argument("--tolerance", type=float, default=scans.ORACLE_TOLERANCE)
    p.add_argument("--ordering", choices=[o.value for o in fock.Ordering], default=fock.Ordering.PHYSICAL.value,
                   help="'slot' skips the physical reordering (negative control)")
    return parser


def read_config(path):
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _subparser(parser, command):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[command]
    raise KeyError(command)


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.config:
        return args
    sp = _subparser(parser, args.command)
    actions = {a.dest: a for a in sp._actions}
    defaults = {}
    for key, raw in read_config(args.config).items():
        if key not in actions or key in ("config", "help"):
            raise UsageError(f"unknown key {key!r} in {args.config}")
        action = actions[key]
        if action.nargs == 0:
            defaults[key] = raw.lower() in ("1", "true", "yes", "on")
        elif action.nargs in ("+", "*"):
            defaults[key] = [action.type(v) for v in raw.replace(",", " ").split()]
        else:
            defaults[key] = action.type(raw) if action.type else raw
        if action.choices is not None and defaults[key] not in action.choices:
            raise UsageError(f"invalid value {raw!r} for {key} in {args.config}")
    sp.set_defaults(**defaults)
    return parser.parse_args(argv)


def _spec(args):
    if args.command == "unruh-scan":
        return scans.ScanSpec(
            scans.ScanMode.UNRUH,
            ranges={"r": (args.r_min, args.r_max, args.steps)},
            fixed={"ql": tuple(args.ql)},
            options={"mcs": args.mcs, "grid_n": args.grid_n},
        )
    if args.command == "cavity-scan":
        return scans.ScanSpec(
            scans.ScanMode.CAVITY,
            ranges={"u": (args.u_min, args.u_max, args.steps)},
            fixed={"h": args.h, "k": args.k, "s": tuple(args.s)},
            options={"f_minus_prefactor": args.f_minus_prefactor},
        )
    if args.command == "mcs":
        return scans.ScanSpec(
            scans.ScanMode.MCS,
            fixed={"pair": args.pair, "r": args.r, "ql": args.ql, "h": args.h, "k": args.k, "s": args.s, "u": args.u},
            options={"scenario": args.scenario, "grid_n": args.grid_n, "f_minus_prefactor": args.f_minus_prefactor},
        )
    return scans.ScanSpec(
        scans.ScanMode.ORACLE,
        options={"grid": args.grid, "tolerance": args.tolerance, "ordering": fock.Ordering(args.ordering)},
    )


def _write_table(table, args, out):
    if args.out:
        emit_csv(table, args.out)
    else:
        out.write(csv_text(table))
    if getattr(args, "svg", None):
        emit_svg(table, args.svg)


def run(args, out=sys.stdout):
    spec = _spec(args)
    if spec.mode is scans.ScanMode.ORACLE:
        report = scans.run_oracle_check(spec)
        text = "\n".join(report.lines()) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        out.write(text)
        return EXIT_OK if report.passed else EXIT_MISMATCH
    if spec.mode is scans.ScanMode.MCS:
        table, res = scans.run_mcs(spec)
        if args.out:
            emit_csv(table, args.out)
        for name, value in zip(table.columns, table.rows[0]):
            out.write(f"{name:>16}: {value}\n")
        for note in res.notes:
            out.write(f"note: {note}\n")
        return EXIT_OK
    table = scans.run_unruh_scan(spec) if spec.mode is scans.ScanMode.UNRUH else scans.run_cavity_scan(spec)
    _write_table(table, args, out)
    return EXIT_OK


def main(argv=None):
    try:
        args = parse_args(sys.argv[1:] if argv is None else argv)
        return run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"fgur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fgur: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
