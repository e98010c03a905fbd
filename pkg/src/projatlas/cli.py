"""Command-line front end.

Exit status is 0 on success, 1 for input errors (syntax, invalid systems,
bad flags or config) and 2 when an analysis stage fails.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from pathlib import Path
from typing import Sequence

from .atlas import analyze, build_atlas, format_number, render_svg, write_report_json
from .atlas.report import char_poly_string
from .errors import AnalysisError, InputError
from .flow import IntegratorConfig
from .poly_core import parse_polynomial
from .poly_core.roots import DEFAULT_ROOT_TOL
from .projective import PlaneSystem, Which, classify_projective_type, parse_system, reduce_system
from .structure import (
    InfiniteFamilyError,
    axis_contact_points,
    classify_cycle_candidate,
    equatorial_contact_points,
    find_invariant_lines,
    finite_equilibria,
    infinite_equilibria,
    symmetry_report,
    verify_invariant_curve,
)

CONFIG_ENV = "PROJATLAS_CONFIG"


class UsageError(InputError):
    """Bad command-line usage."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _point(p, exact=None) -> str:
    if exact is not None:
        return f"({format_number(exact[0])}, {format_number(exact[1])})"
    return f"({format_number(p[0])}, {format_number(p[1])})"


def load_config(path: str | None = None) -> IntegratorConfig:
    """Integrator settings from a key=value file named by $PROJATLAS_CONFIG."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return IntegratorConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read config file {path}: {exc.strerror}") from None
    cp = configparser.ConfigParser(delimiters=("=",), comment_prefixes=("#", ";"))
    try:
        cp.read_string("[integrator]\n" + text)
        return IntegratorConfig.from_mapping(dict(cp["integrator"]))
    except KeyError as exc:
        raise InputError(f"unknown config key {exc.args[0]!r} in {path}") from None
    except (configparser.Error, ValueError) as exc:
        raise InputError(f"bad config file {path}: {exc}") from None


def _read_system(args) -> PlaneSystem:
    if args.system is not None:
        return parse_system(args.system)
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read system file {args.file}: {exc.strerror}") from None
    return parse_system(text)


# subcommands ---------------------------------------------------------------


def cmd_classify(sys_: PlaneSystem, args) -> list[str]:
    report = classify_projective_type(sys_)
    return [f"{report.kind}; W_{report.degree} = {report.w_n.to_string(sys_.names)}"]


def cmd_reduce(sys_: PlaneSystem, args) -> list[str]:
    which = [Which.FIRST, Which.SECOND] if args.chart is None else [Which.FIRST if args.chart == 1 else Which.SECOND]
    return [reduce_system(sys_, w).to_string() for w in which]


def cmd_equilibria(sys_: PlaneSystem, args) -> list[str]:
    out = []
    for e in finite_equilibria(sys_, args.tol):
        line = f"finite {_point(e.point, e.exact)} {e.kind.value}; {char_poly_string(e)} = 0"
        if e.multiplicity > 1:
            line += f"; multiplicity {e.multiplicity}"
        out.append(line)
    for e in infinite_equilibria(sys_, args.tol):
        line = (
            f"infinite {e.direction.describe(sys_.names)} at {e.chart.label} {_point(e.point, e.exact)} "
            f"{e.kind.value} (modulo direction of motion); {char_poly_string(e)} = 0"
        )
        if e.multiplicity > 1:
            line += f"; multiplicity {e.multiplicity}"
        out.append(line)
    return out or ["no equilibria"]


def cmd_contacts(sys_: PlaneSystem, args) -> list[str]:
    out = []
    for axis in ("Ox", "Oy"):
        for c in axis_contact_points(sys_, axis, args.tol):
            out.append(
                f"{axis} {_point(c.point, c.exact)} side {c.describe_side()}; "
                f"case {c.case}, certificate {format_number(c.certificate)}"
            )
    for c in equatorial_contact_points(sys_, args.tol):
        out.append(
            f"equator {c.direction.describe(sys_.names)} at {c.chart.label} {_point(c.point, c.exact)} "
            f"side {c.describe_side()}; case {c.case}, certificate {format_number(c.certificate)}"
        )
    return out or ["no contact points"]


def cmd_symmetry(sys_: PlaneSystem, args) -> list[str]:
    flags = symmetry_report(sys_).as_dict(sys_.names)
    return [f"{name}: {'yes' if flag else 'no'}" for name, flag in flags.items()]


def cmd_lines(sys_: PlaneSystem, args) -> list[str]:
    try:
        lines = find_invariant_lines(sys_, args.tol)
    except InfiniteFamilyError as exc:
        return [f"infinitely many invariant lines: {exc}"]
    out = []
    for c in lines:
        text = f"{c.to_string(sys_.names)} = 0"
        if c.certified:
            text += f"; cofactor {c.cofactor.to_string(sys_.names)}"
        else:
            text += " (irrational coefficients, rounded)"
        out.append(text)
    return out or ["no invariant lines"]


def cmd_verify_curve(sys_: PlaneSystem, args) -> list[str]:
    if args.curve is None:
        raise UsageError("verify-curve requires --curve")
    f = parse_polynomial(args.curve, sys_.names)
    if f.is_constant():
        raise InputError("--curve must be a nonconstant polynomial")
    curve = verify_invariant_curve(sys_, f)
    if curve is None:
        return ["not invariant"]
    kind = classify_cycle_candidate(sys_, curve, args.tol)
    return [f"invariant; cofactor = {curve.cofactor.to_string(sys_.names)}; {kind.value}"]


def cmd_atlas(sys_: PlaneSystem, args) -> list[str]:
    if args.out is None:
        raise UsageError("atlas requires -o/--out")
    cfg = load_config()
    analysis = analyze(sys_, args.tol)
    doc = build_atlas(sys_, cfg, args.density, analysis)
    svg_path = Path(args.out)
    json_path = svg_path.with_suffix(".json")
    svg_path.write_bytes(render_svg(doc))
    json_path.write_bytes(write_report_json(sys_, analysis))
    out = [f"wrote {svg_path}", f"wrote {json_path}"]
    if doc.errors:
        out.append(f"{len(doc.errors)} seeds failed to integrate")
    return out


def cmd_report(sys_: PlaneSystem, args) -> list[str]:
    data = write_report_json(sys_, analyze(sys_, args.tol))
    if args.out is not None:
        Path(args.out).write_bytes(data)
        return [f"wrote {args.out}"]
    return [data.decode("utf-8").rstrip("\n")]


COMMANDS = {
    "classify": (cmd_classify, "print the projective type and W_n"),
    "reduce": (cmd_reduce, "print the reduced systems and their time exponents"),
    "equilibria": (cmd_equilibria, "finite equilibria and equilibria at infinity"),
    "contacts": (cmd_contacts, "contact points on the axes and on the equator"),
    "symmetry": (cmd_symmetry, "symmetries of the direction field"),
    "lines": (cmd_lines, "invariant straight lines"),
    "verify-curve": (cmd_verify_curve, "check that --curve is an invariant curve"),
    "atlas": (cmd_atlas, "write the three-disc atlas as SVG plus a JSON report"),
    "report": (cmd_report, "print the JSON analysis report"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="projatlas", description="Projective atlas of planar polynomial systems.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("-s", "--system", help="system as \"x' = ...; y' = ...\"")
        source.add_argument("-f", "--file", help="file holding the system")
        p.add_argument("--tol", type=float, default=DEFAULT_ROOT_TOL, help="root isolation tolerance")
        if name == "reduce":
            p.add_argument("--chart", type=int, choices=(1, 2), help="1 for the first reduction, 2 for the second")
        if name == "verify-curve":
            p.add_argument("--curve", help="polynomial f of the curve f = 0")
        if name == "atlas":
            p.add_argument("--density", type=int, default=8, help="seed grid density per chart (default 8)")
        if name in ("atlas", "report"):
            p.add_argument("-o", "--out", help="output path")
    return parser


def run_cli(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if getattr(args, "density", 1) < 1:
            raise UsageError("--density must be at least 1")
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        system = _read_system(args)
        lines = COMMANDS[args.command][0](system, args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except AnalysisError as exc:
        print(f"analysis error: {exc}", file=stderr)
        return 2
    for line in lines:
        print(line, file=stdout)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run_cli(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
