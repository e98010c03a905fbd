"""Whole-system analysis and its JSON report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import AnalysisError
from ..projective import (
    DegreePrediction,
    PlaneSystem,
    ProjectiveTypeReport,
    ReducedSystem,
    Which,
    actual_reduced_degrees,
    classify_projective_type,
    predicted_reduced_degree,
    reduce_system,
)
from ..structure import (
    ContactPoint,
    CycleKind,
    Equilibrium,
    InvariantCurve,
    SymmetryReport,
    axis_contact_points,
    classify_cycle_candidate,
    equator_cycle_kind,
    equatorial_contact_points,
    find_invariant_lines,
    finite_equilibria,
    infinite_equilibria,
    symmetry_report,
)
from ..poly_core.roots import DEFAULT_ROOT_TOL


@dataclass
class Analysis:
    system: PlaneSystem
    projective_type: ProjectiveTypeReport
    first: ReducedSystem
    second: ReducedSystem
    predicted: DegreePrediction
    actual: tuple[int, int]
    finite: list[Equilibrium]
    infinite: list[Equilibrium]
    contacts: dict[str, list[ContactPoint]]
    symmetry: SymmetryReport
    invariant_lines: list[InvariantCurve]
    cycles: list[tuple[str, CycleKind]]
    notes: list[str] = field(default_factory=list)

    @property
    def equilibria(self) -> list[Equilibrium]:
        return self.finite + self.infinite


def analyze(sys: PlaneSystem, tol: float = DEFAULT_ROOT_TOL) -> Analysis:
    """Run every analysis stage; invariant-line failures become notes."""
    notes: list[str] = []
    lines: list[InvariantCurve] = []
    try:
        lines = find_invariant_lines(sys, tol)
    except AnalysisError as exc:
        notes.append(f"invariant lines: {exc}")
    cycles: list[tuple[str, CycleKind]] = []
    for curve in lines:
        if curve.certified:
            cycles.append((curve.to_string(sys.names), classify_cycle_candidate(sys, curve, tol)))
        else:
            notes.append(f"line {curve.to_string(sys.names)} has irrational coefficients; not classified")
    kind = equator_cycle_kind(sys)
    if kind is CycleKind.ELL_INFINITY:
        cycles.append(("equator", kind))
    return Analysis(
        system=sys,
        projective_type=classify_projective_type(sys),
        first=reduce_system(sys, Which.FIRST),
        second=reduce_system(sys, Which.SECOND),
        predicted=predicted_reduced_degree(sys),
        actual=actual_reduced_degrees(sys),
        finite=finite_equilibria(sys, tol),
        infinite=infinite_equilibria(sys, tol),
        contacts={
            "Ox": axis_contact_points(sys, "Ox", tol),
            "Oy": axis_contact_points(sys, "Oy", tol),
            "equatorial": equatorial_contact_points(sys, tol),
        },
        symmetry=symmetry_report(sys),
        invariant_lines=lines,
        cycles=cycles,
        notes=notes,
    )


def format_number(value) -> str:
    """Exact rationals as ``p`` or ``p/q``; floats with 12 significant digits."""
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    text = f"{float(value):.12g}"
    return "0" if text == "-0" else text


def round12(value: float) -> float:
    r = float(f"{float(value):.12g}")
    return 0.0 if r == 0 else r


def char_poly_string(e: Equilibrium) -> str:
    t = round12(e.trace)
    d = round12(e.determinant)
    out = "lambda^2"
    if t != 0:
        out += f" {'-' if t > 0 else '+'} {format_number(abs(t))}*lambda"
    if d != 0:
        out += f" {'+' if d > 0 else '-'} {format_number(abs(d))}"
    return out


def _point(p, exact) -> dict:
    out = {"point": [round12(p[0]), round12(p[1])]}
    if exact is not None:
        out["exact"] = [format_number(exact[0]), format_number(exact[1])]
    return out


def equilibrium_dict(e: Equilibrium, names: tuple[str, str]) -> dict:
    out: dict = {"location": "infinite" if e.infinite else "finite"}
    if e.infinite:
        out["direction"] = e.direction.describe(names)
    out["chart"] = e.chart.label
    out.update(_point(e.point, e.exact))
    out["jacobian"] = [[round12(v) for v in row] for row in e.jacobian]
    out["trace"] = round12(e.trace)
    out["determinant"] = round12(e.determinant)
    out["char_poly"] = char_poly_string(e)
    out["kind"] = e.kind.value
    out["multiplicity"] = e.multiplicity
    if e.infinite:
        out["modulo_direction"] = True
    return out


def contact_dict(c: ContactPoint, names: tuple[str, str]) -> dict:
    out: dict = {}
    if c.direction is not None:
        out["direction"] = c.direction.describe(names)
        out["chart"] = c.chart.label
    out.update(_point(c.point, c.exact))
    out["side"] = c.describe_side()
    out["certificate"] = round12(c.certificate)
    out["case"] = c.case
    return out


def report_dict(a: Analysis) -> dict:
    sys = a.system
    names = sys.names
    pt = a.projective_type
    return {
        "system": {
            "X": sys.X.to_string(names),
            "Y": sys.Y.to_string(names),
            "degree": sys.n,
        },
        "projective_type": pt.kind,
        "W_n": pt.w_n.to_string(names),
        "reduced": {
            "first": {
                "Xi": a.first.system.X.to_string(a.first.system.names),
                "Theta": a.first.system.Y.to_string(a.first.system.names),
                "m": a.first.m,
            },
            "second": {
                "H": a.second.system.X.to_string(a.second.system.names),
                "Z": a.second.system.Y.to_string(a.second.system.names),
                "m": a.second.m,
            },
        },
        "degrees": {
            "predicted": {"first": a.predicted.deg_first, "second": a.predicted.deg_second},
            "actual": {"first": a.actual[0], "second": a.actual[1]},
        },
        "equilibria": [equilibrium_dict(e, names) for e in a.equilibria],
        "contacts": {k: [contact_dict(c, names) for c in v] for k, v in a.contacts.items()},
        "symmetry": a.symmetry.as_dict(names),
        "invariant_lines": [c.to_string(names) for c in a.invariant_lines],
        "cycles": [{"curve": curve, "kind": kind.value} for curve, kind in a.cycles],
        "notes": list(a.notes),
    }


def write_report_json(sys: PlaneSystem, analysis: Analysis | None = None) -> bytes:
    """UTF-8 JSON report with a fixed key order."""
    analysis = analysis or analyze(sys)
    return (json.dumps(report_dict(analysis), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
