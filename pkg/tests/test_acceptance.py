"""Acceptance gate: every criterion at its stated tolerance.

Each criterion is a function returning a list of named checks. The pytest
wrapper records one PASS/FAIL line per criterion (shown in the terminal
summary) and asserts every check. Run this file directly to print the lines
without pytest.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from typing import Callable, NamedTuple

import pytest

import conftest
from corpus import CORPUS, EZ, TABLE_8_1, XT, XY, constant_system, table_system, xy
from projatlas.atlas import analyze, build_atlas, build_scenes, render_svg
from projatlas.flow import IntegratorConfig, Orientation, Seed, integrate_trajectory
from projatlas.poly_core import Poly2
from projatlas.projective import (
    P1_QUADRANT_MAP,
    ChartId,
    PlaneSystem,
    Which,
    actual_reduced_degrees,
    classify_projective_type,
    p1,
    p2,
    poincare_map_point,
    predicted_reduced_degree,
    pushforward,
    quadrant,
    reduce_system,
    sphere_point,
)
from projatlas.structure import (
    CycleKind,
    EquilibriumKind,
    Side,
    axis_contact_points,
    classify_cycle_candidate,
    divergence_field,
    equatorial_contact_points,
    find_invariant_lines,
    finite_equilibria,
    infinite_equilibria,
    symmetry_report,
    verify_invariant_curve,
)


class Check(NamedTuple):
    label: str
    ok: bool
    detail: str = ""


def check(label: str, ok: bool, detail: str = "") -> Check:
    return Check(label, bool(ok), detail)


# 1. reduction corpus -------------------------------------------------------


def reduction_corpus() -> list[Check]:
    out = []
    for key, ref in CORPUS.items():
        sys = ref.system()
        for which, expected, (_, _, m) in (
            (Which.FIRST, ref.first_system(), ref.first),
            (Which.SECOND, ref.second_system(), ref.second),
        ):
            red = reduce_system(sys, which)
            ok = red.system.X == expected.X and red.system.Y == expected.Y and red.m == m
            out.append(check(f"{key} {which.value}", ok, red.to_string()))
    return out


# 2. projective type --------------------------------------------------------


def projective_type() -> list[Check]:
    out = []
    for key in ("16.1", "16.13", "16.16", "12.8", "12.1"):
        kind = classify_projective_type(CORPUS[key].system()).kind
        out.append(check(f"{key} singular", kind == "P-singular", kind))
    for key in ("16.4", "16.7", "16.10"):
        kind = classify_projective_type(CORPUS[key].system()).kind
        out.append(check(f"{key} nonsingular", kind == "P-nonsingular", kind))
    for a0, b0 in ((1, 2), (0, 3), (-5, 0), (7, -7)):
        kind = classify_projective_type(constant_system(a0, b0)).kind
        out.append(check(f"constant ({a0}, {b0}) nonsingular", kind == "P-nonsingular", kind))
    return out


# 3. degree formulas --------------------------------------------------------


def degree_formulas() -> list[Check]:
    out = []
    for key, ref in CORPUS.items():
        sys = ref.system()
        pred = predicted_reduced_degree(sys)
        actual = actual_reduced_degrees(sys)
        out.append(check(key, (pred.deg_first, pred.deg_second) == actual, f"predicted {pred}, actual {actual}"))
    return out


# 4. equilibrium classification ---------------------------------------------


def _origin(sys: PlaneSystem):
    found = [e for e in finite_equilibria(sys) if e.point == (0, 0)]
    return found[0] if found else None


def _roots_match(e, coeffs, tol=1e-9) -> bool:
    """Eigenvalues of ``e`` equal the roots of lambda^2 + b lambda + c."""
    _, b, c = coeffs
    disc = cmath.sqrt(b * b - 4 * c)
    want = sorted([(-b + disc) / 2, (-b - disc) / 2], key=lambda z: (z.real, z.imag))
    got = sorted(e.eigenvalues, key=lambda z: (z.real, z.imag))
    return all(abs(w - g) <= tol * max(1.0, abs(w)) for w, g in zip(want, got))


TABLE_KINDS = {
    "8.1": EquilibriumKind.NODE_UNSTABLE,
    "8.2": EquilibriumKind.SADDLE,
    "8.3": EquilibriumKind.CENTER_OR_FOCUS,
    "8.4": EquilibriumKind.FOCUS_UNSTABLE,
    "8.5": EquilibriumKind.NODE_UNSTABLE,
    "8.6": EquilibriumKind.NODE_UNSTABLE,
}

SIXTEEN_SIXTEEN_DELTA = "16.16 origin Delta = -0.99"
NODE_A = "16.13 node A char poly"
SADDLE_B = "16.13 saddle B Delta = 25 - 144 sqrt(35)"
ORIGIN_16_13 = "16.13 origin"


def equilibrium_classification() -> list[Check]:
    out = []
    for key, kind in TABLE_KINDS.items():
        e = _origin(table_system(key))
        out.append(check(f"{key} origin", e is not None and e.kind is kind, f"{e.kind.value if e else None}"))
    e5, e6 = _origin(table_system("8.5")), _origin(table_system("8.6"))
    out.append(check("8.5 repeated eigenvalue", e5.eigenvalues[0] == e5.eigenvalues[1] == 1, str(e5.eigenvalues)))
    out.append(check("8.6 equal eigenvalues", e6.eigenvalues[0] == e6.eigenvalues[1] == 1, str(e6.eigenvalues)))
    out.append(check("8.4 trace 2", _origin(table_system("8.4")).trace == 2))

    e = _origin(CORPUS["16.4"].first_system())
    out.append(
        check(
            "16.5 origin",
            e.kind is EquilibriumKind.NODE_UNSTABLE and _roots_match(e, (1, -3, 2)),
            f"{e.kind.value}, eigenvalues {e.eigenvalues}",
        )
    )

    eqs = {e.point: e.kind for e in finite_equilibria(CORPUS["16.7"].first_system())}
    want = {(0, 0): EquilibriumKind.SADDLE, (2, 0): EquilibriumKind.NODE_STABLE, (-2, 0): EquilibriumKind.NODE_STABLE}
    out.append(check("16.8 equilibria", eqs == want, str(eqs)))

    e = _origin(CORPUS["16.10"].system())
    out.append(
        check("16.10 origin", e.kind is EquilibriumKind.FOCUS_STABLE and _roots_match(e, (1, 2, 2)), e.kind.value)
    )

    s35 = math.sqrt(35)
    expected = [
        ("16.13 focus O", (0.0, 0.0), EquilibriumKind.FOCUS_UNSTABLE, (1, -18, 145)),
        (NODE_A, (0.5, s35 / 2), EquilibriumKind.NODE_UNSTABLE, (1, -(144 + s35), 25 + 144 * s35)),
    ]
    found = finite_equilibria(CORPUS["16.13"].system())
    out.append(check("16.13 count", len(found) == 3, str(len(found))))
    for label, point, kind, coeffs in expected:
        match = [e for e in found if math.dist(tuple(map(float, e.point)), point) <= 1e-9]
        ok = len(match) == 1 and match[0].kind is kind and _roots_match(match[0], coeffs)
        detail = f"{match[0].kind.value}, T = {match[0].trace:.12g}, Delta = {match[0].determinant:.12g}" if match else "missing"
        out.append(check(label, ok, detail))
    match = [e for e in found if math.dist(tuple(map(float, e.point)), (0.5, -s35 / 2)) <= 1e-9]
    ok = len(match) == 1 and match[0].kind is EquilibriumKind.SADDLE
    ok = ok and abs(match[0].determinant - (25 - 144 * s35)) <= 1e-9 * (144 * s35)
    out.append(check(SADDLE_B, ok, f"Delta = {match[0].determinant:.12g}" if match else "missing"))
    # exact values from an independent symbolic computation: T = 144 +- sqrt(35), Delta = +-144 sqrt(35)
    for label, sign, kind in (("16.13 node A (derived)", 1, EquilibriumKind.NODE_UNSTABLE), ("16.13 saddle B (derived)", -1, EquilibriumKind.SADDLE)):
        match = [e for e in found if math.dist(tuple(map(float, e.point)), (0.5, sign * s35 / 2)) <= 1e-9]
        ok = len(match) == 1 and match[0].kind is kind and _roots_match(match[0], (1, -(144 + sign * s35), sign * 144 * s35))
        out.append(check(label, ok, match[0].kind.value if match else "missing"))

    e = _origin(CORPUS["16.16"].system())
    out.append(check("16.16 origin saddle", e.kind is EquilibriumKind.SADDLE, e.kind.value))
    out.append(check(SIXTEEN_SIXTEEN_DELTA, abs(float(e.determinant) + 0.99) <= 1e-9, f"Delta = {float(e.determinant)}"))
    return out


# 5. infinite equilibria ----------------------------------------------------


def _directions(sys: PlaneSystem):
    return sorted((e.direction.kind, e.direction.slope, e.kind) for e in infinite_equilibria(sys))


def _slopes_close(got, want, tol=1e-10) -> bool:
    return len(got) == len(want) and all(
        g[0] == w[0] and abs(g[1] - w[1]) <= tol and g[2] is w[2] for g, w in zip(got, want)
    )


def infinite_equilibria_check() -> list[Check]:
    got = _directions(CORPUS["16.7"].system())
    want = [
        ("y", -2, EquilibriumKind.NODE_STABLE),
        ("y", 0, EquilibriumKind.SADDLE),
        ("y", 2, EquilibriumKind.NODE_STABLE),
    ]
    out = [check("16.7 directions", _slopes_close(got, want), str(got))]
    got = _directions(CORPUS["16.4"].system())
    out.append(check("16.4 directions", _slopes_close(got, [("y", 0, EquilibriumKind.NODE_UNSTABLE)]), str(got)))
    got = _directions(CORPUS["16.1"].system())
    out.append(check("16.1 directions", _slopes_close(got, [("x", 0, EquilibriumKind.DEGENERATE)]), str(got)))
    flagged = all(e.modulo_direction for e in infinite_equilibria(CORPUS["16.1"].system()))
    out.append(check("modulo direction flag", flagged))
    return out


# 6. contact points ---------------------------------------------------------


def _contacts(sys, axis):
    return [(tuple(float(c) for c in p.point), p.side) for p in axis_contact_points(sys, axis)]


def _contacts_match(got, want, tol=1e-10) -> bool:
    return len(got) == len(want) and all(
        math.dist(g[0], w[0]) <= tol and g[1] is w[1] for g, w in zip(sorted(got), sorted(want))
    )


def contact_points() -> list[Check]:
    NONNEG, NONPOS = Side.NONNEG, Side.NONPOS
    r8 = 2 * math.sqrt(2)
    cases = [
        ("16.4 Oy", "16.4", "Oy", [((0, -1), NONPOS), ((0, 1), NONNEG)]),
        ("16.7 Oy", "16.7", "Oy", [((0, -1), NONNEG), ((0, 1), NONPOS)]),
        ("16.13 Ox", "16.13", "Ox", [((-2, 0), NONNEG), ((4, 0), NONNEG)]),
        ("16.13 Oy", "16.13", "Oy", [((0, -r8), NONPOS), ((0, r8), NONNEG)]),
        ("16.1 Ox", "16.1", "Ox", []),
        ("16.1 Oy", "16.1", "Oy", []),
    ]
    out = []
    for label, key, axis, want in cases:
        got = _contacts(CORPUS[key].system(), axis)
        out.append(check(label, _contacts_match(got, want), str(got)))
    got = equatorial_contact_points(CORPUS["16.13"].system())
    out.append(check("16.13 equatorial", got == [], str(got)))
    roots = sorted(c.direction.slope for c in equatorial_contact_points(CORPUS["16.13"].first_system()))
    want = [-math.sqrt(2) / 4, 0.0, math.sqrt(2) / 4]
    ok = len(roots) == 3 and all(abs(a - b) <= 1e-10 for a, b in zip(roots, want))
    out.append(check("16.14 equatorial roots", ok, str(roots)))
    return out


# 7. symmetry ---------------------------------------------------------------


def symmetry() -> list[Check]:
    out = []
    for key in ("16.1", "16.4", "16.7", "16.10", "16.13", "16.16"):
        label = ORIGIN_16_13 if key == "16.13" else f"{key} origin"
        sys = CORPUS[key].system()
        x, y = Poly2.first(), Poly2.second()
        odd = [(f.substitute(-x, -y) + f).to_string() for f in (sys.X, sys.Y)]
        out.append(check(label, symmetry_report(sys).origin, f"X(-x,-y) + X = {odd[0]}, Y(-x,-y) + Y = {odd[1]}"))
    for key, name in (("16.1", "16.2"), ("16.4", "16.5"), ("16.7", "16.8"), ("16.10", "16.11")):
        out.append(check(f"{name} xi-axis", symmetry_report(CORPUS[key].first_system()).axis_first))
    for key, name in (("16.1", "16.3"), ("16.4", "16.6"), ("16.7", "16.9"), ("16.10", "16.12")):
        out.append(check(f"{name} zeta-axis", symmetry_report(CORPUS[key].second_system()).axis_second))
    return out


# 8. group law --------------------------------------------------------------


def _random_rational(rng: random.Random) -> Fraction:
    value = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
    return value if value != 0 else Fraction(1, 7)


def group_law(count: int = 1000, seed: int = 20241017) -> list[Check]:
    rng = random.Random(seed)
    identity = lambda p: p  # noqa: E731
    relations: dict[str, tuple[Callable, Callable]] = {
        "I.I = I": (lambda p: identity(identity(p)), identity),
        "P1.I = I.P1 = P1": (lambda p: p1(identity(p)) == identity(p1(p)) and p1(p), p1),
        "P2.I = I.P2 = P2": (lambda p: p2(identity(p)) == identity(p2(p)) and p2(p), p2),
        "P1.P2 = P2.P1 = I": (lambda p: p1(p2(p)) == p2(p1(p)) and p1(p2(p)), identity),
        "P1.P1 = P2": (lambda p: p1(p1(p)), p2),
        "P2.P2 = P1": (lambda p: p2(p2(p)), p1),
    }
    failures = {name: 0 for name in relations}
    for _ in range(count):
        p = (_random_rational(rng), _random_rational(rng))
        for name, (lhs, rhs) in relations.items():
            if lhs(p) != rhs(p):
                failures[name] += 1
    return [check(name, n == 0, f"{n} of {count} points fail") for name, n in failures.items()]


# 9. invariant curves and cycles --------------------------------------------


def invariant_curves() -> list[Check]:
    out = []
    sys = CORPUS["12.8"].system()
    curve = verify_invariant_curve(sys, xy("x^2 + y^2 - 1"))
    ok = curve is not None and curve.cofactor == xy("-2x^2 - 2y^2")
    out.append(check("12.8 circle cofactor", ok, curve.cofactor.to_string() if curve else "not invariant"))
    out.append(check("12.8 circle kind", classify_cycle_candidate(sys, curve) is CycleKind.PLANE))
    cases = [
        ("12.9 hyperbola", CORPUS["12.8"].first_system(), "theta^2 - xi^2 - 1", XT),
        ("12.10 hyperbola", CORPUS["12.8"].second_system(), "eta^2 - zeta^2 - 1", EZ),
        ("12.12 parabola", CORPUS["12.11"].first_system(), "xi^2 - 2theta + 1", XT),
        ("12.13 hyperbola", CORPUS["12.11"].second_system(), "zeta^2 - 2eta*zeta + 1", EZ),
    ]
    for label, sys, text, names in cases:
        curve = verify_invariant_curve(sys, xy(text, names))
        kind = classify_cycle_candidate(sys, curve) if curve else None
        out.append(check(label, kind is CycleKind.OPEN, str(kind)))
    lines = [c.f for c in find_invariant_lines(CORPUS["12.1"].system())]
    out.append(check("12.1 lines", lines == [xy("y + 1")], str(lines)))
    lines = find_invariant_lines(CORPUS["12.8"].system())
    out.append(check("12.8 lines", lines == [], str(lines)))
    return out


# 10. divergence ------------------------------------------------------------


def divergence() -> list[Check]:
    div = divergence_field(CORPUS["16.1"].system())
    return [check("16.1 divergence", div == xy("4x^2"), div.to_string())]


# 11. flow validation -------------------------------------------------------


def _arctan_quotient(a: float, b: float) -> float:
    return math.atan(a / b)


def integral_16_1(x, y):
    return (1 + x * y) / (x * x + y * y) + _arctan_quotient(y, x)


def integral_16_2(xi, theta):
    return (xi + theta**2) / (1 + xi**2) + math.atan(xi)


def integral_16_3(eta, zeta):
    return (zeta + eta**2) / (1 + zeta**2) + _arctan_quotient(1, zeta)


def integral_12_8(x, y):
    r2 = x * x + y * y
    return r2 / (1 - r2) * math.exp(-2 * _arctan_quotient(y, x))


def run_drift(traj, chart: ChartId, F, excluded: Callable[[tuple], float], margin: float = 1e-2) -> float:
    """Largest relative drift of F over the pieces of ``traj`` that stay in
    ``chart`` and keep a fixed sign of ``excluded`` with |excluded| > margin."""
    worst = 0.0
    for seg in traj.segments:
        if seg.chart is not chart:
            continue
        run: list[float] = []
        sign = 0
        for p in seg.points:
            g = excluded(p)
            s = 1 if g > margin else (-1 if g < -margin else 0)
            if s == 0 or (sign and s != sign):
                run, sign = [], s
                if s == 0:
                    continue
            sign = s
            run.append(F(*p))
            worst = max(worst, abs(run[-1] - run[0]) / (abs(run[0]) + 1.0))
    return worst


DRIFT_CASES = {
    "16.1": (lambda: CORPUS["16.1"].system(), integral_16_1, lambda p: p[0]),
    "16.2": (lambda: CORPUS["16.1"].first_system(), integral_16_2, lambda p: 1.0),
    "16.3": (lambda: CORPUS["16.1"].second_system(), integral_16_3, lambda p: p[1]),
    "12.8": (
        lambda: CORPUS["12.8"].system(),
        integral_12_8,
        lambda p: p[0] * (1 - p[0] ** 2 - p[1] ** 2) * 10,
    ),
}


def drift_seeds(rng: random.Random, count: int):
    out = []
    while len(out) < count:
        p = (rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        if min(abs(p[0]), abs(p[1])) > 0.05 and 0.1 < math.hypot(*p) and abs(math.hypot(*p) - 1) > 0.05:
            out.append(p)
    return out


def flow_validation(seed: int = 7) -> list[Check]:
    rng = random.Random(seed)
    cfg = IntegratorConfig(max_arc_length=10.0)
    out = []
    for key, (make, F, excluded) in DRIFT_CASES.items():
        sys = make()
        worst = 0.0
        for p in drift_seeds(rng, 12):
            for orientation in Orientation:
                traj = integrate_trajectory(sys, Seed(sys.chart, p), cfg, orientation)
                worst = max(worst, run_drift(traj, sys.chart, F, excluded))
        out.append(check(f"{key} first-integral drift", worst <= 1e-6, f"max drift {worst:.3g}"))

    sys = CORPUS["16.4"].system()
    long_cfg = IntegratorConfig(max_arc_length=40.0)
    worst, switches = 0.0, 0
    for _ in range(50):
        p = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        traj = integrate_trajectory(sys, Seed(ChartId.XY, p), long_cfg, rng.choice(list(Orientation)))
        for ev in traj.switch_events:
            a, b = sphere_point(ev.before, ev.from_chart), sphere_point(ev.after, ev.to_chart)
            gap = min(math.dist(a, b), math.dist(a, tuple(-c for c in b)))
            worst = max(worst, gap)
            switches += 1
    out.append(check("16.4 chart-switch continuity", worst <= 1e-6 and switches > 0, f"{switches} switches, max gap {worst:.3g}"))

    bad = 0
    rng = random.Random(seed + 1)
    for _ in range(500):
        x, y = _random_rational(rng), _random_rational(rng)
        key = rng.choice(sorted(CORPUS))
        src = CORPUS[key].system()
        which = rng.choice(list(Which))
        red = reduce_system(src, which).system
        target = red.chart
        q = poincare_map_point((x, y), ChartId.XY, target)
        pushed = pushforward(src.field_at(x, y), (x, y), ChartId.XY, target)
        field = red.field_at(*q)
        if pushed[0] * field[1] - pushed[1] * field[0] != 0:
            bad += 1
    out.append(check("pullback parallelism", bad == 0, f"{bad} of 500 points not parallel"))
    return out


# 12. atlas determinism and geometry ----------------------------------------


def _full_corpus():
    for key, ref in CORPUS.items():
        yield key, ref.system()
        yield f"{key} first", ref.first_system()
        yield f"{key} second", ref.second_system()
    for key in TABLE_8_1:
        yield key, table_system(key)


def _disc_to_chart(d):
    s = math.sqrt(1 - d[0] ** 2 - d[1] ** 2)
    return (d[0] / s, d[1] / s)


def quadrant_failures(scenes) -> list[str]:
    """Interior off-axis markers must reappear in the next chart in the quarter given by P1."""
    by_chart = {s.chart: s for s in scenes}
    failures = []
    for scene in scenes:
        nxt = by_chart[scene.chart.next]
        for m in scene.markers:
            if m.boundary:
                continue
            p = _disc_to_chart(m.position)
            q0 = quadrant(p)
            if q0 is None:
                continue
            image = p1(p)
            s = math.sqrt(1 + image[0] ** 2 + image[1] ** 2)
            target = (image[0] / s, image[1] / s)
            twins = [n for n in nxt.markers if n.glyph == m.glyph and math.dist(n.position, target) <= 1e-9]
            if quadrant(image) != P1_QUADRANT_MAP[q0] or quadrant(target) != quadrant(image) or not twins:
                failures.append(f"{scene.chart.label} {m.label}")
    return failures


def atlas_geometry() -> list[Check]:
    cfg = IntegratorConfig(max_arc_length=6.0)
    sys = table_system("8.3")
    first = render_svg(build_atlas(sys, cfg, density=4))
    second = render_svg(build_atlas(sys, cfg, density=4))
    out = [check("8.3 svg byte-identical", first == second, f"{len(first)} bytes")]
    for key, sys in _full_corpus():
        scenes = build_scenes(analyze(sys), [], sys.names)
        failures = quadrant_failures(scenes)
        out.append(check(f"{key} quadrant map", not failures, ", ".join(failures)))
    return out


CRITERIA: dict[int, tuple[str, Callable[[], list[Check]]]] = {
    1: ("reduction corpus", reduction_corpus),
    2: ("projective type", projective_type),
    3: ("degree formulas", degree_formulas),
    4: ("equilibrium classification", equilibrium_classification),
    5: ("infinite equilibria", infinite_equilibria_check),
    6: ("contact points", contact_points),
    7: ("symmetry", symmetry),
    8: ("group law", group_law),
    9: ("invariant curves and cycles", invariant_curves),
    10: ("divergence", divergence),
    11: ("flow validation", flow_validation),
    12: ("atlas determinism and geometry", atlas_geometry),
}

# checks that fail against the published values; see the decisions ledger
KNOWN_FAILURES = {
    (4, SIXTEEN_SIXTEEN_DELTA): "published determinant -0.99; the exact value is -101/100",
    (4, NODE_A): "published constant term 25 + 144 sqrt(35); the exact determinant is 144 sqrt(35)",
    (4, SADDLE_B): "published determinant 25 - 144 sqrt(35); the exact value is -144 sqrt(35)",
    (7, ORIGIN_16_13): "X(-x, -y) + X(x, y) = 4xy and Y(-x, -y) + Y(x, y) = -4x^2, so the field is not symmetric about the origin",
}


def summary_line(number: int, title: str, checks: list[Check]) -> str:
    failed = [c for c in checks if not c.ok]
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {number:2d} {title}: {status} ({len(checks) - len(failed)}/{len(checks)} checks)"
    if failed:
        line += "; failing: " + "; ".join(f"{c.label} [{c.detail}]" for c in failed)
    return line


_RESULTS: dict[int, list[Check]] = {}


def results(number: int) -> list[Check]:
    if number not in _RESULTS:
        title, fn = CRITERIA[number]
        _RESULTS[number] = fn()
        conftest.ACCEPTANCE_LINES[number] = summary_line(number, title, _RESULTS[number])
    return _RESULTS[number]


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    checks = results(number)
    print(conftest.ACCEPTANCE_LINES[number])
    failed = [c for c in checks if not c.ok and (number, c.label) not in KNOWN_FAILURES]
    assert not failed, failed


@pytest.mark.parametrize(
    "number, label",
    [pytest.param(n, label, marks=pytest.mark.xfail(strict=True, reason=why)) for (n, label), why in KNOWN_FAILURES.items()],
)
def test_published_value_mismatch(number, label):
    checks = {c.label: c for c in results(number)}
    assert checks[label].ok, checks[label].detail


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        results(n)
        print(conftest.ACCEPTANCE_LINES[n])
