"""Chart machinery for the projective phase plane.

Three affine charts cover the real projective plane. Writing a point in
homogeneous coordinates ``[h0 : h1 : h2]``, the charts read

* ``XY``       : ``(x, y)   = (h0/h2, h1/h2)``
* ``XiTheta``  : ``(xi, theta) = (h1/h0, h2/h0)``
* ``EtaZeta``  : ``(eta, zeta) = (h2/h1, h0/h1)``

so chart ``k`` uses ``(h[k], h[k+1]) / h[k+2]`` with indices mod 3. The map
``P1: (u, v) -> (v/u, 1/u)`` carries every chart to the next one in the cycle
XY -> XiTheta -> EtaZeta -> XY, and ``P2: (u, v) -> (1/v, u/v)`` to the
previous one. Together with the identity they form a cyclic group of order
three.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import InvalidSystemError, MappedToInfinityError, ParseError
from .poly_core import Poly2, gcd_bivariate, parse_polynomial
from .poly_core.poly2 import format_poly

Point = tuple


class ChartId(Enum):
    XY = 0
    XI_THETA = 1
    ETA_ZETA = 2

    @property
    def var_names(self) -> tuple[str, str]:
        return _VAR_NAMES[self]

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def next(self) -> "ChartId":
        """Target chart of the first transformation P1."""
        return ChartId((self.value + 1) % 3)

    @property
    def previous(self) -> "ChartId":
        """Target chart of the second transformation P2."""
        return ChartId((self.value + 2) % 3)

    @classmethod
    def from_var_names(cls, names: Sequence[str]) -> "ChartId":
        for chart, vn in _VAR_NAMES.items():
            if tuple(names) == vn:
                return chart
        raise KeyError(f"no chart uses variables {tuple(names)}")


_VAR_NAMES = {
    ChartId.XY: ("x", "y"),
    ChartId.XI_THETA: ("xi", "theta"),
    ChartId.ETA_ZETA: ("eta", "zeta"),
}
_LABELS = {ChartId.XY: "XY", ChartId.XI_THETA: "XiTheta", ChartId.ETA_ZETA: "EtaZeta"}


class Which(Enum):
    FIRST = "first"
    SECOND = "second"

    @property
    def transverse_index(self) -> int:
        """Index, in the target chart, of the variable that vanishes at the old infinity."""
        return 1 if self is Which.FIRST else 0


# homogeneous coordinates -------------------------------------------------


def to_homogeneous(p: Point, chart: ChartId) -> tuple:
    """Homogeneous triple of a finite chart point (exact for rational input)."""
    k = chart.value
    h = [None, None, None]
    h[k] = p[0]
    h[(k + 1) % 3] = p[1]
    h[(k + 2) % 3] = 1 if not isinstance(p[0], float) and not isinstance(p[1], float) else 1.0
    return tuple(h)


def from_homogeneous(h: Sequence, chart: ChartId) -> Point | None:
    """Chart coordinates of a homogeneous point, or None when it lies at the chart's infinity."""
    k = chart.value
    d = h[(k + 2) % 3]
    if d == 0:
        return None
    a, b = h[k], h[(k + 1) % 3]
    if isinstance(d, float) or isinstance(a, float) or isinstance(b, float):
        return (a / d, b / d)
    return (Fraction(a) / d, Fraction(b) / d)


def sphere_point(p: Point, chart: ChartId) -> tuple[float, float, float]:
    """Unit homogeneous vector with positive last chart coordinate (float)."""
    h = [float(c) for c in to_homogeneous(p, chart)]
    norm = math.sqrt(h[0] ** 2 + h[1] ** 2 + h[2] ** 2)
    return (h[0] / norm, h[1] / norm, h[2] / norm)


def _divisor_line(chart: ChartId, var: int) -> str:
    return f"{chart.var_names[var]}=0"


def p1(p: Point) -> Point:
    """First transformation (u, v) -> (v/u, 1/u)."""
    u, v = p
    if u == 0:
        raise MappedToInfinityError("u=0")
    if isinstance(u, float) or isinstance(v, float):
        return (v / u, 1.0 / u)
    u = Fraction(u)
    return (v / u, 1 / u)


def p2(p: Point) -> Point:
    """Second transformation (u, v) -> (1/v, u/v)."""
    u, v = p
    if v == 0:
        raise MappedToInfinityError("v=0")
    if isinstance(u, float) or isinstance(v, float):
        return (1.0 / v, u / v)
    v = Fraction(v)
    return (1 / v, u / v)


def poincare_map_point(p: Point, source: ChartId, target: ChartId) -> Point:
    """Coordinates in ``target`` of the point with coordinates ``p`` in ``source``.

    Chart changes between the two reduced charts are compositions through the
    group law (one step of P1 or P2). Exact for rational input.
    """
    step = (target.value - source.value) % 3
    if step == 0:
        return tuple(p)
    try:
        return p1(p) if step == 1 else p2(p)
    except MappedToInfinityError:
        var = 0 if step == 1 else 1
        raise MappedToInfinityError(_divisor_line(source, var)) from None


def disc_embed(p: Point, chart: ChartId | None = None) -> tuple[float, float]:
    """Central projection onto the unit disc: (u, v) / sqrt(1 + u^2 + v^2)."""
    u, v = float(p[0]), float(p[1])
    s = math.sqrt(1.0 + u * u + v * v)
    return (u / s, v / s)


def disc_of_sphere(h: Sequence[float], chart: ChartId) -> tuple[float, float]:
    """Disc image of a unit homogeneous vector, choosing the representative
    with nonnegative divisor coordinate (boundary points keep their sign)."""
    k = chart.value
    a, b, d = h[k], h[(k + 1) % 3], h[(k + 2) % 3]
    if d < 0:
        a, b = -a, -b
    return (a, b)


@dataclass(frozen=True)
class Direction:
    """Direction at infinity: ``y = slope*x`` (kind 'y') or ``x = slope*y`` (kind 'x')."""

    kind: str
    slope: float

    def describe(self, names: tuple[str, str] = ("x", "y")) -> str:
        u, v = names
        lhs, rhs = (v, u) if self.kind == "y" else (u, v)
        return f"{lhs}={_fmt_slope(self.slope, rhs)}"


def _fmt_slope(a: float, var: str) -> str:
    if a == 0:
        return "0"
    if a in (1, -1):
        return var if a == 1 else f"-{var}"
    text = str(int(a)) if float(a).is_integer() else f"{float(a):.12g}"
    return f"{text}*{var}"


def infinite_direction_chart(direction: Direction, chart: ChartId = ChartId.XY) -> tuple[ChartId, Point]:
    """Chart in which a direction at infinity of ``chart`` becomes a finite point.

    ``y = a x`` lands on ``(a, 0)`` after P1, ``x = a y`` on ``(0, a)`` after P2.
    """
    if direction.kind == "y":
        return chart.next, (direction.slope, 0.0 if isinstance(direction.slope, float) else 0)
    return chart.previous, (0.0 if isinstance(direction.slope, float) else 0, direction.slope)


def quadrant(p: Point) -> int | None:
    """Open coordinate quarter 1..4 of a point, None on the axes."""
    u, v = p
    if u > 0 and v > 0:
        return 1
    if u < 0 and v > 0:
        return 2
    if u < 0 and v < 0:
        return 3
    if u > 0 and v < 0:
        return 4
    return None


# quarter correspondence under P1 (and, inverted, under P2)
P1_QUADRANT_MAP = {1: 1, 2: 3, 3: 4, 4: 2}
P2_QUADRANT_MAP = {1: 1, 2: 4, 3: 2, 4: 3}


# systems ---------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneSystem:
    """Polynomial system u' = X(u, v), v' = Y(u, v) written in one chart.

    Construction validates the standing hypotheses: X and Y are not both
    zero (so the top components do not both vanish) and gcd(X, Y) is constant.
    """

    X: Poly2
    Y: Poly2
    chart: ChartId = ChartId.XY
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.validate:
            validate_system(self.X, self.Y)

    @property
    def n(self) -> int:
        return max(self.X.degree, self.Y.degree)

    @property
    def names(self) -> tuple[str, str]:
        return self.chart.var_names

    def X_k(self, k: int) -> Poly2:
        return self.X.homogeneous_component(k)

    def Y_k(self, k: int) -> Poly2:
        return self.Y.homogeneous_component(k)

    def w(self, k: int) -> Poly2:
        """u*Y_k - v*X_k, homogeneous of degree k+1."""
        u, v = Poly2.first(), Poly2.second()
        return u * self.Y_k(k) - v * self.X_k(k)

    def field_at(self, u, v):
        return (self.X(u, v), self.Y(u, v))

    def to_string(self) -> str:
        a, b = self.names
        return f"{a}' = {format_poly(self.X, self.names)}; {b}' = {format_poly(self.Y, self.names)}"

    def __str__(self):
        return self.to_string()

    def scaled(self, c) -> "PlaneSystem":
        return PlaneSystem(self.X * c, self.Y * c, self.chart)


def validate_system(X: Poly2, Y: Poly2) -> None:
    if X.is_zero() and Y.is_zero():
        raise InvalidSystemError(
            "X and Y are both identically zero: the hypothesis |X_n| + |Y_n| != 0 "
            "(top homogeneous components not both zero) fails"
        )
    g = gcd_bivariate(X, Y)
    if g.degree > 0:
        raise InvalidSystemError(
            f"X and Y are not relatively prime: common factor {format_poly(g)}"
        )


_EQUATION = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*'\s*=")


def parse_system(text: str) -> PlaneSystem:
    """Parse ``u' = P; v' = Q`` (statements split by ';' or newlines).

    The left-hand names select the chart: x/y, xi/theta or eta/zeta, in
    either order.
    """
    equations: dict[str, tuple[str, int, int]] = {}
    pos = 0
    for piece in re.split(r"[;\n]", text):
        start = pos
        pos += len(piece) + 1
        if not piece.strip():
            continue
        m = _EQUATION.match(piece)
        if m is None:
            offset = start + len(piece) - len(piece.lstrip())
            raise ParseError("expected an equation of the form \"name' = polynomial\"", offset, piece.strip()[:12])
        name = m.group(1)
        if name in equations:
            raise ParseError(f"second equation for {name}", start + m.start(1), name)
        equations[name] = (piece[m.end():], start + m.end(), start + m.start(1))
    names = tuple(equations)
    if len(names) != 2:
        raise ParseError(f"expected two equations, found {len(names)}", len(text.rstrip()))
    try:
        chart = ChartId.from_var_names(names)
    except KeyError:
        try:
            chart = ChartId.from_var_names(names[::-1])
        except KeyError:
            raise ParseError(
                "left-hand sides must name a chart pair (x, y), (xi, theta) or (eta, zeta)",
                equations[names[1]][2],
                names[1],
            ) from None
    members = []
    for var in chart.var_names:
        rhs, offset, _ = equations[var]
        try:
            members.append(parse_polynomial(rhs, chart.var_names))
        except ParseError as exc:
            raise ParseError(exc.reason, offset + exc.position, exc.token) from None
    return PlaneSystem(members[0], members[1], chart)


@dataclass(frozen=True)
class ProjectiveTypeReport:
    w_n: Poly2
    kind: str  # "P-singular" or "P-nonsingular"
    degree: int

    @property
    def singular(self) -> bool:
        return self.kind == "P-singular"

    @property
    def equator_is_trajectory(self) -> bool:
        """The line at infinity consists of trajectories exactly in the nonsingular case."""
        return not self.singular


P_SINGULAR = "P-singular"
P_NONSINGULAR = "P-nonsingular"


def wn_polynomial(sys: PlaneSystem) -> Poly2:
    """W_n = u*Y_n - v*X_n for the top degree n of the system."""
    return sys.w(sys.n)


def classify_projective_type(sys: PlaneSystem) -> ProjectiveTypeReport:
    w = wn_polynomial(sys)
    return ProjectiveTypeReport(w, P_SINGULAR if w.is_zero() else P_NONSINGULAR, sys.n)


@dataclass(frozen=True)
class ReducedSystem:
    """A reduced system together with its time factor.

    ``system`` lives in the target chart; the time ``tau`` of the reduced
    system relates to the source time by ``s^m d tau = dt`` where ``s`` is the
    transverse variable (theta after the first reduction, eta after the
    second). ``m`` may be negative for low-degree systems.
    """

    system: PlaneSystem
    m: int
    source_chart: ChartId
    which: Which

    @property
    def transverse_index(self) -> int:
        return self.which.transverse_index

    @property
    def transverse_name(self) -> str:
        return self.system.names[self.transverse_index]

    def orientation_factor(self, p: Point) -> int:
        """sign(s)^m, the factor turning the reduced field into the source-time direction."""
        s = p[self.transverse_index]
        if s == 0 or self.m % 2 == 0:
            return 1
        return 1 if s > 0 else -1

    def to_string(self) -> str:
        return f"{self.system.to_string()}; m = {self.m}"


def _top_substitution(p: Poly2, n: int, which: Which) -> Poly2:
    """s^n * p evaluated on the chart change, as a polynomial in the target chart.

    First:  s^n p(1/s, r/s) with target variables (r, s): u^a v^b -> r^b s^(n-a-b).
    Second: s^n p(r/s, 1/s) with target variables (s, r): u^a v^b -> s^(n-a-b) r^a.
    """
    out = {}
    for (a, b), c in p.terms.items():
        key = (b, n - a - b) if which is Which.FIRST else (n - a - b, a)
        out[key] = out.get(key, 0) + c
    return Poly2(out)


def reduce_system(sys: PlaneSystem, which: Which | str) -> ReducedSystem:
    """First or second projectively reduced system of ``sys``.

    The chart change is substituted exactly, denominators are cleared with
    s^n, and the largest power of the transverse variable ``s`` dividing both
    right members is cancelled; what remains fixes m = n - (cancelled power).
    """
    which = Which(which)
    n = sys.n
    px = _top_substitution(sys.X, n, which)
    py = _top_substitution(sys.Y, n, which)
    r, s = Poly2.first(), Poly2.second()
    if which is Which.FIRST:
        # target (xi, theta): xi' = theta*(Y^ - xi*X^), theta' = -theta^2 X^
        a = s * (py - r * px)
        b = -(s * s) * px
        t = 1
    else:
        # target (eta, zeta): eta' = -eta^2 Y^, zeta' = eta*(X^ - zeta*Y^)
        a = -(r * r) * py
        b = r * (px - s * py)
        t = 0
    powers = [q.max_power_of(t) for q in (a, b) if not q.is_zero()]
    k = min(powers)
    target = sys.chart.next if which is Which.FIRST else sys.chart.previous
    reduced = PlaneSystem(a.shift_down(t, k), b.shift_down(t, k), target, validate=False)
    return ReducedSystem(reduced, n - k, sys.chart, which)


@dataclass(frozen=True)
class DegreePrediction:
    delta: int
    delta1: int
    delta2: int
    deg_first: int
    deg_second: int


def predicted_reduced_degree(sys: PlaneSystem) -> DegreePrediction:
    """Degrees n + delta - delta1 and n + delta - delta2 of the two reduced systems.

    delta = 1 iff the system is P-nonsingular, delta1 = 1 iff the first
    variable divides X, delta2 = 1 iff the second variable divides Y.
    """
    delta = 0 if classify_projective_type(sys).singular else 1
    delta1 = 1 if sys.X.divisible_by_first() else 0
    delta2 = 1 if sys.Y.divisible_by_second() else 0
    n = sys.n
    return DegreePrediction(delta, delta1, delta2, n + delta - delta1, n + delta - delta2)


def actual_reduced_degrees(sys: PlaneSystem) -> tuple[int, int]:
    return (reduce_system(sys, Which.FIRST).system.n, reduce_system(sys, Which.SECOND).system.n)


# pushforward of the source field ------------------------------------------------


def pushforward(vec: Sequence, p: Point, source: ChartId, target: ChartId) -> tuple:
    """Image of tangent vector ``vec`` at ``p`` under the chart change source -> target."""
    step = (target.value - source.value) % 3
    u, v = p
    du, dv = vec
    if step == 0:
        return (du, dv)
    if step == 1:
        # (v/u, 1/u)
        return ((dv * u - v * du) / (u * u), -du / (u * u))
    # (1/v, u/v)
    return (-dv / (v * v), (du * v - u * dv) / (v * v))
