"""Trajectories across the three charts of the projective plane.

Each chart carries its own polynomial field: the system itself in its home
chart and the two reduced systems in the others. Integration runs on the
unit-speed field, so the parameter is arc length in chart coordinates, and
hands the state over to the chart where the point is most central as soon
as a coordinate grows too large.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .errors import AnalysisError, NotAnEquilibriumError, StepSizeUnderflowError
from .projective import (
    ChartId,
    PlaneSystem,
    Which,
    from_homogeneous,
    poincare_map_point,
    pushforward,
    reduce_system,
    sphere_point,
    to_homogeneous,
)

Point = tuple[float, float]


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_arc_length: float = 10.0
    switch_out: float = 2.0
    switch_in: float = 1.5
    max_steps: int = 20000
    max_step: float = 0.05
    min_step: float = 1e-13
    equilibrium_radius: float = 1e-6

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if not self.switch_in < self.switch_out:
            raise ValueError("switch_in must be smaller than switch_out")
        if self.switch_in < 1.0:
            raise ValueError("switch_in must be at least 1 so that some chart always qualifies")
        if self.max_steps < 1 or self.max_step <= 0 or self.max_arc_length <= 0:
            raise ValueError("step limits and arc length must be positive")

    @classmethod
    def from_mapping(cls, values: Mapping[str, str]) -> IntegratorConfig:
        """Build from string values (config files); unknown keys raise KeyError."""
        kinds = {f.name: f.type for f in fields(cls)}
        kwargs = {}
        for key, raw in values.items():
            if key not in kinds:
                raise KeyError(key)
            kwargs[key] = int(raw) if kinds[key] in (int, "int") else float(raw)
        return cls(**kwargs)


class Orientation(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    @property
    def sign(self) -> int:
        return 1 if self is Orientation.FORWARD else -1


class Seed(NamedTuple):
    chart: ChartId
    point: Point


@dataclass
class Segment:
    chart: ChartId
    points: list[Point]
    sign: int


@dataclass(frozen=True)
class SwitchEvent:
    index: int
    from_chart: ChartId
    to_chart: ChartId
    before: Point
    after: Point


@dataclass
class Trajectory:
    """Polyline pieces, one per stay in a chart.

    ``sign`` of a segment is the factor applied to that chart's polynomial
    field. ``reversals`` lists the global point indices where the path
    crossed the line at infinity with an odd time exponent, after which the
    source-time orientation of the path is reversed.
    """

    seed: Seed
    orientation: Orientation
    segments: list[Segment] = field(default_factory=list)
    switch_events: list[SwitchEvent] = field(default_factory=list)
    reversals: list[int] = field(default_factory=list)
    termination: str = ""
    arc_length: float = 0.0

    def points(self, chart: ChartId | None = None) -> list[Point]:
        return [p for s in self.segments if chart is None or s.chart is chart for p in s.points]

    def sphere_points(self) -> list[tuple[float, float, float]]:
        return [sphere_point(p, s.chart) for s in self.segments for p in s.points]

    def __len__(self) -> int:
        return sum(len(s.points) for s in self.segments)


@dataclass
class ChartField:
    chart: ChartId
    system: PlaneSystem
    m: int
    transverse: int | None
    evaluate: Callable[[float, float], tuple[float, float]]
    equilibria: list[Point]


def _compile(sys: PlaneSystem) -> Callable[[float, float], tuple[float, float]]:
    fx, fy = sys.X.compile_float(), sys.Y.compile_float()
    return lambda u, v: (fx(u, v), fy(u, v))


class ChartFields:
    """The three chart fields of a system, with its equilibria in each chart."""

    def __init__(self, sys: PlaneSystem, equilibria: Iterable[tuple[float, float, float]] | None = None):
        self.base = sys.chart
        first = reduce_system(sys, Which.FIRST)
        second = reduce_system(sys, Which.SECOND)
        if equilibria is None:
            equilibria = _sphere_equilibria(sys)
        eq = list(equilibria)
        self.by_chart: dict[ChartId, ChartField] = {}
        for chart, system, m, transverse in (
            (sys.chart, sys, 0, None),
            (first.system.chart, first.system, first.m, first.transverse_index),
            (second.system.chart, second.system, second.m, second.transverse_index),
        ):
            pts = [q for q in (from_homogeneous(h, chart) for h in eq) if q is not None]
            self.by_chart[chart] = ChartField(chart, system, m, transverse, _compile(system), pts)

    def __getitem__(self, chart: ChartId) -> ChartField:
        return self.by_chart[chart]

    def orientation_factor(self, chart: ChartId, p: Point) -> int:
        cf = self.by_chart[chart]
        if cf.transverse is None or cf.m % 2 == 0:
            return 1
        s = p[cf.transverse]
        return -1 if s < 0 else 1


def _sphere_equilibria(sys: PlaneSystem) -> list[tuple[float, float, float]]:
    from .structure import finite_equilibria, infinite_equilibria

    out = []
    for e in finite_equilibria(sys) + infinite_equilibria(sys):
        out.append(tuple(float(c) for c in to_homogeneous(e.point, e.chart)))
    return out


def direction_at(sys: PlaneSystem, chart: ChartId, p: Sequence[float], fields_: ChartFields | None = None):
    """Unit direction of the source flow at a point of ``chart``; None at equilibria.

    Where the point has a finite preimage in the home chart the source field
    is pushed forward; on the line at infinity the reduced field is used with
    the orientation factor sign(transverse)^m.
    """
    fields_ = fields_ or ChartFields(sys, equilibria=())
    p = (float(p[0]), float(p[1]))
    if chart is not sys.chart:
        try:
            pre = poincare_map_point(p, chart, sys.chart)
        except AnalysisError:
            pre = None
        if pre is not None:
            vec = pushforward(sys.field_at(*pre), pre, sys.chart, chart)
            return _unit(vec)
        vec = fields_[chart].evaluate(*p)
        unit = _unit(vec)
        if unit is None:
            return None
        k = fields_.orientation_factor(chart, p)
        return (k * unit[0], k * unit[1])
    return _unit(sys.field_at(*p))


def _unit(vec) -> Point | None:
    a, b = float(vec[0]), float(vec[1])
    norm = math.hypot(a, b)
    if norm == 0 or not math.isfinite(norm):
        return None
    return (a / norm, b / norm)


# Dormand-Prince 5(4) tableau
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B = _A[6] + (0.0,)
_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40)


class _ZeroField(Exception):
    pass


def _dp45_step(f, y: Point, h: float):
    """One Dormand-Prince step: (fifth-order point, error estimate vector)."""
    ks = []
    for i in range(7):
        u, v = y
        for a, k in zip(_A[i], ks):
            u += h * a * k[0]
            v += h * a * k[1]
        ks.append(f(u, v))
    u = y[0] + h * sum(b * k[0] for b, k in zip(_B, ks))
    v = y[1] + h * sum(b * k[1] for b, k in zip(_B, ks))
    eu = h * sum(e * k[0] for e, k in zip(_E, ks))
    ev = h * sum(e * k[1] for e, k in zip(_E, ks))
    return (u, v), (eu, ev)


def _unit_field(evaluate, sign: int):
    def f(u: float, v: float) -> Point:
        a, b = evaluate(u, v)
        norm = math.hypot(a, b)
        if norm == 0 or not math.isfinite(norm):
            raise _ZeroField
        return (sign * a / norm, sign * b / norm)

    return f


def _near(p: Point, pts: list[Point], radius: float) -> bool:
    return any(abs(p[0] - q[0]) <= radius and abs(p[1] - q[1]) <= radius for q in pts)


def _best_chart(p: Point, chart: ChartId) -> ChartId:
    h = to_homogeneous(p, chart)
    return max(ChartId, key=lambda c: (abs(h[(c.value + 2) % 3]), -c.value))


def integrate_trajectory(
    sys: PlaneSystem,
    seed: Seed | tuple,
    cfg: IntegratorConfig = IntegratorConfig(),
    orientation: Orientation = Orientation.FORWARD,
    fields_: ChartFields | None = None,
) -> Trajectory:
    """Follow the trajectory through ``seed`` for at most ``cfg.max_arc_length``."""
    fields_ = fields_ or ChartFields(sys)
    chart, p = seed[0], (float(seed[1][0]), float(seed[1][1]))
    traj = Trajectory(Seed(chart, p), orientation)
    cf = fields_[chart]
    if _near(p, cf.equilibria, cfg.equilibrium_radius) or _unit(cf.evaluate(*p)) is None:
        raise NotAnEquilibriumError(f"seed {p} in chart {chart.label} is an equilibrium")
    sign = orientation.sign * fields_.orientation_factor(chart, p)
    seg = Segment(chart, [p], sign)
    traj.segments.append(seg)
    f = _unit_field(cf.evaluate, sign)
    h = min(cfg.max_step, 1e-2)
    arc, steps, index = 0.0, 0, 0
    termination = "max_arc_length"
    while arc < cfg.max_arc_length:
        if steps >= cfg.max_steps:
            termination = "max_steps"
            break
        steps += 1
        h = min(h, cfg.max_step, cfg.max_arc_length - arc)
        try:
            q, (eu, ev) = _dp45_step(f, p, h)
        except _ZeroField:
            err = math.inf
        else:
            su = cfg.abs_tol + cfg.rel_tol * max(abs(p[0]), abs(q[0]))
            sv = cfg.abs_tol + cfg.rel_tol * max(abs(p[1]), abs(q[1]))
            err = max(abs(eu) / su, abs(ev) / sv)
        if not math.isfinite(err) or err > 1.0:
            h *= 0.2 if not math.isfinite(err) else max(0.2, 0.9 * err**-0.2)
            if h < cfg.min_step:
                if _near(p, cf.equilibria, 10 * cfg.equilibrium_radius):
                    termination = "equilibrium"
                    break
                raise StepSizeUnderflowError(chart.label, p)
            continue
        arc += h
        index += 1
        if cf.transverse is not None and cf.m % 2 and (p[cf.transverse] > 0) != (q[cf.transverse] > 0):
            if p[cf.transverse] != 0 and q[cf.transverse] != 0:
                traj.reversals.append(index)
        seg.points.append(q)
        last_dir = f(*p)
        p = q
        h = h * (5.0 if err == 0 else min(5.0, 0.9 * err**-0.2))
        if _near(p, cf.equilibria, cfg.equilibrium_radius):
            termination = "equilibrium"
            break
        if _unit(cf.evaluate(*p)) is None:
            termination = "equilibrium"
            break
        if max(abs(p[0]), abs(p[1])) > cfg.switch_out:
            target = _best_chart(p, chart)
            q = poincare_map_point(p, chart, target)
            if max(abs(q[0]), abs(q[1])) > cfg.switch_in:
                continue
            tangent = pushforward(last_dir, p, chart, target)
            cf = fields_[target]
            vec = cf.evaluate(*q)
            dot = tangent[0] * vec[0] + tangent[1] * vec[1]
            sign = -1 if dot < 0 else 1
            traj.switch_events.append(SwitchEvent(index, chart, target, p, q))
            chart, p = target, q
            seg = Segment(chart, [p], sign)
            traj.segments.append(seg)
            f = _unit_field(cf.evaluate, sign)
            scale = math.hypot(*tangent)
            h = max(min(h * scale, cfg.max_step), 1e-6)
            if _near(p, cf.equilibria, cfg.equilibrium_radius):
                termination = "equilibrium"
                break
    traj.termination = termination
    traj.arc_length = arc
    return traj


def first_integral_drift(F: Callable[[float, float], float], traj: Trajectory, chart: ChartId) -> float:
    """max |F(p) - F(p0)| / (|F(p0)| + 1) over the trajectory points in ``chart``."""
    pts = traj.points(chart)
    if not pts:
        return 0.0
    values = []
    for p in pts:
        try:
            value = float(F(*p))
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise ValueError(f"first integral undefined at {p}") from exc
        if not math.isfinite(value):
            raise ValueError(f"first integral undefined at {p}")
        values.append(value)
    f0 = values[0]
    return max(abs(v - f0) for v in values) / (abs(f0) + 1.0)


def _disc_to_chart(d: Point) -> Point:
    r2 = d[0] ** 2 + d[1] ** 2
    s = math.sqrt(1.0 - r2)
    return (d[0] / s, d[1] / s)


def _sphere_distance(a, b) -> float:
    plus = math.dist(a, b)
    minus = math.dist(a, tuple(-c for c in b))
    return min(plus, minus)


SEPARATRIX_OFFSET = 1e-4
DEDUP_DISTANCE = 0.05


def seed_plan(sys: PlaneSystem, equilibria: Sequence = (), density: int = 8) -> list[Seed]:
    """Polar grid of seeds in each chart's disc plus separatrix seeds near saddles.

    Each chart gets density^2 seeds on a polar grid of its disc; a seed is
    dropped when its point of the sphere lies within 0.05 of one already
    kept. Every saddle contributes four seeds offset along its eigenvectors.
    """
    if density < 1:
        raise ValueError("density must be at least 1")
    seeds: list[Seed] = []
    kept: list[tuple[float, float, float]] = []
    home = sys.chart
    for chart in (home, home.next, home.previous):
        for i in range(density):
            r = 0.95 * (i + 1) / (density + 1)
            for j in range(density):
                phi = 2 * math.pi * (j + 0.5 * (i % 2)) / density
                d = (r * math.cos(phi), r * math.sin(phi))
                p = _disc_to_chart(d)
                s = sphere_point(p, chart)
                if any(_sphere_distance(s, t) < DEDUP_DISTANCE for t in kept):
                    continue
                kept.append(s)
                seeds.append(Seed(chart, (round(p[0], 15), round(p[1], 15))))
    from .structure import EquilibriumKind

    for e in equilibria:
        if e.kind is not EquilibriumKind.SADDLE:
            continue
        for v in e.eigenvectors():
            for k in (1, -1):
                q = (e.point[0] + k * SEPARATRIX_OFFSET * v[0], e.point[1] + k * SEPARATRIX_OFFSET * v[1])
                seeds.append(Seed(e.chart, q))
    return seeds
