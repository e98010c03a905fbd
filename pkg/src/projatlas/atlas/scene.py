"""Three-disc atlas: trajectories and markers embedded in each chart's disc."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import ProjAtlasError
from ..flow import ChartFields, IntegratorConfig, Orientation, Trajectory, integrate_trajectory, seed_plan
from ..projective import ChartId, PlaneSystem, disc_of_sphere, sphere_point, to_homogeneous
from ..structure import ContactPoint, Equilibrium, EquilibriumKind, Side
from .report import Analysis, analyze

Disc = tuple[float, float]
SIDE_PROBE = 1e-4

GLYPHS = {
    EquilibriumKind.SADDLE: "saddle",
    EquilibriumKind.NODE_STABLE: "node",
    EquilibriumKind.NODE_UNSTABLE: "node",
    EquilibriumKind.FOCUS_STABLE: "focus",
    EquilibriumKind.FOCUS_UNSTABLE: "focus",
    EquilibriumKind.CENTER_OR_FOCUS: "center-or-focus",
    EquilibriumKind.DEGENERATE: "degenerate",
}


@dataclass(frozen=True)
class Marker:
    """A glyph at a disc position.

    ``role`` is ``"equilibrium"`` or ``"contact"``; ``boundary`` marks points
    on the circle, which come in antipodal pairs. ``normal`` is the unit
    disc vector pointing to the side holding a contact trajectory (None when
    both sides or not a contact).
    """

    role: str
    glyph: str
    position: Disc
    boundary: bool
    label: str
    normal: Disc | None = None


@dataclass
class ChartScene:
    chart: ChartId
    curves: list[list[Disc]] = field(default_factory=list)
    markers: list[Marker] = field(default_factory=list)
    labels: tuple[str, str] = ("", "")

    @property
    def title(self) -> str:
        return self.chart.label


@dataclass
class AtlasDocument:
    scenes: list[ChartScene]
    analysis: Analysis | None = None
    errors: list[str] = field(default_factory=list)


def _split_polyline(sphere: Sequence[tuple[float, float, float]], chart: ChartId) -> list[list[Disc]]:
    """Disc images of a sphere polyline, broken where it crosses the scene's equator.

    A point on the boundary circle has two disc images. It takes the one
    nearest the previous image, or for a leading run the side of the first
    point with a definite sign.
    """
    k = (chart.value + 2) % 3
    signs = [1 if h[k] > 0 else (-1 if h[k] < 0 else 0) for h in sphere]
    lead = next((s for s in signs if s), 1)
    pieces: list[list[Disc]] = []
    current: list[Disc] = []
    prev_sign = 0
    for h, s in zip(sphere, signs):
        if s:
            if prev_sign and s != prev_sign:
                if len(current) > 1:
                    pieces.append(current)
                current = []
            prev_sign = s
            current.append(disc_of_sphere(h, chart))
            continue
        d = disc_of_sphere(h, chart)
        if current:
            if math.dist(_antipode(d), current[-1]) < math.dist(d, current[-1]):
                d = _antipode(d)
        elif lead < 0:
            d = _antipode(d)
        current.append(d)
    if len(current) > 1:
        pieces.append(current)
    return pieces


def _on_boundary(h, chart: ChartId) -> bool:
    return abs(h[(chart.value + 2) % 3]) <= 1e-12


def _antipode(d: Disc) -> Disc:
    return (-d[0], -d[1])


def _equilibrium_markers(e: Equilibrium, names, chart: ChartId, home: ChartId) -> list[Marker]:
    h = sphere_point(e.point, e.chart)
    glyph = GLYPHS[e.kind]
    label = e.direction.describe(names) if e.infinite else f"({e.point[0]:.4g}, {e.point[1]:.4g})"
    if _on_boundary(h, chart):
        # finite equilibria of the system only appear where they are finite
        if not e.infinite and chart is not home:
            return []
        d = disc_of_sphere(h, chart)
        return [
            Marker("equilibrium", glyph, d, True, label),
            Marker("equilibrium", glyph, _antipode(d), True, label),
        ]
    return [Marker("equilibrium", glyph, disc_of_sphere(h, chart), False, label)]


def _side_probe(c: ContactPoint, sign: int):
    """A chart point slightly off the touched line on the certified side."""
    u, v = c.point
    if c.line == "Oy":
        return c.chart, (u + sign * SIDE_PROBE, v)
    if c.line == "Ox":
        return c.chart, (u, v + sign * SIDE_PROBE)
    # equatorial: the source half-plane sign equals the transverse sign
    if c.direction.kind == "y":
        return c.chart, (u, v + sign * SIDE_PROBE)
    return c.chart, (u + sign * SIDE_PROBE, v)


def _contact_markers(c: ContactPoint, chart: ChartId) -> list[Marker]:
    h = sphere_point(c.point, c.chart)
    label = c.describe_side()
    d = disc_of_sphere(h, chart)
    normal = None
    if c.side in (Side.NONNEG, Side.NONPOS):
        src, q = _side_probe(c, 1 if c.side is Side.NONNEG else -1)
        hq = sphere_point(q, src)
        if _on_boundary(h, chart) and sum(a * b for a, b in zip(hq, h)) < 0:
            hq = tuple(-a for a in hq)
        dq = disc_of_sphere(hq, chart)
        if _on_boundary(h, chart):
            # the probe sits near one of the two antipodal copies
            if math.dist(dq, d) > math.dist(dq, _antipode(d)):
                d = _antipode(d)
        vec = (dq[0] - d[0], dq[1] - d[1])
        norm = math.hypot(*vec)
        normal = (vec[0] / norm, vec[1] / norm) if norm > 0 else None
    glyph = "contact" if normal is not None else "contact-both"
    markers = [Marker("contact", glyph, d, _on_boundary(h, chart), label, normal)]
    if _on_boundary(h, chart):
        flipped = None if normal is None else (-normal[0], -normal[1])
        markers.append(Marker("contact", glyph, _antipode(d), True, label, flipped))
    return markers


def build_scenes(
    analysis: Analysis, trajectories: Sequence[Trajectory], names: tuple[str, str]
) -> list[ChartScene]:
    home = analysis.system.chart
    scenes = []
    for chart in ChartId:
        scene = ChartScene(chart, labels=chart.var_names)
        for traj in trajectories:
            scene.curves.extend(_split_polyline(traj.sphere_points(), chart))
        for e in analysis.equilibria:
            scene.markers.extend(_equilibrium_markers(e, names, chart, home))
        for contacts in analysis.contacts.values():
            for c in contacts:
                h = sphere_point(c.point, c.chart)
                # axis contacts are drawn where the touched axis is visible as a finite line
                if c.line != "equator" and _on_boundary(h, chart) and chart is not home:
                    continue
                scene.markers.extend(_contact_markers(c, chart))
        scenes.append(scene)
    return scenes


def build_atlas(
    sys: PlaneSystem,
    cfg: IntegratorConfig = IntegratorConfig(),
    density: int = 8,
    analysis: Analysis | None = None,
) -> AtlasDocument:
    """Analyze ``sys``, integrate its seed plan both ways and embed everything in three discs."""
    analysis = analysis or analyze(sys)
    spheres = [tuple(float(c) for c in to_homogeneous(e.point, e.chart)) for e in analysis.equilibria]
    fields_ = ChartFields(sys, equilibria=spheres)
    trajectories: list[Trajectory] = []
    errors: list[str] = []
    for seed in seed_plan(sys, analysis.equilibria, density):
        for orientation in Orientation:
            try:
                trajectories.append(integrate_trajectory(sys, seed, cfg, orientation, fields_))
            except ProjAtlasError as exc:
                errors.append(f"seed {seed.chart.label} {seed.point} {orientation.value}: {exc}")
    return AtlasDocument(build_scenes(analysis, trajectories, sys.names), analysis, errors)
