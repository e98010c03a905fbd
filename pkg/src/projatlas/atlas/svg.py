"""Deterministic SVG serialization of an atlas document."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .scene import AtlasDocument, ChartScene, Marker


@dataclass(frozen=True)
class SvgOptions:
    disc_size: int = 400
    gutter: int = 40
    title_height: int = 30
    curve_color: str = "#1f4e79"
    curve_width: float = 0.8
    glyph_radius: float = 5.0
    # minimal distance in pixels between consecutive polyline vertices
    min_spacing: float = 0.5


def fmt(value: float) -> str:
    """Fixed six-decimal formatting with negative zero folded to zero."""
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


class _Frame:
    """Maps disc coordinates of one scene to SVG user units."""

    def __init__(self, index: int, opts: SvgOptions):
        self.radius = opts.disc_size / 2
        self.cx = opts.gutter + index * (opts.disc_size + opts.gutter) + self.radius
        self.cy = opts.gutter + opts.title_height + self.radius

    def __call__(self, p) -> tuple[str, str]:
        return fmt(self.cx + self.radius * p[0]), fmt(self.cy - self.radius * p[1])


def _thin(points, spacing: float) -> list:
    """Drop points closer than ``spacing`` to the last kept one (endpoints stay)."""
    kept = [points[0]]
    for p in points[1:-1]:
        if math.dist(p, kept[-1]) >= spacing:
            kept.append(p)
    kept.append(points[-1])
    return kept


def _polyline(points, frame: _Frame, opts: SvgOptions) -> str:
    coords = " ".join(",".join(frame(p)) for p in _thin(points, opts.min_spacing / frame.radius))
    return (
        f'<polyline points="{coords}" fill="none" stroke="{opts.curve_color}" '
        f'stroke-width="{fmt(opts.curve_width)}"/>'
    )


def _glyph(m: Marker, frame: _Frame, opts: SvgOptions) -> str:
    x, y = frame(m.position)
    r = opts.glyph_radius
    title = f"<title>{escape(m.label)}</title>"
    cls = f'class="{m.role} {m.glyph}{" boundary" if m.boundary else ""}"'
    if m.glyph == "saddle":
        fx, fy = float(x), float(y)
        d = (
            f"M{fmt(fx - r)},{fmt(fy - r)} L{fmt(fx + r)},{fmt(fy + r)} "
            f"M{fmt(fx - r)},{fmt(fy + r)} L{fmt(fx + r)},{fmt(fy - r)}"
        )
        return f'<path {cls} d="{d}" stroke="#b00000" stroke-width="2" fill="none">{title}</path>'
    if m.glyph == "node":
        return f'<circle {cls} cx="{x}" cy="{y}" r="{fmt(r)}" fill="#b00000">{title}</circle>'
    if m.glyph in ("focus", "center-or-focus"):
        # two and a half turns of an Archimedean spiral
        fx, fy = float(x), float(y)
        pts = []
        for k in range(31):
            t = 5 * math.pi * k / 30
            rr = r * k / 30
            pts.append(f"{fmt(fx + rr * math.cos(t))},{fmt(fy - rr * math.sin(t))}")
        dash = ' stroke-dasharray="2,1"' if m.glyph == "center-or-focus" else ""
        return (
            f'<polyline {cls} points="{" ".join(pts)}" stroke="#b00000" stroke-width="1.5" '
            f'fill="none"{dash}>{title}</polyline>'
        )
    if m.glyph == "degenerate":
        return (
            f'<rect {cls} x="{fmt(float(x) - r)}" y="{fmt(float(y) - r)}" width="{fmt(2 * r)}" '
            f'height="{fmt(2 * r)}" fill="#b00000">{title}</rect>'
        )
    if m.glyph == "contact" and m.normal is not None:
        # half-disc bulging toward the certified side (SVG y axis points down)
        nx, ny = m.normal[0], -m.normal[1]
        fx, fy = float(x), float(y)
        pts = []
        for k in range(13):
            phi = -math.pi / 2 + math.pi * k / 12
            c, s = math.cos(phi), math.sin(phi)
            pts.append(f"{fmt(fx + r * (c * nx - s * ny))},{fmt(fy + r * (c * ny + s * nx))}")
        return f'<polygon {cls} points="{" ".join(pts)}" fill="#2a7f2a">{title}</polygon>'
    return f'<circle {cls} cx="{x}" cy="{y}" r="{fmt(r)}" fill="none" stroke="#2a7f2a" stroke-width="1.5">{title}</circle>'


def _scene(index: int, scene: ChartScene, opts: SvgOptions) -> list[str]:
    frame = _Frame(index, opts)
    cx, cy, r = fmt(frame.cx), fmt(frame.cy), fmt(frame.radius)
    out = [f'<g id="scene-{scene.chart.label}">']
    out.append(
        f'<text x="{cx}" y="{fmt(opts.gutter + opts.title_height / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(scene.title)}</text>'
    )
    out.append(f'<clipPath id="clip-{scene.chart.label}"><circle cx="{cx}" cy="{cy}" r="{r}"/></clipPath>')
    # axes of the chart
    left, right = frame((-1, 0)), frame((1, 0))
    top, bottom = frame((0, 1)), frame((0, -1))
    out.append(
        f'<path d="M{left[0]},{left[1]} L{right[0]},{right[1]} M{bottom[0]},{bottom[1]} L{top[0]},{top[1]}" '
        'stroke="#999999" stroke-width="0.5" fill="none"/>'
    )
    u, v = scene.labels
    ux, uy = frame((1.03, -0.06))
    vx, vy = frame((0.04, 1.04))
    out.append(f'<text x="{ux}" y="{uy}" font-family="serif" font-size="12">{escape(u)}</text>')
    out.append(f'<text x="{vx}" y="{vy}" font-family="serif" font-size="12">{escape(v)}</text>')
    out.append(f'<g clip-path="url(#clip-{scene.chart.label})">')
    out.extend(_polyline(c, frame, opts) for c in scene.curves)
    out.append("</g>")
    out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#000000" stroke-width="1.5"/>')
    out.extend(_glyph(m, frame, opts) for m in scene.markers)
    out.append("</g>")
    return out


def render_svg(doc: AtlasDocument, opts: SvgOptions = SvgOptions()) -> bytes:
    """Three discs side by side; byte-identical for identical documents."""
    n = len(doc.scenes)
    width = opts.gutter + n * (opts.disc_size + opts.gutter)
    height = 2 * opts.gutter + opts.title_height + opts.disc_size
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for i, scene in enumerate(doc.scenes):
        lines.extend(_scene(i, scene, opts))
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
