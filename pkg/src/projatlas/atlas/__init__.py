"""Three-disc projective atlas, SVG rendering and the JSON analysis report."""

from .report import Analysis, analyze, format_number, report_dict, write_report_json
from .scene import AtlasDocument, ChartScene, Marker, build_atlas, build_scenes
from .svg import SvgOptions, render_svg

__all__ = [
    "Analysis",
    "AtlasDocument",
    "ChartScene",
    "Marker",
    "SvgOptions",
    "analyze",
    "build_atlas",
    "build_scenes",
    "format_number",
    "render_svg",
    "report_dict",
    "write_report_json",
]
