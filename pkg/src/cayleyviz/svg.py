"""Deterministic SVG 1.1 rendering of a layout.

Edges are colored by label (colors replace textual edge labels), vertices
are filled circles with the id centered, loops are rings with an arrowhead,
and an optional legend maps label names to colors.  Identical inputs yield
byte-identical documents: numbers are always formatted with three decimals
and a ``.`` separator, and element order is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cayley import label_name
from .layout import SEGMENT, EdgeGeometry, Layout

DEFAULT_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_LEGEND_ROW = 16.0
_LEGEND_SWATCH = 24.0
_LEGEND_PAD = 8.0


@dataclass(frozen=True)
class RenderOptions:
    canvas_margin: float = 20.0
    palette: tuple[str, ...] = DEFAULT_PALETTE
    stroke_width: float = 1.5
    show_legend: bool = True

    def __post_init__(self) -> None:
        if not self.palette:
            raise ValueError("palette must not be empty")

    def color(self, label: int) -> str:
        return self.palette[label % len(self.palette)]


def _fmt(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


@dataclass
class _Bounds:
    min_x: float = field(default=float("inf"))
    min_y: float = field(default=float("inf"))
    max_x: float = field(default=float("-inf"))
    max_y: float = field(default=float("-inf"))

    def add(self, x: float, y: float, pad: float = 0.0) -> None:
        self.min_x = min(self.min_x, x - pad)
        self.min_y = min(self.min_y, y - pad)
        self.max_x = max(self.max_x, x + pad)
        self.max_y = max(self.max_y, y + pad)


def _loop_path(cx: float, cy: float, r: float) -> str:
    # Full circle as two arcs so marker-end can sit on the seam.
    right_x, left_x = cx + r, cx - r
    return (
        f"M {_fmt(right_x)} {_fmt(cy)} "
        f"A {_fmt(r)} {_fmt(r)} 0 1 1 {_fmt(left_x)} {_fmt(cy)} "
        f"A {_fmt(r)} {_fmt(r)} 0 1 1 {_fmt(right_x)} {_fmt(cy)}"
    )


def render(
    layout: Layout,
    edges: Sequence[EdgeGeometry],
    opts: Optional[RenderOptions] = None,
) -> str:
    """Render a layout and its edges to an SVG document string."""
    if opts is None:
        opts = RenderOptions()
    rho = layout.vertex_radius

    bounds = _Bounds()
    for x, y in layout.positions:
        bounds.add(x, y, rho)
    for e in edges:
        if e.kind == SEGMENT:
            assert e.start is not None and e.end is not None
            bounds.add(*e.start)
            bounds.add(*e.end)
        else:
            assert e.ring_center is not None
            bounds.add(*e.ring_center, pad=e.ring_radius)

    used_labels = sorted({e.label for e in edges})
    legend_labels = used_labels if opts.show_legend else []
    legend_top = 0.0
    if legend_labels:
        block_height = len(legend_labels) * _LEGEND_ROW
        legend_top = bounds.min_y - _LEGEND_PAD - block_height
        bounds.add(bounds.min_x, legend_top)
        bounds.add(bounds.min_x + _LEGEND_SWATCH + 6.0 + 24.0, bounds.min_y)
    legend_left = bounds.min_x

    margin = opts.canvas_margin
    view_x = bounds.min_x - margin
    view_y = bounds.min_y - margin
    view_w = (bounds.max_x - bounds.min_x) + 2 * margin
    view_h = (bounds.max_y - bounds.min_y) + 2 * margin

    sw = _fmt(opts.stroke_width)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(view_x)} {_fmt(view_y)} {_fmt(view_w)} {_fmt(view_h)}">',
    ]

    used_colors = []
    for label in used_labels:
        color = opts.color(label)
        if color not in used_colors:
            used_colors.append(color)
    lines.append("<defs>")
    for color in used_colors:
        marker_id = f"arrow-{color.lstrip('#')}"
        lines.append(
            f'<marker id="{marker_id}" markerWidth="8" markerHeight="6" '
            'refX="8" refY="3" orient="auto" markerUnits="userSpaceOnUse">'
            f'<path d="M 0 0 L 8 3 L 0 6 Z" fill="{color}"/></marker>'
        )
    lines.append("</defs>")

    for e in edges:
        color = opts.color(e.label)
        marker = f"url(#arrow-{color.lstrip('#')})"
        if e.kind == SEGMENT:
            assert e.start is not None and e.end is not None
            lines.append(
                f'<line class="edge" x1="{_fmt(e.start[0])}" y1="{_fmt(e.start[1])}" '
                f'x2="{_fmt(e.end[0])}" y2="{_fmt(e.end[1])}" '
                f'stroke="{color}" stroke-width="{sw}" marker-end="{marker}"/>'
            )
        else:
            assert e.ring_center is not None
            path = _loop_path(e.ring_center[0], e.ring_center[1], e.ring_radius)
            lines.append(
                f'<path class="loop" d="{path}" fill="none" '
                f'stroke="{color}" stroke-width="{sw}" marker-end="{marker}"/>'
            )

    font_size = _fmt(rho)
    for v, (x, y) in enumerate(layout.positions):
        lines.append(
            f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(rho)}" '
            f'fill="#ffffff" stroke="#000000" stroke-width="{sw}"/>'
        )
        lines.append(
            f'<text class="vertex-id" x="{_fmt(x)}" y="{_fmt(y)}" '
            f'font-family="sans-serif" font-size="{font_size}" '
            'text-anchor="middle" dominant-baseline="central">'
            f"{v}</text>"
        )

    for row, label in enumerate(legend_labels):
        color = opts.color(label)
        y_mid = legend_top + row * _LEGEND_ROW + _LEGEND_ROW / 2.0
        x0 = legend_left
        x1 = legend_left + _LEGEND_SWATCH
        lines.append('<g class="legend-entry">')
        lines.append(
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y_mid)}" x2="{_fmt(x1)}" '
            f'y2="{_fmt(y_mid)}" stroke="{color}" stroke-width="{sw}"/>'
        )
        lines.append(
            f'<text x="{_fmt(x1 + 6.0)}" y="{_fmt(y_mid)}" '
            'font-family="sans-serif" font-size="12.000" '
            f'dominant-baseline="central">{label_name(label)}</text>'
        )
        lines.append("</g>")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
