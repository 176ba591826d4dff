"""Deterministic SVG rendering of point sets, tree edges, wedges, and
communication edges."""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from .geometry import Point
from .orientation import OrientationAssignment

_MARGIN = 24.0
_NODE_R = 4.0


class _View:
    def __init__(self, points: Sequence[Point], size: float):
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        pad = 0.6
        self.minx, self.maxx = min(xs) - pad, max(xs) + pad
        self.miny, self.maxy = min(ys) - pad, max(ys) + pad
        spanx = max(self.maxx - self.minx, 1e-6)
        spany = max(self.maxy - self.miny, 1e-6)
        self.scale = (size - 2 * _MARGIN) / max(spanx, spany)
        self.w = spanx * self.scale + 2 * _MARGIN
        self.h = spany * self.scale + 2 * _MARGIN

    def px(self, x: float, y: float) -> Tuple[float, float]:
        return (
            _MARGIN + (x - self.minx) * self.scale,
            _MARGIN + (self.maxy - y) * self.scale,
        )


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _sector_path(view: _View, p: Point, theta: float, alpha: float, r: float) -> str:
    cx, cy = view.px(p.x, p.y)
    rr = r * view.scale
    a0 = theta - 0.5 * alpha
    a1 = theta + 0.5 * alpha
    x0, y0 = cx + rr * math.cos(a0), cy - rr * math.sin(a0)
    x1, y1 = cx + rr * math.cos(a1), cy - rr * math.sin(a1)
    large = 1 if alpha > math.pi else 0
    return (
        f"M {_fmt(cx)} {_fmt(cy)} L {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(rr)} {_fmt(rr)} 0 {large} 0 {_fmt(x1)} {_fmt(y1)} Z"
    )


def render_scene(
    points: Sequence[Point],
    tree_edges: Optional[Sequence[Tuple[int, int]]] = None,
    assignment: Optional[OrientationAssignment] = None,
    radius: Optional[float] = None,
    comm_edges: Optional[Sequence[Tuple[int, int]]] = None,
    size: float = 640.0,
) -> str:
    """Compose an SVG 1.1 document; byte-identical for identical input."""
    pts = sorted(points, key=lambda p: p.id)
    by_id = {p.id: p for p in pts}
    view = _View(pts, size)
    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(view.w)}" height="{_fmt(view.h)}" '
        f'viewBox="0 0 {_fmt(view.w)} {_fmt(view.h)}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#c43c3c"/></marker>',
        "</defs>",
        f'<rect width="{_fmt(view.w)}" height="{_fmt(view.h)}" fill="white"/>',
    ]

    if assignment is not None:
        r = radius if radius is not None else assignment.guaranteed_radius
        for p in pts:
            d = _sector_path(view, p, assignment.theta[p.id], assignment.alpha, r)
            out.append(
                f'<path d="{d}" fill="#4a7dbf" fill-opacity="0.12" '
                'stroke="#4a7dbf" stroke-opacity="0.5" stroke-width="0.8"/>'
            )

    for a, b in sorted(tree_edges or []):
        xa, ya = view.px(by_id[a].x, by_id[a].y)
        xb, yb = view.px(by_id[b].x, by_id[b].y)
        out.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            'stroke="#444444" stroke-width="1.5"/>'
        )

    for a, b in sorted(comm_edges or []):
        pa, pb = by_id[a], by_id[b]
        xa, ya = view.px(pa.x, pa.y)
        xb, yb = view.px(pb.x, pb.y)
        dx, dy = xb - xa, yb - ya
        norm = math.hypot(dx, dy)
        if norm < 1e-9:
            continue
        trim = (_NODE_R + 4.0) / norm
        xb -= dx * trim
        yb -= dy * trim
        out.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            'stroke="#c43c3c" stroke-width="1.0" stroke-opacity="0.8" '
            'marker-end="url(#arrow)"/>'
        )

    for p in pts:
        x, y = view.px(p.x, p.y)
        out.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(_NODE_R)}" '
            'fill="#222222" stroke="white" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x + 6.0)}" y="{_fmt(y - 6.0)}" '
            f'font-family="Helvetica,Arial,sans-serif" font-size="11">{p.id}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
