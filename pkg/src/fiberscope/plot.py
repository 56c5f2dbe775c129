"""Minimal SVG renderings of a lattice path and a norm ball."""

from __future__ import annotations

from .alexnorm import RatPolygon
from .words import LatticePath

SIZE = 400
MARGIN = 30


def _frame(points):
    xs = [float(x) for x, _ in points] + [0.0]
    ys = [float(y) for _, y in points] + [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (SIZE - 2 * MARGIN) / span

    def to_px(p):
        x, y = float(p[0]), float(p[1])
        return MARGIN + (x - x0) * scale, SIZE - MARGIN - (y - y0) * scale

    return to_px


def _doc(body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>", ""])


def path_svg(path: LatticePath) -> str:
    to_px = _frame(path.vertices)
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(to_px, path.vertices))
    sx, sy = to_px(path.vertices[0])
    ex, ey = to_px(path.vertices[-1])
    return _doc([
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>',
        f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="4" fill="green"/>',
        f'<circle cx="{ex:.2f}" cy="{ey:.2f}" r="4" fill="red"/>',
    ])


def polygon_svg(poly: RatPolygon) -> str:
    to_px = _frame(poly.vertices)
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(to_px, poly.vertices))
    ox, oy = to_px((0, 0))
    body = [
        f'<line x1="0" y1="{oy:.2f}" x2="{SIZE}" y2="{oy:.2f}" stroke="#bbb"/>',
        f'<line x1="{ox:.2f}" y1="0" x2="{ox:.2f}" y2="{SIZE}" stroke="#bbb"/>',
        f'<polygon points="{pts}" fill="#cde" stroke="black" stroke-width="2"/>',
    ]
    for v in poly.vertices:
        x, y = to_px(v)
        label = f"({v[0]}, {v[1]})"
        body.append(f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="11">{label}</text>')
    return _doc(body)
