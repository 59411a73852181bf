"""Static SVG previews.

Embedding heights span thousands of bits, so the y axis is signed-log scaled
(y -> sign(y) * log2(1 + |y|)); the picture is not metric.
"""
from __future__ import annotations

import math
from html import escape

from .embedding import Embedding
from .geometry import ExactPoint
from .graphs import Graph

MAX_PREVIEW_VERTICES = 8
MAX_PREVIEW_GRID = 400

_W, _H, _PAD = 640, 480, 40


def signed_log2(v: int) -> float:
    """sign(v) * log2(1 + |v|), accurate for integers of any size."""
    if v == 0:
        return 0.0
    a = abs(v) + 1
    shift = max(0, a.bit_length() - 53)
    return math.copysign(math.log2(a >> shift) + shift, v)


def _dyadic_float(pt: ExactPoint) -> float:
    shift = max(0, pt.x_num.bit_length() - 53)
    return math.ldexp(pt.x_num >> shift, shift - pt.x_pow2)


def _render(coords: list[tuple[float, float]], g: Graph, title: str, labels: bool) -> str:
    xs = [c[0] for c in coords] or [0.0]
    ys = [c[1] for c in coords] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (_W - 2 * _PAD) / ((x1 - x0) or 1.0)
    sy = (_H - 2 * _PAD) / ((y1 - y0) or 1.0)

    def at(c):
        return _PAD + (c[0] - x0) * sx, _H - _PAD - (c[1] - y0) * sy

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
           f"<title>{escape(title)}</title>",
           '<rect width="100%" height="100%" fill="white"/>']
    for u, v in g.edges():
        (ax, ay), (bx, by) = at(coords[u - 1]), at(coords[v - 1])
        out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="#4060a0" stroke-width="1"/>')
    for v, c in enumerate(coords, 1):
        px, py = at(c)
        out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="4" fill="#c03030"/>')
        if labels:
            out.append(f'<text x="{px + 6:.2f}" y="{py - 6:.2f}" font-size="12">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def embedding_svg(e: Embedding) -> str:
    if e.n > MAX_PREVIEW_VERTICES:
        raise ValueError(f"preview supports at most {MAX_PREVIEW_VERTICES} vertices")
    coords = [(_dyadic_float(p), signed_log2(p.y)) for p in e.points]
    return _render(coords, e.graph, "embedding preview (x linear, y signed-log2)", True)


def grid_svg(w: int, h: int, g: Graph) -> str:
    if (w + 1) * (h + 1) > MAX_PREVIEW_GRID:
        raise ValueError(f"preview supports at most {MAX_PREVIEW_GRID} grid points")
    coords = [(float(a), float(b)) for a in range(w + 1) for b in range(h + 1)]
    return _render(coords, g, f"visibility graph of the {w}x{h} grid window", False)
