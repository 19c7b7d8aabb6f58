"""SVG pictures of a polygon, its edge pairs, and its lattice translates.

Output is byte-stable: every coordinate is a rational approximation within
1e-6 printed with six decimals.
"""

from __future__ import annotations

from typing import Optional

from .numfield import Rational
from .planar import Polygon, Vec, edge_pairs
from .subgroup import LatticeBasis

__all__ = ["render_svg", "default_window", "lattice_points_in_window"]

EPS = Rational(1, 10 ** 6)
_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")


def _num(x) -> str:
    q = x.approx(EPS) if hasattr(x, "approx") else Rational(x)
    return f"{float(q):.6f}"


def _pt(v: Vec) -> str:
    # SVG y grows downward
    return f"{_num(v.x)},{_num(-v.y)}"


def default_window(P: Polygon) -> tuple:
    """Three times the bounding box of P, same center: (xmin, xmax, ymin, ymax)."""
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    return x0 - w, x1 + w, y0 - h, y1 + h


def lattice_points_in_window(L: LatticeBasis, window) -> list:
    """All lattice points inside the closed window, in (m, k) order."""
    spec = L.b1.field
    xmin, xmax, ymin, ymax = (spec.element((c,)) if not hasattr(c, "field") else c for c in window)
    corners = [Vec(x, y) for x in (xmin, xmax) for y in (ymin, ymax)]
    cs = [L.coords(c) for c in corners]
    pts = []
    for m in range(min(c[0] for c in cs).floor(), max(c[0] for c in cs).ceil() + 1):
        for k in range(min(c[1] for c in cs).floor(), max(c[1] for c in cs).ceil() + 1):
            p = L.point(m, k)
            if xmin <= p.x <= xmax and ymin <= p.y <= ymax:
                pts.append(p)
    return pts


def _arrow(a: Vec, b: Vec, color: str, label: str) -> list:
    mid = (a + b) * Rational(1, 2)
    return [
        f'  <line x1="{_num(a.x)}" y1="{_num(-a.y)}" x2="{_num(b.x)}" y2="{_num(-b.y)}" '
        f'stroke="{color}" stroke-width="0.02" marker-end="url(#arrow)"/>',
        f'  <text x="{_num(mid.x)}" y="{_num(-mid.y)}" font-size="0.2" fill="{color}">{label}</text>',
    ]


def render_svg(P: Polygon, L: Optional[LatticeBasis] = None, k: Optional[int] = None,
               window: Optional[tuple] = None) -> str:
    """SVG 1.1 document.

    With a lattice: the translates P + l for every lattice point l in the
    window.  Without one: the outline of P with its edge vectors e_j and
    translation vectors tau_j drawn as labelled arrows.
    """
    window = window or default_window(P)
    xmin, xmax, ymin, ymax = (_num(c) for c in window)
    width = f"{float(xmax) - float(xmin):.6f}"
    height = f"{float(ymax) - float(ymin):.6f}"
    top = f"{-float(ymax):.6f}"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{xmin} {top} {width} {height}" width="600" height="600">',
        "  <defs>",
        '    <marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="4" '
        'markerHeight="4" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker>',
        "  </defs>",
    ]
    if k is not None:
        out.append(f"  <title>level {k}</title>")
    if L is None:
        pts = " ".join(_pt(v) for v in P.vertices)
        out.append(f'  <polygon points="{pts}" fill="#dddddd" stroke="black" stroke-width="0.02"/>')
        pairing = edge_pairs(P)
        vs = P.vertices
        for j in range(1, pairing.n + 1):
            color = _PALETTE[(j - 1) % len(_PALETTE)]
            out += _arrow(vs[j - 1], vs[j], color, f"e{j}")
            out += _arrow(vs[j], vs[j + pairing.n - 1], color, f"&#964;{j}")
    else:
        for ell in lattice_points_in_window(L, window):
            pts = " ".join(_pt(v + ell) for v in P.vertices)
            out.append(
                f'  <polygon points="{pts}" fill="#1f77b4" fill-opacity="0.15" '
                'stroke="black" stroke-width="0.01"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
