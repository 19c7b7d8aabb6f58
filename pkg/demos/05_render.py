"""
Pictures
========

Render a polygon with its edge and translation vectors, and a patch of its
multiple tiling, as SVG files in the current directory.
"""

from pathlib import Path

from multitile import QQ, Vec, decide, validate_polygon
from multitile.render import render_svg

pts = [(0, 0), (1, 0), (2, 1), (2, 2), (1, 3), (0, 3), (-1, 2), (-1, 1)]
octagon = validate_polygon([Vec.of(QQ, x, y) for x, y in pts])

Path("octagon_outline.svg").write_text(render_svg(octagon))

verdict = decide(octagon)
svg = render_svg(octagon, verdict.lattice, verdict.level, window=(-2, 4, -2, 5))
Path("octagon_tiling.svg").write_text(svg)
print("wrote octagon_outline.svg and octagon_tiling.svg;", svg.count("<polygon"), "translates drawn")
