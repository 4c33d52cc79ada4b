"""
SVG rendering of walks.

The only place floating point appears: coordinates are embedded with
``to_cartesian`` and written with 6 decimals, y flipped so counterclockwise
turns look counterclockwise.
"""
import svgwrite

from ..engine.lattice import ORIGIN, to_cartesian

STROKE = "#1f4e79"
START_FILL = "#c64935"


def _fmt(x):
    text = "%.6f" % x
    # Avoid "-0.000000"
    return "0.000000" if text == "-0.000000" else text


def render_svg(path, steps=None) -> str:
    states = path.states if steps is None else path.states[:steps + 1]
    points = [to_cartesian(s.position, path.grid) for s in states]
    points = [(x, -y) for x, y in points]

    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    # 1 unit margin around the bounding box
    left, top = min(xs) - 1, min(ys) - 1
    width, height = max(xs) - min(xs) + 2, max(ys) - min(ys) + 2

    dwg = svgwrite.Drawing(
        size=(_fmt(width * 20), _fmt(height * 20)),
        viewBox=" ".join(_fmt(v) for v in (left, top, width, height)),
        debug=False
    )
    dwg.add(dwg.polyline(
        points=[(_fmt(x), _fmt(y)) for x, y in points],
        fill="none",
        stroke=STROKE,
        stroke_width="0.08",
        stroke_linejoin="round"
    ))

    sx, sy = to_cartesian(ORIGIN, path.grid)
    dwg.add(dwg.circle(center=(_fmt(sx), _fmt(-sy)), r="0.15", fill=START_FILL))
    return dwg.tostring()
