"""SVG renderings of frameworks, optionally colored by a stress.

Coordinates are scaled to a fixed 800x800 viewport with a margin; numbers
are emitted with six decimals so identical inputs give identical bytes.
Positive stress edges are drawn red, negative blue, zero dashed gray, with
stroke width proportional to the absolute stress value.
"""

from .errors import DegenerateEdge, LengthMismatch
from .framework import degenerate_edges

_SIZE = 800.0
_MARGIN = 40.0
_POS_COLOR = "#c0392b"
_NEG_COLOR = "#2471a3"
_ZERO_COLOR = "#7f8c8d"


def _fmt(x):
    return f"{x:.6f}"


def emit_svg(f, s=None):
    """Render the framework to an SVG string."""
    bad = degenerate_edges(f)
    if bad:
        keys = ", ".join(f.edge_key(k) for k in sorted(bad))
        raise DegenerateEdge(f"cannot draw degenerate edges: {keys}")
    if s is not None and len(s) != len(f.edges):
        raise LengthMismatch(
            f"stress length {len(s)} != edge count {len(f.edges)}")

    xs = [float(p.x) for p in f.positions.values()]
    ys = [float(p.y) for p in f.positions.values()]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    scale = (_SIZE - 2 * _MARGIN) / max(span_x, span_y)

    def place(p):
        # y flipped: SVG grows downward
        x = _MARGIN + (float(p.x) - min(xs)) * scale
        y = _SIZE - _MARGIN - (float(p.y) - min(ys)) * scale
        return x, y

    widths = None
    if s is not None:
        peak = max((abs(float(v)) for v in s), default=0.0) or 1.0
        widths = [0.75 + 4.0 * abs(float(v)) / peak for v in s]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(_SIZE)}" height="{_fmt(_SIZE)}" '
        f'viewBox="0 0 {_fmt(_SIZE)} {_fmt(_SIZE)}">'
    ]
    for k in range(len(f.edges)):
        p, q = f.edge_points(k)
        x1, y1 = place(p)
        x2, y2 = place(q)
        if s is None:
            color, width, dash = "#2c3e50", 1.5, ""
        elif s[k] > 0:
            color, width, dash = _POS_COLOR, widths[k], ""
        elif s[k] < 0:
            color, width, dash = _NEG_COLOR, widths[k], ""
        else:
            color, width, dash = _ZERO_COLOR, 0.75, ' stroke-dasharray="6 4"'
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}"{dash}/>')
    for vid in f.vertex_ids:
        x, y = place(f.pos(vid))
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.000000" '
            f'fill="#17202a"/>')
        parts.append(
            f'<text x="{_fmt(x + 5)}" y="{_fmt(y - 5)}" '
            f'font-family="monospace" font-size="11">{vid}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
