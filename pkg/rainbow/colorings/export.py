"""DOT and TikZ drawings of a coloring.

Vertices sit on a circle, vertex 1 at the top and the rest clockwise. Color c
is drawn with ``PALETTE[c - 1]``; the first six entries follow the usual
red/blue/green/brown/gray/yellow drawing of the K_13 certificate. Output is
byte-deterministic: fixed palette, lexicographic edge order, no timestamps.
"""

from __future__ import annotations

import math

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import color_classes
from rainbow.colorings.exceptions import PaletteExhausted

PALETTE = (
    "red",
    "blue",
    "green",
    "brown",
    "gray",
    "yellow",
    "orange",
    "purple",
    "cyan",
    "magenta",
    "olive",
    "teal",
)
DOT = "dot"
TIKZ = "tikz"
EXPORT_FORMATS = (DOT, TIKZ)
RADIUS = 2.5


def _check_palette(coloring: EdgeColoring) -> None:
    if coloring.ell > len(PALETTE):
        msg = f"{coloring.ell} colors but only {len(PALETTE)} palette entries"
        raise PaletteExhausted(msg)


def vertex_angle(v: int, n: int) -> float:
    """Angle in degrees of vertex v: 90 for vertex 1, decreasing clockwise."""
    return 90.0 - (v - 1) * 360.0 / n


def to_dot(coloring: EdgeColoring) -> str:
    _check_palette(coloring)
    lines = [
        "graph coloring {",
        '  graph [layout=neato, splines=false, outputorder=edgesfirst];',
        '  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];',
    ]
    for v in range(1, coloring.n + 1):
        theta = math.radians(vertex_angle(v, coloring.n))
        x, y = RADIUS * math.cos(theta), RADIUS * math.sin(theta)
        lines.append(f'  {v} [pos="{x:.4f},{y:.4f}!"];')
    lines.extend(
        f'  {u} -- {v} [color="{PALETTE[c - 1]}", class="c{c}"];'
        for u, v, c in coloring.edges()
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tikz(coloring: EdgeColoring) -> str:
    _check_palette(coloring)
    lines = [
        r"\documentclass[tikz,border=5pt]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[scale=1.2,"
        r" vtx/.style={circle, fill=black, inner sep=1.5pt}]",
    ]
    for v in range(1, coloring.n + 1):
        angle = vertex_angle(v, coloring.n)
        lines.append(
            rf"\path ({angle:.4f}:{RADIUS}) coordinate ({v})"
            rf" node[vtx, label={angle:.4f}:{{\small {v}}}]{{}};",
        )
    for c, edges in color_classes(coloring).items():
        lines.append(f"% color {c}: {len(edges)} edges")
        lines.extend(
            rf"\draw[color={PALETTE[c - 1]}] ({u}) to ({v});" for u, v in edges
        )
    lines.extend([r"\end{tikzpicture}", r"\end{document}"])
    return "\n".join(lines) + "\n"


def export(coloring: EdgeColoring, fmt: str) -> str:
    if fmt == TIKZ:
        return to_tikz(coloring)
    return to_dot(coloring)
