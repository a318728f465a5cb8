"""ASCII and SVG drawings of regions and tilings."""

from __future__ import annotations

import math
from typing import Optional
from xml.sax.saxutils import escape

from .regions import LEFT, RIGHT, VERTICAL, CellGrid, Tiling, is_up

_ASCII_LOZENGE = {LEFT: "L", RIGHT: "R", VERTICAL: "V"}
CROSSING_MARK = "#"


def _is_crossing(grid: CellGrid, lz) -> bool:
    return (lz.orientation == VERTICAL and grid.labels.get("kind") == "hexagon"
            and lz.up[0] == grid.diagonal)


def render_ascii(grid: CellGrid, tiling: Optional[Tiling] = None, title: str = "") -> str:
    """One character per unit triangle, rows top to bottom.

    Untiled cells print as ``^``/``v``; dents as ``x``. In a tiling each cell
    shows its lozenge: ``L``, ``R``, ``V``, or ``#`` for a vertical lozenge
    crossing the dented diagonal. A dashed rule marks the diagonal.
    """
    every = grid.cells | grid.removed
    lines = [title] if title else []
    if not every:
        lines.append("(empty region)")
        return "\n".join(lines) + "\n"
    base = min(s - r for r, s in every)
    width = max(s - r for r, s in every) - base + 1
    mark = {}
    if tiling is not None:
        for lz in tiling:
            ch = CROSSING_MARK if _is_crossing(grid, lz) else _ASCII_LOZENGE[lz.orientation]
            mark[lz.up] = mark[lz.down] = ch
    label_w = len(str(grid.height))
    for r in range(1, grid.height + 1):
        row = [" "] * width
        for rr, s in every:
            if rr != r:
                continue
            if (rr, s) in grid.removed:
                ch = "x"
            elif (rr, s) in mark:
                ch = mark[(rr, s)]
            else:
                ch = "^" if is_up((rr, s)) else "v"
            row[s - r - base] = ch
        lines.append(f"{r:>{label_w}} | " + "".join(row).rstrip())
        if grid.labels.get("kind") == "hexagon" and r == grid.diagonal and r < grid.height:
            lines.append(" " * label_w + " + " + "-" * width)
    return "\n".join(lines) + "\n"


_H = math.sqrt(3) / 2
_UNIT = 20.0


def _point(y: int, p: int) -> tuple:
    return ((p - y / 2) * _UNIT, y * _H * _UNIT)


def _vertices(cell) -> list:
    r, s = cell
    p = s // 2
    if is_up(cell):
        return [(r, p), (r, p + 1), (r - 1, p)]
    return [(r - 1, p), (r - 1, p + 1), (r, p + 1)]


def _polygon(points: list, cls: str) -> str:
    pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
    return f'  <polygon class="{cls}" points="{pts}"/>'


def _lozenge_outline(lz) -> list:
    pts = {_point(*v) for c in lz.cells() for v in _vertices(c)}
    cx = sum(x for x, _ in pts) / len(pts)
    cy = sum(y for _, y in pts) / len(pts)
    return sorted(pts, key=lambda q: math.atan2(q[1] - cy, q[0] - cx))


_STYLE = (".up{fill:#f4f4f4;stroke:#999}.down{fill:#e4e4e4;stroke:#999}"
          ".dent{fill:#333}.left{fill:#8fb3de}.right{fill:#f0c674}"
          ".vertical{fill:#b5d99c}.crossing{fill:#f4a6c6}"
          "polygon{stroke:#222;stroke-width:0.8}")


def render_svg(grid: CellGrid, tiling: Optional[Tiling] = None, title: str = "") -> str:
    every = grid.cells | grid.removed
    pts = [_point(*v) for c in every for v in _vertices(c)] or [(0.0, 0.0)]
    pad = _UNIT / 2
    x0 = min(x for x, _ in pts) - pad
    y0 = min(y for _, y in pts) - pad
    w = max(x for x, _ in pts) - x0 + pad
    h = max(y for _, y in pts) - y0 + pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}">',
        f"  <title>{escape(title)}</title>",
        f"  <style>{_STYLE}</style>",
    ]
    for cell in sorted(grid.removed):
        out.append(_polygon([_point(*v) for v in _vertices(cell)], "dent"))
    if tiling is None:
        for cell in sorted(grid.cells):
            out.append(_polygon([_point(*v) for v in _vertices(cell)],
                                "up" if is_up(cell) else "down"))
    else:
        for lz in sorted(tiling, key=lambda z: (z.up, z.down)):
            cls = lz.orientation + (" crossing" if _is_crossing(grid, lz) else "")
            out.append(_polygon(_lozenge_outline(lz), cls))
    out.append("</svg>")
    return "\n".join(out) + "\n"
