"""Static SVG drawings of points, lines and curves in the affine chart z = 1.

Curves are traced with marching squares on a regular grid; that sampling is
cosmetic only. Points at infinity cannot be drawn and are listed in a legend.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .curves import HomCurve, monomials
from .projective import ProjLine, ProjPoint

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def clip_line(line: ProjLine, window) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] | None:
    """Exact endpoints of the visible part of a line, or None if it misses the window."""
    xmin, xmax, ymin, ymax = window
    X, Y, Z = line.coords
    hits = []
    if Y != 0:
        for x in (xmin, xmax):
            y = -(X * x + Z) / Y
            if ymin <= y <= ymax:
                hits.append((x, y))
    if X != 0:
        for y in (ymin, ymax):
            x = -(Y * y + Z) / X
            if xmin <= x <= xmax:
                hits.append((x, y))
    hits = sorted(set(hits))
    if not hits:
        return None
    return hits[0], hits[-1]


def _poly_grid(C: HomCurve, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    X, Y = np.meshgrid(xs, ys)
    out = np.zeros_like(X)
    for (i, j, _), c in zip(monomials(C.degree), C.coeffs):
        if c:
            out += float(c) * X**i * Y**j
    return out


def trace_curve(C: HomCurve, window, density: int = 512) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Line segments approximating the affine part of ``C = 0`` inside the window."""
    xmin, xmax, ymin, ymax = (float(v) for v in window)
    xs = np.linspace(xmin, xmax, density + 1)
    ys = np.linspace(ymin, ymax, density + 1)
    f = _poly_grid(C, xs, ys)
    pos = f >= 0
    segments = []

    def cross(v0, v1, p0, p1):
        t = v0 / (v0 - v1)
        return (p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]))

    rows, cols = np.nonzero(
        (pos[:-1, :-1] != pos[:-1, 1:]) | (pos[:-1, :-1] != pos[1:, :-1]) | (pos[:-1, :-1] != pos[1:, 1:])
    )
    for r, c in zip(rows.tolist(), cols.tolist()):
        corners = [
            ((xs[c], ys[r]), f[r, c]),
            ((xs[c + 1], ys[r]), f[r, c + 1]),
            ((xs[c + 1], ys[r + 1]), f[r + 1, c + 1]),
            ((xs[c], ys[r + 1]), f[r + 1, c]),
        ]
        pts = []
        for k in range(4):
            (p0, v0), (p1, v1) = corners[k], corners[(k + 1) % 4]
            if (v0 >= 0) != (v1 >= 0):
                pts.append(cross(v0, v1, p0, p1))
        if len(pts) == 2:
            segments.append((pts[0], pts[1]))
        elif len(pts) == 4:
            centre = sum(v for _, v in corners) / 4
            # saddle: pair crossings so the centre's sign region stays connected
            if (centre >= 0) == (corners[0][1] >= 0):
                segments += [(pts[0], pts[1]), (pts[2], pts[3])]
            else:
                segments += [(pts[0], pts[3]), (pts[1], pts[2])]
    return segments


def render_svg(
    window,
    points: Sequence[ProjPoint] = (),
    lines: Sequence[ProjLine] = (),
    curves: Sequence[HomCurve] = (),
    labels: Sequence[str] | None = None,
    size: int = 600,
    density: int = 512,
) -> str:
    """SVG 1.1 document showing the figure in the window ``(xmin, xmax, ymin, ymax)``."""
    window = tuple(Fraction(v) for v in window)
    xmin, xmax, ymin, ymax = window
    if not (xmin < xmax and ymin < ymax):
        raise ValueError("empty window")
    if labels is None:
        labels = [f"p{i + 1}" for i in range(len(points))]
    fx, fy = float(xmax - xmin), float(ymax - ymin)

    def sx(x):
        return (float(x) - float(xmin)) / fx * size

    def sy(y):
        return size - (float(y) - float(ymin)) / fy * size

    out = [f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="#999"/>']
    legend = []
    for line in lines:
        seg = clip_line(line, window)
        if seg is None:
            legend.append(f"line [{', '.join(str(c) for c in line)}] outside window")
            continue
        (x0, y0), (x1, y1) = seg
        out.append(
            f'<line class="line" x1="{sx(x0):.3f}" y1="{sy(y0):.3f}" x2="{sx(x1):.3f}" y2="{sy(y1):.3f}" '
            f'stroke="#555" stroke-width="1"/>'
        )
    for i, C in enumerate(curves):
        segs = trace_curve(C, window, density)
        d = " ".join(f"M{sx(a[0]):.2f} {sy(a[1]):.2f}L{sx(b[0]):.2f} {sy(b[1]):.2f}" for a, b in segs)
        colour = PALETTE[i % len(PALETTE)]
        out.append(f'<path class="curve" d="{d}" fill="none" stroke="{colour}" stroke-width="1.5"/>')
    for p, label in zip(points, labels):
        aff = p.affine()
        if aff is None:
            legend.append(f"{label} = ({', '.join(str(c) for c in p)}) at infinity")
            continue
        x, y = aff
        if not (xmin <= x <= xmax and ymin <= y <= ymax):
            legend.append(f"{label} = ({x}, {y}) outside window")
            continue
        out.append(f'<circle class="point" cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="3" fill="black"/>')
        out.append(
            f'<text x="{sx(x) + 5:.3f}" y="{sy(y) - 5:.3f}" font-size="12" font-family="sans-serif">'
            f"{escape(label)}</text>"
        )
    for k, text in enumerate(legend):
        out.append(
            f'<text class="legend" x="5" y="{size + 14 + 12 * k}" font-size="11" font-family="sans-serif">'
            f"{escape(text)}</text>"
        )
    height = size + 8 + 12 * len(legend)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{height}" '
        f'viewBox="0 0 {size} {height}">',
    ]
    return "\n".join(head + out + ["</svg>"]) + "\n"
