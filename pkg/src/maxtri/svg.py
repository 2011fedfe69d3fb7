"""Deterministic SVG figures: polygon outline plus triangle overlays."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .geom import ConvexPolygon

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#e377c2", "#17becf")


def render_svg(P: ConvexPolygon,
               triangles: Iterable[Sequence[Tuple[float, float]]],
               size: int = 800,
               margin: float = 0.05,
               opacity: float = 0.35) -> str:
    """SVG text of the polygon with translucent filled triangles on top.

    The view box fits the polygon bounding box with a relative margin;
    coordinates are mapped to a ``size`` pixel canvas with y flipped so the
    figure matches mathematical orientation.
    """
    xs, ys = P.xs, P.ys
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin) or 1.0
    pad = margin * span
    xmin -= pad
    xmax += pad
    ymin -= pad
    ymax += pad
    scale = size / max(xmax - xmin, ymax - ymin)

    def px(x, y):
        return ((x - xmin) * scale, (ymax - y) * scale)

    width = (xmax - xmin) * scale
    height = (ymax - ymin) * scale

    def pts_attr(coords):
        return " ".join("%.3f,%.3f" % px(x, y) for x, y in coords)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f'  <polygon points="{pts_attr(zip(xs, ys))}" '
        f'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for k, tri in enumerate(triangles):
        color = _PALETTE[k % len(_PALETTE)]
        out.append(
            f'  <polygon points="{pts_attr(tri)}" fill="{color}" '
            f'fill-opacity="{opacity}" stroke="{color}" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def save_svg(path: str, P: ConvexPolygon, triangles,
             size: int = 800) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(P, triangles, size=size))
