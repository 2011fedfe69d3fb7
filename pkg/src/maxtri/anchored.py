"""Maximum-area inscribed triangle with a fixed chord normal.

Given a unit direction u, the triangle sought has its chord bc
perpendicular to u (u the outer normal) and its apex a at the vertex
minimizing u . p.  Starting from the degenerate chord at the u-extreme
vertex, b walks clockwise and c counter-clockwise down the two boundary
chains, halting at the chord height where the area is stationary.  Each
loop pass moves b or c onto a new edge, so the walk is linear in n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .formulas import _q, _tq_numerator
from .geom import (REL_TOL, ConvexPolygon, Direction, EdgePoint,
                   IterationCapExceeded, Point2, edge_point_coords,
                   extreme_vertex, triangle_area)


@dataclass(frozen=True)
class AnchoredTriangle:
    """Result triangle: apex vertex index, chord endpoints, area."""

    a_index: int
    b: EdgePoint
    c: EdgePoint
    u: Direction
    area: float
    iterations: int = 0


def anchored_triangle(P: ConvexPolygon, u: Direction) -> AnchoredTriangle:
    """Find the triangle anchored to direction u in O(n)."""
    xs, ys, n = P.xs, P.ys, P.n
    ux, uy = u.ux, u.uy

    ia = extreme_vertex(P, u, "min")
    ic = extreme_vertex(P, u, "max")
    sc = 0.0
    ib = ic - 1
    sb = 1.0
    ax = xs[ia]
    ay = ys[ia]

    iters = 0
    cap = 2 * n + 8
    while True:
        iters += 1
        if iters > cap:
            raise IterationCapExceeded(
                f"anchored walk exceeded {cap} iterations (n={n})")

        if sb == 0.0:
            ib -= 1
            sb = 1.0
        if sc == 1.0:
            ic += 1
            sc = 0.0

        i0 = ib % n
        i1 = (ib + 1) % n
        j0 = ic % n
        j1 = (ic + 1) % n
        ebx = xs[i1] - xs[i0]
        eby = ys[i1] - ys[i0]
        ecx = xs[j1] - xs[j0]
        ecy = ys[j1] - ys[j0]

        # Edge parallel to the chord: hop the whole edge.  The hop keeps
        # the endpoint at the wider end of the flat edge.
        if abs(ux * ebx + uy * eby) <= REL_TOL * (abs(ebx) + abs(eby)):
            ib -= 1
            sb = 1.0
            continue
        if abs(ux * ecx + uy * ecy) <= REL_TOL * (abs(ecx) + abs(ecy)):
            ic += 1
            sc = 0.0
            continue

        vw = ebx * ecy - eby * ecx
        if vw <= REL_TOL * (abs(ebx) + abs(eby)) * (abs(ecx) + abs(ecy)):
            # Support lines no longer widen downward; area can only shrink.
            break

        if sb == 1.0:
            bx = xs[i1]
            by = ys[i1]
        else:
            bx = xs[i0] * (1.0 - sb) + xs[i1] * sb
            by = ys[i0] * (1.0 - sb) + ys[i1] * sb
        if sc == 0.0:
            cx = xs[j0]
            cy = ys[j0]
        else:
            cx = xs[j0] * (1.0 - sc) + xs[j1] * sc
            cy = ys[j0] * (1.0 - sc) + ys[j1] * sc

        dy_off = _tq_numerator(ax, ay, bx, by, ebx, eby, cx, cy, ecx, ecy,
                               ux, uy) / (2.0 * vw)
        tb = -dy_off / (ux * ebx + uy * eby)
        tc = dy_off / (ux * ecx + uy * ecy)
        if tb <= 0.0 or tc <= 0.0:
            break

        if tb < sb and tc < 1.0 - sc:
            sb -= tb
            sc += tc
            break
        elif (1.0 - sc) * tb < sb * tc:
            # c reaches its next vertex first; b takes the matching
            # partial step that keeps the chord perpendicular to u.
            sb -= (1.0 - sc) * tb / tc
            ic += 1
            sc = 0.0
        else:
            # b reaches its previous vertex first.
            sc += sb * tc / tb
            ib -= 1
            sb = 1.0

    b = _normalize_edge_point(n, ib, sb)
    c = _normalize_edge_point(n, ic, sc)
    bp = edge_point_coords(P, b)
    cp = edge_point_coords(P, c)
    area = triangle_area(Point2(ax, ay), bp, cp)
    return AnchoredTriangle(ia, b, c, u, area, iters)


def _normalize_edge_point(n: int, i: int, s: float) -> EdgePoint:
    if s >= 1.0 - 1e-12:
        return EdgePoint((i + 1) % n, 0.0)
    if s <= 1e-12:
        return EdgePoint(i % n, 0.0)
    return EdgePoint(i % n, s)


def optimality_certificate(P: ConvexPolygon,
                           tri: AnchoredTriangle) -> tuple:
    """One-sided derivative pair certifying the anchored optimum.

    Returns (down, up): the derivative indicator for lowering the chord
    (b backward, c forward) and for raising it (b forward, c backward).
    An optimal triangle has down >= 0 and up <= 0 within tolerance.
    Infinities encode chord-parallel tangents, matching the convention
    that an impossible raise can never look profitable.
    """
    a = P.vertex(tri.a_index)
    bp = edge_point_coords(P, tri.b)
    cp = edge_point_coords(P, tri.c)
    chx = cp.x - bp.x
    chy = cp.y - bp.y
    ch_scale = abs(chx) + abs(chy)

    def one_sided(vb, wc):
        b_par = abs(vb.dx * chy - vb.dy * chx) <= \
            REL_TOL * (abs(vb.dx) + abs(vb.dy)) * ch_scale
        c_par = abs(wc.dx * chy - wc.dy * chx) <= \
            REL_TOL * (abs(wc.dx) + abs(wc.dy)) * ch_scale
        if b_par and c_par:
            return math.nan  # no admissible variation on this side
        if b_par:
            return -math.inf
        if c_par:
            return math.inf
        return _q(a.x, a.y, bp.x, bp.y, vb.dx, vb.dy,
                  cp.x, cp.y, wc.dx, wc.dy)

    from .geom import backward_tangent, forward_tangent
    down = one_sided(backward_tangent(P, tri.b), forward_tangent(P, tri.c))
    up = one_sided(forward_tangent(P, tri.b), backward_tangent(P, tri.c))
    return down, up
