"""Independent ground-truth references for the fast solver.

Nothing here shares logic with the sweep: the global reference enumerates
all vertex triples, the per-direction reference maximizes the explicit
chord-height area profile, and the derivative reference uses central
finite differences.  They are cubic/quadratic by design and exist only to
check the linear-time path.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .geom import (ConvexPolygon, Direction, EdgePoint, Point2, Vec2,
                   extreme_vertex, triangle_area)
from .anchored import AnchoredTriangle
from .maximizer import MaxResult

#: Vertex-count guard for the cubic enumeration.
BRUTE_FORCE_MAX_N = 2000


class TooLarge(ValueError):
    """Polygon too large for the cubic enumeration guard."""


class ParallelEdge(ArithmeticError):
    """A displaced chord has no intersection with a sliding line."""


def brute_force_max_triangle(P: ConvexPolygon) -> MaxResult:
    """Exact maximum over all vertex triples, O(n^3).

    Ties resolve to the lexicographically smallest index triple.  The
    result reuses the solver's result type with zero sweep bookkeeping.
    """
    n = P.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"n={n} exceeds the brute-force guard "
                       f"({BRUTE_FORCE_MAX_N})")
    xs = np.asarray(P.xs, dtype=float)
    ys = np.asarray(P.ys, dtype=float)

    best_area = -1.0
    best = (0, 1, 2)
    for i in range(n - 2):
        dx = xs[i + 1:] - xs[i]
        dy = ys[i + 1:] - ys[i]
        # cross[j, k] = 2 * signed area of (i, i+1+j, i+1+k)
        cross = np.abs(dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :])
        m = cross.shape[0]
        cross[np.tril_indices(m)] = -1.0
        flat = int(np.argmax(cross))
        j, k = divmod(flat, m)
        area = 0.5 * float(cross[j, k])
        if area > best_area:
            best_area = area
            best = (i, i + 1 + j, i + 1 + k)
    return MaxResult(best[0], best[1], best[2], best_area,
                     iterations=0, n=n, ia_initial=0, ia_final=0)


@dataclass(frozen=True)
class ChordProfile:
    """Piecewise-linear chord width of a polygon along a direction.

    ``breakpoints`` are the sorted vertex projections onto the direction;
    ``widths`` the exact chord widths there.  Width is linear between
    consecutive breakpoints and concave overall.
    """

    direction: Direction
    y_min: float
    y_max: float
    breakpoints: Tuple[float, ...]
    widths: Tuple[float, ...]

    def width_at(self, y: float) -> float:
        bp = self.breakpoints
        if y <= bp[0]:
            return self.widths[0]
        if y >= bp[-1]:
            return self.widths[-1]
        k = bisect.bisect_right(bp, y) - 1
        if bp[k + 1] == bp[k]:
            return self.widths[k + 1]
        t = (y - bp[k]) / (bp[k + 1] - bp[k])
        return self.widths[k] * (1.0 - t) + self.widths[k + 1] * t

    def area_at(self, y: float) -> float:
        return 0.5 * (y - self.y_min) * self.width_at(y)


def _slice_extremes(P: ConvexPolygon, u: Direction, y: float):
    """Exact min/max offsets of the polygon slice at height y along u.

    Scans every edge; returns (zmin, zmax, argmin, argmax) where the arg
    entries are (edge index, fraction) of the extreme intersections, or
    None when the slice is empty.
    """
    xs, ys, n = P.xs, P.ys, P.n
    ux, uy = u.ux, u.uy
    zmin = math.inf
    zmax = -math.inf
    arg_min = arg_max = None
    for i in range(n):
        j = (i + 1) % n
        yi = ux * xs[i] + uy * ys[i]
        yj = ux * xs[j] + uy * ys[j]
        zi = -uy * xs[i] + ux * ys[i]
        zj = -uy * xs[j] + ux * ys[j]
        hits = []
        if yi == yj:
            if yi == y:
                hits = [(zi, 0.0), (zj, 1.0)]
        elif min(yi, yj) <= y <= max(yi, yj):
            t = (y - yi) / (yj - yi)
            t = min(1.0, max(0.0, t))
            hits = [(zi + t * (zj - zi), t)]
        for z, t in hits:
            if z < zmin:
                zmin = z
                arg_min = (i, t)
            if z > zmax:
                zmax = z
                arg_max = (i, t)
    if arg_min is None:
        return None
    return zmin, zmax, arg_min, arg_max


def build_chord_profile(P: ConvexPolygon, u: Direction) -> ChordProfile:
    """Exact chord-width profile along u from per-vertex slices."""
    ys_proj = sorted({u.ux * x + u.uy * y for x, y in zip(P.xs, P.ys)})
    widths = []
    for y in ys_proj:
        hit = _slice_extremes(P, u, y)
        widths.append(hit[1] - hit[0] if hit else 0.0)
    return ChordProfile(u, ys_proj[0], ys_proj[-1],
                        tuple(ys_proj), tuple(widths))


def anchored_oracle(P: ConvexPolygon, u: Direction) -> AnchoredTriangle:
    """Reference anchored triangle via explicit chord-profile maximization.

    Maximizes area(y) = (y - y_min) * width(y) / 2 per breakpoint interval
    (quadratic in y, closed form); evaluates candidates against the exact
    slice so the answer does not depend on interpolation.  Plateau ties
    resolve to the largest y.
    """
    profile = build_chord_profile(P, u)
    y_min = profile.y_min
    bp = profile.breakpoints

    def exact_area(y):
        hit = _slice_extremes(P, u, y)
        if hit is None:
            return 0.0
        return 0.5 * (y - y_min) * (hit[1] - hit[0])

    candidates = set(bp)
    for k in range(len(bp) - 1):
        y0, y1 = bp[k], bp[k + 1]
        if y1 <= y0:
            continue
        w0, w1 = profile.widths[k], profile.widths[k + 1]
        m = (w1 - w0) / (y1 - y0)
        if m != 0.0:
            # d/dy [ (y - y_min) * (w0 + m (y - y0)) ] = 0
            y_star = 0.5 * (y0 + y_min - w0 / m)
            if y0 < y_star < y1:
                candidates.add(y_star)

    scale = P.diameter * P.diameter
    best_area = -1.0
    best_y = y_min
    for y in sorted(candidates):
        a = exact_area(y)
        if a > best_area + 1e-12 * scale:
            best_area = a
            best_y = y
        elif a >= best_area - 1e-12 * scale and y > best_y:
            best_y = y
            if a > best_area:
                best_area = a

    hit = _slice_extremes(P, u, best_y)
    b = _edge_point_from_hit(P, hit[2])
    c = _edge_point_from_hit(P, hit[3])
    ia = extreme_vertex(P, u, "min")
    from .geom import edge_point_coords
    area = triangle_area(P.vertex(ia), edge_point_coords(P, b),
                         edge_point_coords(P, c))
    return AnchoredTriangle(ia, b, c, u, area)


def _edge_point_from_hit(P: ConvexPolygon, hit) -> EdgePoint:
    i, t = hit
    if t >= 1.0 - 1e-12:
        return EdgePoint((i + 1) % P.n, 0.0)
    if t <= 1e-12:
        return EdgePoint(i, 0.0)
    return EdgePoint(i, t)


def finite_difference_area_derivative(a: Point2, b: Point2, c: Point2,
                                      v: Vec2, w: Vec2, h: float) -> float:
    """Central difference of triangle area under a normalized chord shift.

    The chord through b and c translates along its outer normal by
    (chord length) * h; the endpoints follow the lines through b along v
    and through c along w.  Assumes a, b, c in counter-clockwise order.
    """
    dx = c.x - b.x
    dy = c.y - b.y
    length = math.hypot(dx, dy)
    if length == 0.0:
        raise ParallelEdge("degenerate chord")
    ux = dy / length
    uy = -dx / length
    udotv = ux * v.dx + uy * v.dy
    udotw = ux * w.dx + uy * w.dy
    if abs(udotv) <= 1e-12 * (abs(v.dx) + abs(v.dy)):
        raise ParallelEdge("line at b is parallel to the chord")
    if abs(udotw) <= 1e-12 * (abs(w.dx) + abs(w.dy)):
        raise ParallelEdge("line at c is parallel to the chord")

    def area_at(hh):
        shift = length * hh
        tb = shift / udotv
        tc = shift / udotw
        bp = Point2(b.x + tb * v.dx, b.y + tb * v.dy)
        cp = Point2(c.x + tc * w.dx, c.y + tc * w.dy)
        return triangle_area(a, bp, cp)

    return (area_at(h) - area_at(-h)) / (2.0 * h)
