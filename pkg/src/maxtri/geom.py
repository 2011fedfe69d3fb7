"""Planar primitives and validated convex polygons.

Everything downstream assumes a strictly convex, counter-clockwise polygon;
the single construction path is ``validate_polygon``.  All zero-tests go
through a relative tolerance scaled by the size of the operands, never a
bare ``== 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

#: Relative tolerance used for every geometric comparison.  Length-like
#: quantities are compared against REL_TOL * (length scale), area-like
#: quantities against REL_TOL * (area scale).
REL_TOL = 1e-9


class GeometryError(ValueError):
    """Rejected geometric input."""


class NonFinite(GeometryError):
    """A coordinate is NaN or infinite."""


class TooFewVertices(GeometryError):
    """Fewer than three vertices."""


class NotCounterClockwise(GeometryError):
    """Vertex loop has non-positive signed area."""


class NotConvex(GeometryError):
    """Some vertex is not a strict left turn (includes collinear triples)."""


class IterationCapExceeded(RuntimeError):
    """An internal loop invariant broke; not a caller error."""


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFinite(f"non-finite point ({self.x}, {self.y})")

    def __sub__(self, other: "Point2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: "Vec2") -> "Point2":
        return Point2(self.x + v.dx, self.y + v.dy)


@dataclass(frozen=True)
class Vec2:
    dx: float
    dy: float

    def __post_init__(self):
        if not (math.isfinite(self.dx) and math.isfinite(self.dy)):
            raise NonFinite(f"non-finite vector ({self.dx}, {self.dy})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.dx * s, self.dy * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.dx, -self.dy)

    def dot(self, other: "Vec2") -> float:
        return self.dx * other.dx + self.dy * other.dy

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class Direction:
    """Unit vector on the circle."""

    ux: float
    uy: float

    def __post_init__(self):
        if not (math.isfinite(self.ux) and math.isfinite(self.uy)):
            raise NonFinite(f"non-finite direction ({self.ux}, {self.uy})")
        if abs(self.ux * self.ux + self.uy * self.uy - 1.0) > 1e-12:
            raise GeometryError(
                f"direction ({self.ux}, {self.uy}) is not unit length")

    @classmethod
    def from_vector(cls, x: float, y: float) -> "Direction":
        n = math.hypot(x, y)
        if n == 0.0 or not math.isfinite(n):
            raise GeometryError("cannot normalize a zero or non-finite vector")
        return cls(x / n, y / n)

    @classmethod
    def from_angle(cls, theta: float) -> "Direction":
        return cls(math.cos(theta), math.sin(theta))

    def perp(self) -> Vec2:
        """Counter-clockwise perpendicular (rotation by +90 degrees)."""
        return Vec2(-self.uy, self.ux)

    def dot(self, v: Vec2) -> float:
        return self.ux * v.dx + self.uy * v.dy


@dataclass(frozen=True)
class EdgePoint:
    """A boundary point as (edge index, fraction along that edge)."""

    edge: int
    frac: float

    def __post_init__(self):
        if not (0.0 <= self.frac <= 1.0):
            raise GeometryError(f"edge fraction {self.frac} outside [0, 1]")


def wedge(v: Vec2, w: Vec2) -> float:
    """2-D wedge (cross) product v.dx*w.dy - v.dy*w.dx."""
    return v.dx * w.dy - v.dy * w.dx


def triangle_area(a: Point2, b: Point2, c: Point2) -> float:
    """Unsigned area of triangle abc."""
    return 0.5 * abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


class ConvexPolygon:
    """A validated, strictly convex, counter-clockwise vertex loop.

    Coordinates are held as flat float lists (``xs``/``ys``) so the solver
    can index them cheaply even for polygons with millions of vertices;
    ``Point2`` views are created on demand.
    """

    __slots__ = ("xs", "ys", "n", "diameter", "_vertex_cache")

    def __init__(self, xs: Sequence[float], ys: Sequence[float],
                 diameter: float):
        # Not a public constructor: go through validate_polygon().
        self.xs = xs
        self.ys = ys
        self.n = len(xs)
        self.diameter = diameter
        self._vertex_cache = None

    def __len__(self) -> int:
        return self.n

    def vertex(self, i: int) -> Point2:
        i %= self.n
        return Point2(self.xs[i], self.ys[i])

    @property
    def vertices(self) -> tuple:
        if self._vertex_cache is None:
            self._vertex_cache = tuple(
                Point2(x, y) for x, y in zip(self.xs, self.ys))
        return self._vertex_cache

    def edge_vector(self, i: int) -> Vec2:
        i %= self.n
        j = (i + 1) % self.n
        return Vec2(self.xs[j] - self.xs[i], self.ys[j] - self.ys[i])

    def signed_area(self) -> float:
        xs, ys, n = self.xs, self.ys, self.n
        s = 0.0
        for i in range(n):
            j = (i + 1) % n
            s += xs[i] * ys[j] - xs[j] * ys[i]
        return 0.5 * s

    @property
    def eps_len(self) -> float:
        return REL_TOL * self.diameter

    @property
    def eps_area(self) -> float:
        return REL_TOL * self.diameter * self.diameter

    def __repr__(self):
        return f"ConvexPolygon(n={self.n}, diameter={self.diameter:.6g})"


def _coords_of(points) -> tuple:
    """Accept Point2 objects or (x, y) pairs; return flat float lists."""
    xs, ys = [], []
    for p in points:
        if isinstance(p, Point2):
            xs.append(float(p.x))
            ys.append(float(p.y))
        else:
            x, y = p
            xs.append(float(x))
            ys.append(float(y))
    return xs, ys


def validate_polygon(points: Iterable) -> ConvexPolygon:
    """Validate a CCW strictly convex vertex loop, or raise.

    Raises TooFewVertices, NonFinite, NotCounterClockwise or NotConvex.
    Collinear consecutive triples and duplicate vertices are rejected as
    NotConvex (use dedupe_collinear first if that is intended).
    """
    xs, ys = _coords_of(points)
    n = len(xs)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")

    xmin = xmax = xs[0]
    ymin = ymax = ys[0]
    for x, y in zip(xs, ys):
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFinite(f"non-finite vertex ({x}, {y})")
        if x < xmin:
            xmin = x
        elif x > xmax:
            xmax = x
        if y < ymin:
            ymin = y
        elif y > ymax:
            ymax = y
    diameter = math.hypot(xmax - xmin, ymax - ymin)
    if diameter <= 0.0:
        raise NotConvex("all vertices coincide")

    area2 = 0.0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        area2 += xs[i] * ys[j] - xs[j] * ys[i]
    if area2 <= 0.0:
        raise NotCounterClockwise(
            f"signed area {0.5 * area2:.6g} is not positive")

    # Strict left turn at every vertex, tolerance scaled by the incident
    # edge lengths so very fine polygons (tiny edges) are not rejected.
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        k = j + 1
        if k == n:
            k = 0
        e1x = xs[j] - xs[i]
        e1y = ys[j] - ys[i]
        e2x = xs[k] - xs[j]
        e2y = ys[k] - ys[j]
        w = e1x * e2y - e1y * e2x
        scale = (abs(e1x) + abs(e1y)) * (abs(e2x) + abs(e2y))
        if w <= REL_TOL * scale:
            raise NotConvex(
                f"vertex {j} is not a strict left turn (wedge {w:.3g})")

    return ConvexPolygon(xs, ys, diameter)


def dedupe_collinear(points: Iterable) -> list:
    """Drop duplicate neighbours and interior vertices of collinear runs.

    Never applied implicitly by validate_polygon; offered for callers that
    want to repair their own input.
    """
    pts = [(p.x, p.y) if isinstance(p, Point2) else (float(p[0]), float(p[1]))
           for p in points]
    if len(pts) < 3:
        return [Point2(x, y) for x, y in pts]

    scale = max(max(abs(x), abs(y)) for x, y in pts) or 1.0
    out = []
    for p in pts:
        if not out or (abs(p[0] - out[-1][0]) > REL_TOL * scale
                       or abs(p[1] - out[-1][1]) > REL_TOL * scale):
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()

    def collinear(a, b, c):
        w = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        s = ((abs(b[0] - a[0]) + abs(b[1] - a[1]))
             * (abs(c[0] - b[0]) + abs(c[1] - b[1])))
        return abs(w) <= REL_TOL * s

    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(len(out)):
            a = out[i - 1]
            b = out[i]
            c = out[(i + 1) % len(out)]
            if collinear(a, b, c):
                out.pop(i)
                changed = True
                break
    return [Point2(x, y) for x, y in out]


def extreme_vertex(P: ConvexPolygon, u: Direction, sense: str) -> int:
    """Index of the vertex extremizing u . p.

    When two adjacent vertices tie (u is an edge normal up to sign), both
    senses return the earlier vertex in CCW order, i.e. the tail of the
    tied edge, so the whole tied edge lies ahead of the sweep.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    xs, ys, n = P.xs, P.ys, P.n
    ux, uy = u.ux, u.uy

    best = 0
    bestdot = ux * xs[0] + uy * ys[0]
    if sense == "min":
        for i in range(1, n):
            d = ux * xs[i] + uy * ys[i]
            if d < bestdot:
                bestdot = d
                best = i
    else:
        for i in range(1, n):
            d = ux * xs[i] + uy * ys[i]
            if d > bestdot:
                bestdot = d
                best = i

    # Tie handling: strict convexity allows at most one neighbour to share
    # the extreme value.  Return the tail of the tied edge.
    tol = REL_TOL * P.diameter
    prev = (best - 1) % n
    nxt = (best + 1) % n
    dprev = ux * xs[prev] + uy * ys[prev]
    dnxt = ux * xs[nxt] + uy * ys[nxt]
    if abs(dnxt - bestdot) <= tol:
        return best
    if abs(dprev - bestdot) <= tol:
        return prev
    return best


def edge_point_coords(P: ConvexPolygon, e: EdgePoint) -> Point2:
    """Coordinates of an edge point; exact at both endpoints."""
    i = e.edge % P.n
    j = (i + 1) % P.n
    s = e.frac
    if s == 0.0:
        return Point2(P.xs[i], P.ys[i])
    if s == 1.0:
        return Point2(P.xs[j], P.ys[j])
    return Point2(P.xs[i] * (1.0 - s) + P.xs[j] * s,
                  P.ys[i] * (1.0 - s) + P.ys[j] * s)


def forward_tangent(P: ConvexPolygon, e: EdgePoint) -> Vec2:
    """Edge direction ahead of the point in CCW order (unnormalized)."""
    if e.frac == 1.0:
        return P.edge_vector(e.edge + 1)
    return P.edge_vector(e.edge)


def backward_tangent(P: ConvexPolygon, e: EdgePoint) -> Vec2:
    """Edge direction arriving at the point in CCW order (unnormalized)."""
    if e.frac == 0.0:
        return P.edge_vector(e.edge - 1)
    return P.edge_vector(e.edge)
