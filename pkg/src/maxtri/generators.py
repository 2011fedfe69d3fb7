"""Seeded convex polygon generators for tests, benchmarks and the CLI."""

from __future__ import annotations

import math
import random
from typing import List, Optional, Tuple

from .geom import ConvexPolygon, GeometryError, validate_polygon

GENERATORS = ("regular", "jittered", "hull-of-random")


def regular_polygon(n: int) -> List[Tuple[float, float]]:
    """Regular n-gon on the unit circle with a vertex at angle 0."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    step = 2.0 * math.pi / n
    return [(math.cos(step * k), math.sin(step * k)) for k in range(n)]


def default_jitter(n: int) -> float:
    """Radial noise amplitude that keeps a regular n-gon convex.

    The sagitta of a unit-circle arc spanning 2*pi/n shrinks like 1/n^2;
    noise well below it cannot flip any turn.
    """
    return min(0.05, 1.5 / (n * n))


def jittered_polygon(n: int, seed: int,
                     amplitude: Optional[float] = None,
                     max_tries: int = 50) -> List[Tuple[float, float]]:
    """Regular n-gon with radial noise, re-drawn until convex.

    Raises GeometryError when no convex sample is found within
    ``max_tries`` draws (amplitude too large for this n).
    """
    if amplitude is None:
        amplitude = default_jitter(n)
    step = 2.0 * math.pi / n
    for attempt in range(max_tries):
        rng = random.Random((seed, attempt))
        pts = []
        for k in range(n):
            r = 1.0 + amplitude * (2.0 * rng.random() - 1.0)
            pts.append((r * math.cos(step * k), r * math.sin(step * k)))
        try:
            validate_polygon(pts)
        except GeometryError:
            continue
        return pts
    raise GeometryError(
        f"no convex jittered {n}-gon with amplitude {amplitude} "
        f"after {max_tries} tries")


def hull_of_random(n: int, seed: int,
                   max_tries: int = 50) -> List[Tuple[float, float]]:
    """Convex hull of n uniform points in the unit disk (size <= n)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    for attempt in range(max_tries):
        rng = random.Random((seed, attempt))
        pts = []
        for _ in range(n):
            r = math.sqrt(rng.random())
            t = rng.uniform(0.0, 2.0 * math.pi)
            pts.append((r * math.cos(t), r * math.sin(t)))
        hull = convex_hull(pts)
        if len(hull) < 3:
            continue
        try:
            validate_polygon(hull)
        except GeometryError:
            continue
        return hull
    raise GeometryError(f"no valid hull from {n} disk points "
                        f"after {max_tries} tries")


def convex_hull(points) -> List[Tuple[float, float]]:
    """Monotone-chain hull, CCW, strict turns (collinear points dropped)."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def generate(kind: str, n: int, seed: int,
             amplitude: Optional[float] = None) -> List[Tuple[float, float]]:
    """Dispatch by generator name; returns a raw CCW vertex list."""
    if kind == "regular":
        return regular_polygon(n)
    if kind == "jittered":
        return jittered_polygon(n, seed, amplitude)
    if kind == "hull-of-random":
        return hull_of_random(n, seed)
    raise ValueError(f"unknown generator {kind!r}; pick one of {GENERATORS}")


def generate_polygon(kind: str, n: int, seed: int,
                     amplitude: Optional[float] = None) -> ConvexPolygon:
    """Generate and validate in one step."""
    return validate_polygon(generate(kind, n, seed, amplitude))
