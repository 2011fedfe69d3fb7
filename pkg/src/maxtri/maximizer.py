"""Single-pass sweep over all anchored triangles of a convex polygon.

The chord normal rotates once counter-clockwise around the circle while
the triangle stays anchored to it.  Vertex a hops from polygon vertex to
polygon vertex; b and c slide forward along edges.  Every loop iteration
jumps to the next discrete event: a chord endpoint reaching a vertex, the
chord becoming parallel to a's outgoing edge (a hops), or the area
derivative reaching zero (b and c switch between moving alone and moving
together).  Each event either advances an index or toggles the
zero-derivative phase, so the whole sweep is O(n) iterations.

The inner loop works on flat floats for speed; ``sweep_step`` exposes the
identical transition on immutable state objects for tracing and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .anchored import anchored_triangle
from .formulas import (_q, _tb3_den, _tb3_num, _tc3_den, _tc3_num)
from .geom import (REL_TOL, ConvexPolygon, Direction, EdgePoint,
                   IterationCapExceeded)

#: Edge fractions within this distance of 1 count as "arrived".
EPS_S = 1e-12
#: Step candidates more negative than this are rejected outright.
EPS_T = 1e-12

#: Defensive multiple of n bounding sweep iterations.
ITERATION_FACTOR = 12


@dataclass(frozen=True)
class TriangleState:
    """Sweep state: unwrapped indices plus edge fractions.

    ``ia``, ``ib`` and ``ic`` grow without wrapping so a full revolution is
    visible; reduce modulo ``n`` for array access.  ``q_was_zero`` records
    whether the previous iteration classified the area derivative as zero.
    """

    n: int
    ia: int
    ib: int
    sb: float
    ic: int
    sc: float
    q_was_zero: bool

    @property
    def b(self) -> EdgePoint:
        return EdgePoint(self.ib % self.n, self.sb)

    @property
    def c(self) -> EdgePoint:
        return EdgePoint(self.ic % self.n, self.sc)

    def vertex_triple(self) -> bool:
        return self.sb == 0.0 and self.sc == 0.0


@dataclass(frozen=True)
class MaxResult:
    """Solver output: best vertex triple plus sweep bookkeeping."""

    ia_max: int
    ib_max: int
    ic_max: int
    area_max: float
    iterations: int
    n: int
    ia_initial: int
    ia_final: int
    trace: Optional[tuple] = None

    @property
    def indices(self) -> tuple:
        return (self.ia_max, self.ib_max, self.ic_max)


def _advance(xs, ys, n, diam2, ia, ib, sb, ic, sc, qz, ia_limit):
    """One sweep iteration on flat state.

    Returns (ia, ib, sb, ic, sc, qz, done, top_ib, top_sb, top_ic, top_sc,
    top_area).  The ``top_*`` values describe the normalized state at the
    top of the iteration (what a trace records); ``top_area`` is the
    triangle area there, or -1.0 when b or c is mid-edge.  ``done`` is True
    when the a-hop event fires with ia already at ia_limit; the state is
    then returned unchanged.
    """
    # Normalize arrivals at edge ends.
    if sb >= 1.0 - EPS_S:
        ib += 1
        sb = 0.0
    if sc >= 1.0 - EPS_S:
        ic += 1
        sc = 0.0

    ian = ia % n
    ibn = ib % n
    icn = ic % n
    ib1 = ibn + 1
    if ib1 == n:
        ib1 = 0
    ic1 = icn + 1
    if ic1 == n:
        ic1 = 0
    ia1 = ian + 1
    if ia1 == n:
        ia1 = 0

    ax = xs[ian]
    ay = ys[ian]
    if sb == 0.0:
        bx = xs[ibn]
        by = ys[ibn]
    else:
        bx = xs[ibn] * (1.0 - sb) + xs[ib1] * sb
        by = ys[ibn] * (1.0 - sb) + ys[ib1] * sb
    if sc == 0.0:
        cx = xs[icn]
        cy = ys[icn]
    else:
        cx = xs[icn] * (1.0 - sc) + xs[ic1] * sc
        cy = ys[icn] * (1.0 - sc) + ys[ic1] * sc

    top_ib = ib
    top_sb = sb
    top_ic = ic
    top_sc = sc
    if sb == 0.0 and sc == 0.0:
        top_area = 0.5 * abs((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    else:
        top_area = -1.0

    eax = xs[ia1] - ax
    eay = ys[ia1] - ay
    chx = cx - bx
    chy = cy - by
    wa = eax * chy - eay * chx
    if abs(wa) <= REL_TOL * (abs(eax) + abs(eay)) * (abs(chx) + abs(chy)):
        # Chord parallel to a's outgoing edge: a hops to the next vertex.
        if 0 <= ia_limit == ia:
            return (ia, ib, sb, ic, sc, qz, True,
                    top_ib, top_sb, top_ic, top_sc, top_area)
        ia += 1
        ian = ia1
        ia1 = ian + 1
        if ia1 == n:
            ia1 = 0
        ax = xs[ian]
        ay = ys[ian]
        eax = xs[ia1] - ax
        eay = ys[ia1] - ay
        wa = eax * chy - eay * chx

    ebx = xs[ib1] - xs[ibn]
    eby = ys[ib1] - ys[ibn]
    ecx = xs[ic1] - xs[icn]
    ecy = ys[ic1] - ys[icn]
    vw = ebx * ecy - eby * ecx

    q = _q(ax, ay, bx, by, ebx, eby, cx, cy, ecx, ecy)
    qeps = REL_TOL * (abs(ebx) + abs(eby)) * (abs(ecx) + abs(ecy)) * diam2

    if q > qeps:
        # Move b alone toward the earliest event.
        best = 1.0 - sb
        den = eax * eby - eay * ebx
        if den != 0.0:
            t3 = wa / den
            if EPS_T < t3 < best:
                best = t3
        beta = ebx * (2.0 * cy - ay - by) - eby * (2.0 * cx - bx - ax)
        den = vw * beta
        if den != 0.0:
            t4 = q / den
            if EPS_T < t4 < best:
                best = t4
        sb += best
        if sb > 1.0:
            sb = 1.0
        qz = False
    elif q < -qeps:
        # Move c alone toward the earliest event.
        best = 1.0 - sc
        den = eax * ecy - eay * ecx
        if den != 0.0:
            t3 = -wa / den
            if EPS_T < t3 < best:
                best = t3
        gamma = ecx * (2.0 * by - ay - cy) - ecy * (2.0 * bx - cx - ax)
        den = vw * gamma
        if den != 0.0:
            t4 = -q / den
            if EPS_T < t4 < best:
                best = t4
        sc += best
        if sc > 1.0:
            sc = 1.0
        qz = False
    else:
        # Zero-derivative phase: b and c advance together along the
        # coupled relation until one of them reaches a vertex or the
        # chord aligns with a's outgoing edge.
        alpha = 2.0 * vw
        beta = ebx * (2.0 * cy - ay - by) - eby * (2.0 * cx - bx - ax)
        gamma = ecx * (2.0 * by - ay - cy) - ecy * (2.0 * bx - cx - ax)

        btb = bsb = None
        tb1 = 1.0 - sb
        den = gamma - alpha * tb1
        if den != 0.0:
            tc1 = beta * tb1 / den
            if tc1 >= -EPS_T:
                btb, bsb = tb1, (tc1 if tc1 > 0.0 else 0.0)
        tc2 = 1.0 - sc
        den = beta + alpha * tc2
        if den != 0.0:
            tb2 = gamma * tc2 / den
            if tb2 >= -EPS_T and (btb is None or tb2 < btb):
                btb, bsb = (tb2 if tb2 > 0.0 else 0.0), tc2
        den_b = _tb3_den(eax, eay, ebx, eby, ecx, ecy)
        den_c = _tc3_den(eax, eay, ebx, eby, ecx, ecy)
        if den_b != 0.0 and den_c != 0.0:
            tb3 = _tb3_num(ax, ay, eax, eay, bx, by, ebx, eby,
                           cx, cy, ecx, ecy) / den_b
            tc3 = _tc3_num(ax, ay, eax, eay, bx, by, ebx, eby,
                           cx, cy, ecx, ecy) / den_c
            if tb3 >= -EPS_T and tc3 >= -EPS_T and \
                    (btb is None or tb3 < btb):
                btb = tb3 if tb3 > 0.0 else 0.0
                bsb = tc3 if tc3 > 0.0 else 0.0
        if btb is None:
            raise IterationCapExceeded(
                "no admissible coupled step; numerical invariant broken")
        sb += btb
        sc += bsb
        if sb > 1.0:
            sb = 1.0
        if sc > 1.0:
            sc = 1.0
        qz = True

    return (ia, ib, sb, ic, sc, qz, False,
            top_ib, top_sb, top_ic, top_sc, top_area)


def _initial_state(P: ConvexPolygon) -> TriangleState:
    """Anchor to (1, 0) and lift edge indices to unwrapped counters."""
    n = P.n
    start = anchored_triangle(P, Direction(1.0, 0.0))
    ia = start.a_index
    ib = ia + (start.b.edge - ia) % n
    ic = ib + (start.c.edge - ib) % n
    return TriangleState(n, ia, ib, start.b.frac, ic, start.c.frac, False)


def largest_inscribed_triangle(P: ConvexPolygon,
                               trace: bool = False) -> MaxResult:
    """Maximum-area inscribed triangle of a convex polygon in O(n).

    Raises IterationCapExceeded if the sweep exceeds its linear iteration
    budget, which signals a numerical-robustness failure rather than a
    caller error.  With ``trace=True`` the result carries the full list of
    per-iteration states (memory grows with n; leave off for large runs).
    """
    xs, ys, n = P.xs, P.ys, P.n
    diam2 = P.diameter * P.diameter

    st = _initial_state(P)
    ia = st.ia
    ib = st.ib
    sb = st.sb
    ic = st.ic
    sc = st.sc
    qz = st.q_was_zero
    ia_initial = ia
    ia_limit = ia + n

    area_max = -1.0
    best = None
    snapshots = [] if trace else None
    iterations = 0
    cap = ITERATION_FACTOR * n

    while True:
        iterations += 1
        if iterations > cap:
            raise IterationCapExceeded(
                f"sweep exceeded {cap} iterations (n={n})")
        ia_in = ia
        qz_in = qz
        (ia, ib, sb, ic, sc, qz, done,
         top_ib, top_sb, top_ic, top_sc, top_area) = _advance(
            xs, ys, n, diam2, ia, ib, sb, ic, sc, qz, ia_limit)
        if snapshots is not None:
            snapshots.append(TriangleState(
                n, ia_in, top_ib, top_sb, top_ic, top_sc, qz_in))
        if top_area > area_max:
            area_max = top_area
            best = (ia_in % n, top_ib % n, top_ic % n)
        if done:
            break

    if best is None or area_max <= 0.0:
        raise IterationCapExceeded(
            "sweep finished without recording a vertex triple")

    return MaxResult(best[0], best[1], best[2], area_max, iterations, n,
                     ia_initial, ia, tuple(snapshots) if trace else None)


def sweep_step(state: TriangleState, P: ConvexPolygon) -> TriangleState:
    """Apply one sweep iteration to an explicit state.

    Composing sweep_step reproduces the trace of
    ``largest_inscribed_triangle`` exactly: the returned state is in the
    same normalized form the trace records (arrived endpoints re-expressed
    with fraction zero on the next edge).
    """
    xs, ys, n = P.xs, P.ys, P.n
    diam2 = P.diameter * P.diameter
    ia, ib, sb, ic, sc, qz, _done, *_ = _advance(
        xs, ys, n, diam2, state.ia, state.ib, state.sb,
        state.ic, state.sc, state.q_was_zero, -1)
    if sb >= 1.0 - EPS_S:
        ib += 1
        sb = 0.0
    if sc >= 1.0 - EPS_S:
        ic += 1
        sc = 0.0
    return TriangleState(n, ia, ib, sb, ic, sc, qz)
