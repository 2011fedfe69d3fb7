"""Closed-form derivative and step-length formulas for chord evolution.

Each public function is a thin typed wrapper around a flat float kernel;
the solver loops call the kernels directly.  The formulas are polynomial
identities cross-checked against finite differences and numeric root
finding in the test suite; where the derivation admitted more than one
algebraic form, the form kept here is the one the oracles confirmed.

Conventions: ``a`` is the fixed triangle vertex, ``b`` and ``c`` the chord
endpoints (counter-clockwise order a, b, c), ``v`` and ``w`` the
unnormalized edge directions on which b and c slide.  All step lengths are
fractions of those edge vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import Direction, Point2, Vec2


class DenominatorZero(ArithmeticError):
    """The requested event never occurs along these edges."""


@dataclass(frozen=True)
class CoefficientTriple:
    """Coefficients (alpha, beta, gamma) of the coupled-step relation.

    While the chord derivative stays zero, admissible simultaneous steps
    (t_b, t_c) along v and w satisfy beta*t_b - gamma*t_c + alpha*t_b*t_c = 0.
    """

    alpha: float
    beta: float
    gamma: float


@dataclass(frozen=True)
class StepPair:
    """A pair of simultaneous edge-fraction steps for b and c."""

    tb: float
    tc: float


# ---------------------------------------------------------------------------
# Float kernels.
# ---------------------------------------------------------------------------

def _q(ax, ay, bx, by, vx, vy, cx, cy, wx, wy):
    """Area derivative indicator for an outward shift of chord bc.

    Sign equals the sign of d(area)/dh for the chord translated along its
    outer normal with endpoints sliding on the lines (b, v) and (c, w);
    the positive scale factor between the two depends on the configuration.
    """
    return ((cy - by) * ((by - cy) * vx * wx
                         - (ax - cx) * vy * wx
                         + (ax - bx) * vx * wy)
            + (cx - bx) * ((bx - cx) * vy * wy
                           - (ay - cy) * vx * wy
                           + (ay - by) * vy * wx))


def _tq_numerator(ax, ay, bx, by, vx, vy, cx, cy, wx, wy, ux, uy):
    """Numerator of the signed normal offset to the stationary chord.

    The true offset is this value divided by 2 * (v wedge w); the division
    lives in the callers, which already guard that wedge.
    """
    return (ux * ((by - cy) * vx * wx
                  + (cx - ax) * vy * wx
                  + (ax - bx) * vx * wy)
            - uy * ((bx - cx) * vy * wy
                    + (cy - ay) * vx * wy
                    + (ay - by) * vy * wx))


def _q_zero_numerator(ax, ay, bx, by, vx, vy, cx, cy, wx, wy):
    """Shared numerator of the single-sided steps to a zero derivative.

    Algebraically equal to -_q(...); kept in its expanded form so the two
    step formulas below read as printed polynomials.
    """
    return (vx * wx * (by - cy) * (by - cy)
            + vy * wy * (bx - cx) * (bx - cx)
            + vx * wy * ((ax - bx) * by + (cx - bx) * ay
                         + (2.0 * bx - ax - cx) * cy)
            + vy * wx * ((bx - cx) * ay - (cx - ax) * cy
                         + (2.0 * cx - ax - bx) * by))


def _tb4_den(ax, ay, bx, by, vx, vy, cx, cy, wx, wy):
    return ((vx * wy - vy * wx)
            * (vx * (ay + by - 2.0 * cy) - vy * (ax + bx - 2.0 * cx)))


def _tc4_den(ax, ay, bx, by, vx, vy, cx, cy, wx, wy):
    return ((vx * wy - vy * wx)
            * (wx * (ay + cy - 2.0 * by) - wy * (ax + cx - 2.0 * bx)))


def _abg(ax, ay, bx, by, vx, vy, cx, cy, wx, wy):
    """Coefficients (alpha, beta, gamma) of the coupled-step relation."""
    alpha = 2.0 * (vx * wy - wx * vy)
    beta = vx * (2.0 * cy - ay - by) - vy * (2.0 * cx - bx - ax)
    gamma = wx * (2.0 * by - ay - cy) - wy * (2.0 * bx - cx - ax)
    return alpha, beta, gamma


def _tb3_num(ax, ay, ex, ey, bx, by, vx, vy, cx, cy, wx, wy):
    return (vx * wx * ey * (by - cy) + vy * wy * ex * (bx - cx)
            + vx * wy * (ex * (by - ay) - ey * (2.0 * bx - ax - cx))
            + vy * wx * (ey * (bx - ax) - ex * (2.0 * by - ay - cy)))


def _tc3_num(ax, ay, ex, ey, bx, by, vx, vy, cx, cy, wx, wy):
    return (vx * wx * ey * (by - cy) + vy * wy * ex * (bx - cx)
            + vy * wx * (-ex * (cy - ay) + ey * (2.0 * cx - ax - bx))
            + vx * wy * (-ey * (cx - ax) + ex * (2.0 * cy - ay - by)))


def _tb3_den(ex, ey, vx, vy, wx, wy):
    return 2.0 * (vx * wy - wx * vy) * (ey * vx - ex * vy)


def _tc3_den(ex, ey, vx, vy, wx, wy):
    return 2.0 * (vx * wy - wx * vy) * (ey * wx - ex * wy)


# ---------------------------------------------------------------------------
# Public typed surface.
# ---------------------------------------------------------------------------

def calculate_q(a: Point2, b: Point2, v: Vec2, c: Point2, w: Vec2) -> float:
    """Derivative indicator of triangle area under an outward chord shift.

    Positive means sliding the chord bc outward along its outer normal
    (endpoints following the lines through b along v and c along w) grows
    the area of triangle abc; zero means stationary.
    """
    return _q(a.x, a.y, b.x, b.y, v.dx, v.dy, c.x, c.y, w.dx, w.dy)


def calculate_tq(a: Point2, b: Point2, v: Vec2, c: Point2, w: Vec2,
                 u: Direction) -> float:
    """Signed normal offset from chord bc to the stationary chord.

    Moving b by -t_b*v with t_b = -tq/(u.v) and c by +t_c*w with
    t_c = tq/(u.w) lands both on the common chord perpendicular to u where
    the area derivative vanishes.  Raises DenominatorZero when v and w are
    parallel (no stationary offset exists).
    """
    vw = v.dx * w.dy - v.dy * w.dx
    scale = (abs(v.dx) + abs(v.dy)) * (abs(w.dx) + abs(w.dy))
    if abs(vw) <= 1e-15 * scale:
        raise DenominatorZero("edge directions are parallel")
    num = _tq_numerator(a.x, a.y, b.x, b.y, v.dx, v.dy, c.x, c.y,
                        w.dx, w.dy, u.ux, u.uy)
    return num / (2.0 * vw)


def calculate_tb4(a: Point2, b: Point2, v: Vec2, c: Point2, w: Vec2) -> float:
    """Step along v after which the chord derivative reaches zero.

    The returned step may be negative; callers filter for the smallest
    positive value.  Raises DenominatorZero when the derivative never
    reaches zero along this edge.
    """
    args = (a.x, a.y, b.x, b.y, v.dx, v.dy, c.x, c.y, w.dx, w.dy)
    den = _tb4_den(*args)
    scale = _den_scale(a, b, c, v, w, v)
    if abs(den) <= 1e-15 * scale:
        raise DenominatorZero("derivative is constant along this edge for b")
    return _q_zero_numerator(*args) / den


def calculate_tc4(a: Point2, b: Point2, v: Vec2, c: Point2, w: Vec2) -> float:
    """Step along w after which the chord derivative reaches zero."""
    args = (a.x, a.y, b.x, b.y, v.dx, v.dy, c.x, c.y, w.dx, w.dy)
    den = _tc4_den(*args)
    scale = _den_scale(a, b, c, v, w, w)
    if abs(den) <= 1e-15 * scale:
        raise DenominatorZero("derivative is constant along this edge for c")
    return -_q_zero_numerator(*args) / den


def calculate_alpha_beta_gamma(a: Point2, b: Point2, v: Vec2, c: Point2,
                               w: Vec2) -> CoefficientTriple:
    """Coefficients of the coupled-step relation that preserves a zero
    chord derivative while b and c advance together."""
    alpha, beta, gamma = _abg(a.x, a.y, b.x, b.y, v.dx, v.dy,
                              c.x, c.y, w.dx, w.dy)
    return CoefficientTriple(alpha, beta, gamma)


def calculate_tb3_tc3(a: Point2, e: Vec2, b: Point2, v: Vec2, c: Point2,
                      w: Vec2) -> StepPair:
    """Simultaneous steps after which the moving chord becomes parallel to
    direction e while the chord derivative stays zero.

    Valid when the starting configuration already has a zero derivative.
    Raises DenominatorZero if either step has no finite solution.
    """
    args = (a.x, a.y, e.dx, e.dy, b.x, b.y, v.dx, v.dy, c.x, c.y, w.dx, w.dy)
    den_b = _tb3_den(e.dx, e.dy, v.dx, v.dy, w.dx, w.dy)
    den_c = _tc3_den(e.dx, e.dy, v.dx, v.dy, w.dx, w.dy)
    vw_scale = (abs(v.dx) + abs(v.dy)) * (abs(w.dx) + abs(w.dy))
    e_scale = abs(e.dx) + abs(e.dy)
    v_scale = abs(v.dx) + abs(v.dy)
    w_scale = abs(w.dx) + abs(w.dy)
    if abs(den_b) <= 1e-15 * vw_scale * e_scale * v_scale:
        raise DenominatorZero("no parallel event along b's edge")
    if abs(den_c) <= 1e-15 * vw_scale * e_scale * w_scale:
        raise DenominatorZero("no parallel event along c's edge")
    return StepPair(_tb3_num(*args) / den_b, _tc3_num(*args) / den_c)


def _den_scale(a, b, c, v, w, lead):
    """Crude magnitude estimate for a tb4/tc4 denominator."""
    vw = (abs(v.dx) + abs(v.dy)) * (abs(w.dx) + abs(w.dy))
    span = (abs(a.x - c.x) + abs(a.y - c.y)
            + abs(b.x - c.x) + abs(b.y - c.y)) or 1.0
    return vw * (abs(lead.dx) + abs(lead.dy)) * span
