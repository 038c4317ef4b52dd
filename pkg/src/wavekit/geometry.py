"""Small planar geometry helpers for the wave-structure builder.

Everything here is closed form; no iterative root finding.  Points are
(x, y) tuples of floats, lines are stored in Hesse normal form (unit
normal n, offset d) so that a point q lies on the line iff q.n = d and
the signed distance of q from the line is q.n - d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]


@dataclass(frozen=True)
class Line:
    """Oriented line {q : q.n = d} with unit normal n."""

    nx: float
    ny: float
    d: float

    @staticmethod
    def through(p: Point, direction: Point) -> "Line":
        """Line through ``p`` with the given (not necessarily unit) direction."""
        dx, dy = direction
        norm = math.hypot(dx, dy)
        if norm == 0.0:
            raise ValueError("line direction must be nonzero")
        nx, ny = -dy / norm, dx / norm
        return Line(nx, ny, nx * p[0] + ny * p[1])

    def signed_distance(self, q: Point) -> float:
        return self.nx * q[0] + self.ny * q[1] - self.d

    def foot(self, q: Point) -> Point:
        """Perpendicular foot of ``q`` on the line."""
        s = self.signed_distance(q)
        return (q[0] - s * self.nx, q[1] - s * self.ny)


def dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def angle_on_circle(p: Point, center: Point) -> float:
    """Polar angle of ``p`` as seen from ``center``, in (-pi, pi]."""
    return math.atan2(p[1] - center[1], p[0] - center[0])


def circle_point(center: Point, radius: float, angle: float) -> Point:
    return (center[0] + radius * math.cos(angle), center[1] + radius * math.sin(angle))


def ccw_sweep(start: float, end: float) -> float:
    """Counterclockwise sweep from ``start`` to ``end``, in [0, 2*pi)."""
    return (end - start) % (2.0 * math.pi)


def rotate(p: Point, angle: float) -> Point:
    ca, sa = math.cos(angle), math.sin(angle)
    return (ca * p[0] - sa * p[1], sa * p[0] + ca * p[1])


def reflect_across(line_angle: float, p: Point) -> Point:
    """Mirror image of ``p`` across the line through the origin at ``line_angle``."""
    c2, s2 = math.cos(2.0 * line_angle), math.sin(2.0 * line_angle)
    return (c2 * p[0] + s2 * p[1], s2 * p[0] - c2 * p[1])


def polygon_area(xy) -> float:
    """Signed area of a closed polygon given as an (n, 2) sequence."""
    area = 0.0
    n = len(xy)
    for i in range(n):
        x0, y0 = xy[i]
        x1, y1 = xy[(i + 1) % n]
        area += x0 * y1 - x1 * y0
    return 0.5 * area
