"""Exact 1-D Riemann solver for the Chaplygin gas.

Both characteristic families u - c and u + c are linearly degenerate, so
every elementary wave is a single line x/t = const in self-similar
coordinates.  The solver is closed form: data (u_l, c_l | u_r, c_r) is
solvable iff u_l - u_r < c_l + c_r, and the intermediate state is

    u_m = (u_r + u_l + c_r - c_l) / 2
    c_m = (c_r + u_r - u_l + c_l) / 2

with wave speeds u_l - c_l and u_r + c_r.  Beyond the solvability line
the solution concentrates into a delta wave, which is out of scope here
and reported as an error.

The module also provides the oblique two-wave interaction formula used
by the 2-D structure builder: the post-interaction sound speed at a
point at distance ``ell`` from the wall foot, with incoming flank sound
speeds ``c_a``, ``c_b`` meeting at angle ``alpha``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

from .gaslaw import FlowState1D

DEFAULT_TOL = 1e-9


class UnsolvableError(ValueError):
    """Raised when Riemann data lies in the delta-wave or critical regime."""


class InteractionUndefinedError(ValueError):
    """Raised when the two-wave interaction is inadmissible (angle too large)."""


class Solvability(enum.Enum):
    SOLVABLE = "solvable"
    CRITICAL = "critical"
    DELTA_WAVE = "delta_wave"


class WaveFamily(enum.IntEnum):
    ONE = 1
    TWO = 2


class WaveKind(enum.Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"
    NULL = "null"


@dataclass(frozen=True)
class WaveLabel:
    family: WaveFamily
    kind: WaveKind

    def __str__(self) -> str:
        if self.kind is WaveKind.NULL:
            return f"0{self.family.value}"
        return f"{'S' if self.kind is WaveKind.SHOCK else 'R'}{self.family.value}"


@dataclass(frozen=True)
class RiemannData:
    left: FlowState1D
    right: FlowState1D


@dataclass(frozen=True)
class RiemannSolution1D:
    middle: FlowState1D
    speed1: float
    speed2: float
    label1: WaveLabel
    label2: WaveLabel


def is_solvable(d: RiemannData, tol: float = DEFAULT_TOL) -> Solvability:
    """Classify data against the solvability condition u_l - u_r < c_l + c_r."""
    gap = (d.left.c + d.right.c) - (d.left.u - d.right.u)
    scale = max(1.0, abs(d.left.u), abs(d.right.u), d.left.c + d.right.c)
    if gap > tol * scale:
        return Solvability.SOLVABLE
    if gap < -tol * scale:
        return Solvability.DELTA_WAVE
    return Solvability.CRITICAL


def middle_state(d: RiemannData) -> FlowState1D:
    """Intermediate state between the two waves; requires solvable data."""
    status = is_solvable(d)
    if status is not Solvability.SOLVABLE:
        raise UnsolvableError(f"no intermediate state: data is {status.value} (u_l-u_r vs c_l+c_r)")
    u_m = 0.5 * (d.right.u + d.left.u + d.right.c - d.left.c)
    c_m = 0.5 * (d.right.c + d.right.u - d.left.u + d.left.c)
    return FlowState1D(u_m, c_m)


def classify(d: RiemannData, tol: float = DEFAULT_TOL) -> tuple[WaveLabel, WaveLabel]:
    """Wave labels (1-wave, 2-wave) for solvable data.

    The 1-wave is a rarefaction iff c_m > c_l, the 2-wave a shock iff
    c_r > c_m; jumps within ``tol`` (relative) are labelled null.
    """
    mid = middle_state(d)
    scale = max(1.0, d.left.c, d.right.c, mid.c)
    t = tol * scale

    if mid.c > d.left.c + t:
        kind1 = WaveKind.RAREFACTION
    elif mid.c < d.left.c - t:
        kind1 = WaveKind.SHOCK
    else:
        kind1 = WaveKind.NULL

    if d.right.c > mid.c + t:
        kind2 = WaveKind.SHOCK
    elif d.right.c < mid.c - t:
        kind2 = WaveKind.RAREFACTION
    else:
        kind2 = WaveKind.NULL

    return WaveLabel(WaveFamily.ONE, kind1), WaveLabel(WaveFamily.TWO, kind2)


def solve(d: RiemannData, tol: float = DEFAULT_TOL) -> RiemannSolution1D:
    """Full solution: middle state, wave speeds, and labels."""
    mid = middle_state(d)
    label1, label2 = classify(d, tol)
    return RiemannSolution1D(
        middle=mid,
        speed1=d.left.u - d.left.c,
        speed2=d.right.u + d.right.c,
        label1=label1,
        label2=label2,
    )


def sample(d: RiemannData, xi: float) -> FlowState1D:
    """State at the self-similar coordinate xi = x/t.

    Points exactly on a wave line return the middle state (the waves are
    a measure-zero set; a deterministic tie-break is needed for tests).
    """
    mid = middle_state(d)
    if xi < d.left.u - d.left.c:
        return d.left
    if xi > d.right.u + d.right.c:
        return d.right
    return mid


def interact(c_a: float, c_b: float, ell: float, alpha: float) -> float:
    """Sound speed behind the interaction of two oblique waves.

        c_out = ell * tan(atan(c_a/ell) + atan(c_b/ell) - alpha/2)

    ``ell`` is the distance from the interaction point to the wall foot
    and ``alpha`` the angle between the incoming waves.  The interaction
    is admissible iff the angle sum above lies in (0, pi/2); outside
    that range the construction has no meaning (wedge angle too large)
    and InteractionUndefinedError is raised.
    """
    if not (ell > 0.0):
        raise ValueError(f"interaction length must be positive, got ell={ell}")
    if not (0.0 < alpha < math.pi):
        raise ValueError(f"wave angle must lie in (0, pi), got alpha={alpha}")
    if not (c_a > 0.0 and c_b > 0.0):
        raise ValueError("incoming sound speeds must be positive")
    s = math.atan(c_a / ell) + math.atan(c_b / ell) - 0.5 * alpha
    if s <= 0.0:
        raise InteractionUndefinedError(
            f"interaction undefined: post-interaction sound speed would be <= 0 (angle sum {s:.6g})"
        )
    if s >= 0.5 * math.pi:
        raise InteractionUndefinedError(
            f"interaction undefined: angle sum {s:.6g} >= pi/2 violates admissibility"
        )
    c_out = ell * math.tan(s)
    # The printed lemma also asks for c_a + c_b > c_out with an ambiguous
    # c_out reading; flagged but not enforced.
    if c_a + c_b <= c_out:
        warnings.warn(
            f"interaction output c={c_out:.6g} exceeds c_a + c_b = {c_a + c_b:.6g}",
            RuntimeWarning,
            stacklevel=2,
        )
    return c_out
