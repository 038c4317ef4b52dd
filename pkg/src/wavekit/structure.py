"""Self-similar wave structures outside a convex cornered wedge.

Given a right rest state (0, 0, c0), a left state (u1, 0, c1) moving
toward the corner, and the wedge half-angle theta0, the flow regime at
the corner is classified by u1 against c1 and c0 + c1, and the complete
picture in the (xi, eta) = (x/t, y/t) plane is constructed in closed
form: straight pressure waves, sonic circles, and the circular arcs
bounding the subsonic region.  Every wave of the Chaplygin gas is a
characteristic line, so each straight wave is tangent to the sonic
circles of both flanking states at a common point, and the velocity
jump across it is normal to the wave with magnitude equal to the
sound-speed jump.  The ``verify`` routine re-checks all of this
numerically and is the test oracle for the geometry.

Conventions
-----------
* Wave ``flanks`` are state names ordered (upstream, downstream) in the
  sense of the pseudo-flow crossing the wave.
* Arc angles sweep counterclockwise from ``start_angle`` to
  ``end_angle``; arcs are listed in counterclockwise order along the
  subsonic-region boundary.
* The wedge walls are the negative xi-axis and the ray at -theta0; both
  pass through the corner O = (0, 0).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field, replace

from . import geometry as geo
from . import riemann1d
from .gaslaw import FlowState, FlowState1D, GasConstants, density, pressure_from_c
from .geometry import Line, Point
from .riemann1d import WaveFamily, WaveKind, WaveLabel

DEFAULT_TOL = 1e-9


class RegimeError(ValueError):
    """Raised when a builder is called outside its regime."""


class StructureError(RuntimeError):
    """Raised when a construction fails an admissibility condition."""


class Regime(enum.Enum):
    SUBSONIC_CORNER = "subsonic_corner"
    CRITICAL = "critical"
    SUPERSONIC_CORNER = "supersonic_corner"
    UNSOLVABLE = "unsolvable"


class Verdict(enum.Enum):
    NONEXISTENCE = "nonexistence"
    EXISTS = "exists"
    OPEN = "open"
    NO_SOLUTION = "no_solution"


VERDICT_OF_REGIME = {
    Regime.SUBSONIC_CORNER: Verdict.NONEXISTENCE,
    Regime.CRITICAL: Verdict.OPEN,
    Regime.SUPERSONIC_CORNER: Verdict.EXISTS,
    Regime.UNSOLVABLE: Verdict.NO_SOLUTION,
}


@dataclass(frozen=True)
class ProblemInput:
    u1: float
    c0: float
    c1: float
    theta0: float
    k: GasConstants = GasConstants()

    def __post_init__(self) -> None:
        if not (self.c0 > 0.0 and self.c1 > 0.0):
            raise ValueError("sound speeds c0, c1 must be positive")
        if not (0.0 < self.theta0 < 0.5 * math.pi):
            raise ValueError(f"wedge half-angle must lie in (0, pi/2), got {self.theta0}")
        if not (self.u1 > 0.0):
            raise ValueError("only u1 > 0 is supported")


@dataclass(frozen=True)
class SonicCircle:
    label: str
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0):
            raise ValueError(f"sonic circle {self.label} must have positive radius")


@dataclass(frozen=True)
class StraightWave:
    name: str
    endpoints: tuple[Point, Point]
    flanks: tuple[str, str]  # (upstream, downstream) state names
    label: WaveLabel
    tangent_circles: tuple[str, ...] = ()

    def line(self) -> Line:
        a, b = self.endpoints
        return Line.through(a, (b[0] - a[0], b[1] - a[1]))


@dataclass(frozen=True)
class ArcSegment:
    name: str
    circle: str
    start_angle: float
    end_angle: float
    ends: tuple[str, str]  # point names at start_angle / end_angle


@dataclass
class WaveStructure:
    regime: Regime
    verdict: Verdict
    states: dict[str, FlowState]
    points: dict[str, Point]
    circles: list[SonicCircle]
    waves: list[StraightWave]
    arcs: list[ArcSegment]

    def circle(self, label: str) -> SonicCircle:
        for c in self.circles:
            if c.label == label:
                return c
        raise KeyError(f"no circle labelled {label!r}")

    def theta0(self) -> float:
        """Wedge half-angle, recovered from the wall foot P_3."""
        p3 = self.points.get("P_3")
        if p3 is None:
            raise KeyError("structure has no wall foot P_3")
        return math.atan2(-p3[1], p3[0])


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst(self) -> Check | None:
        return max(self.checks, key=lambda c: c.residual / c.tol, default=None)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def max_residual(self, prefix: str) -> float:
        vals = [c.residual for c in self.checks if c.name.startswith(prefix)]
        return max(vals) if vals else 0.0


def classify_regime(inp: ProblemInput, tol: float = DEFAULT_TOL) -> Regime:
    """Partition by corner flow speed: u1 against c1 and c0 + c1."""
    s1 = max(1.0, inp.u1, inp.c1)
    if inp.u1 < inp.c1 - tol * s1:
        return Regime.SUBSONIC_CORNER
    if inp.u1 <= inp.c1 + tol * s1:
        return Regime.CRITICAL
    s2 = max(1.0, inp.u1, inp.c0 + inp.c1)
    if inp.u1 < inp.c0 + inp.c1 - tol * s2:
        return Regime.SUPERSONIC_CORNER
    return Regime.UNSOLVABLE


def far_field_states(inp: ProblemInput) -> tuple[FlowState, FlowState, FlowState]:
    """The three constant states (U_0, U_1, U_m) of the far-field 1-D solution."""
    if classify_regime(inp) is Regime.UNSOLVABLE:
        raise RegimeError("far field undefined: u1 >= c0 + c1 (delta-wave regime)")
    u_m = 0.5 * (inp.u1 - inp.c1 + inp.c0)
    c_m = 0.5 * (inp.c0 - inp.u1 + inp.c1)
    return (
        FlowState(0.0, 0.0, inp.c0),
        FlowState(inp.u1, 0.0, inp.c1),
        FlowState(u_m, 0.0, c_m),
    )


def _far_field_labels(inp: ProblemInput) -> tuple[WaveLabel, WaveLabel]:
    data = riemann1d.RiemannData(FlowState1D(inp.u1, inp.c1), FlowState1D(0.0, inp.c0))
    return riemann1d.classify(data)


def _oblique_label(family: WaveFamily, c_up: float, c_down: float, tol: float = DEFAULT_TOL) -> WaveLabel:
    # Density drops downstream across a rarefaction, i.e. c increases.
    t = tol * max(1.0, c_up, c_down)
    if c_down > c_up + t:
        kind = WaveKind.RAREFACTION
    elif c_down < c_up - t:
        kind = WaveKind.SHOCK
    else:
        kind = WaveKind.NULL
    return WaveLabel(family, kind)


def _display_top(inp: ProblemInput, c_m: float) -> float:
    return 1.25 * max(inp.c0, inp.c1, c_m)


def _corner_probe_points(u_m: float, c_m: float, c0: float, theta0: float) -> dict[str, Point]:
    # Probe radii for the corner diagnostics: half the distance from the
    # corner to the degenerate boundary, and a quarter of that.
    r0 = 0.5 * min(c_m - abs(u_m), c0)
    eps = 0.25 * r0
    ct, st = math.cos(theta0), math.sin(theta0)
    return {
        "E_1": (-r0, 0.0),
        "E_2": (r0 * ct, -r0 * st),
        "F_1": (-eps, 0.0),
        "F_2": (eps * ct, -eps * st),
    }


def build_subsonic(inp: ProblemInput) -> WaveStructure:
    """Structure for the subsonic-corner regime u1 < c1 (verdict: nonexistence)."""
    if classify_regime(inp) is not Regime.SUBSONIC_CORNER:
        raise RegimeError(f"build_subsonic requires u1 < c1, got u1={inp.u1}, c1={inp.c1}")
    return _build_two_wave(inp, Regime.SUBSONIC_CORNER)


def build_critical(inp: ProblemInput) -> WaveStructure:
    """Structure for the critical regime u1 = c1; the wall piece on the
    negative axis shrinks to the corner and the verdict is open."""
    if classify_regime(inp) is not Regime.CRITICAL:
        raise RegimeError(f"build_critical requires u1 = c1, got u1={inp.u1}, c1={inp.c1}")
    return _build_two_wave(inp, Regime.CRITICAL)


def _build_two_wave(inp: ProblemInput, regime: Regime) -> WaveStructure:
    u0, u1s, um = far_field_states(inp)
    u_m, c_m = um.u, um.c
    th = inp.theta0

    states = {"U_0": u0, "U_1": u1s, "U_m": um}
    p1 = (inp.u1 - inp.c1, 0.0)
    p2 = (inp.c0, 0.0)
    p3 = (inp.c0 * math.cos(th), -inp.c0 * math.sin(th))
    points: dict[str, Point] = {
        "O": (0.0, 0.0),
        "O_m": (u_m, 0.0),
        "P_1": p1,
        "P_2": p2,
        "P_3": p3,
    }
    if regime is Regime.SUBSONIC_CORNER:
        points.update(_corner_probe_points(u_m, c_m, inp.c0, th))

    circles = [
        SonicCircle("C_0", (0.0, 0.0), inp.c0),
        SonicCircle("C_1", (inp.u1, 0.0), inp.c1),
        SonicCircle("C_m", (u_m, 0.0), c_m),
    ]

    top = _display_top(inp, c_m)
    lab1, lab2 = _far_field_labels(inp)
    waves = [
        StraightWave("L_1m", (p1, (p1[0], top)), ("U_1", "U_m"), lab1, ("C_1", "C_m")),
        StraightWave("L_m0", (p2, (p2[0], top)), ("U_0", "U_m"), lab2, ("C_m", "C_0")),
    ]

    arcs = [
        ArcSegment("Gamma_shock", "C_0", -th, 0.0, ("P_3", "P_2")),
        ArcSegment("Gamma_sonic", "C_m", 0.0, math.pi, ("P_2", "P_1")),
    ]

    return WaveStructure(
        regime=regime,
        verdict=VERDICT_OF_REGIME[regime],
        states=states,
        points=points,
        circles=circles,
        waves=waves,
        arcs=arcs,
    )


def build_supersonic(inp: ProblemInput) -> WaveStructure:
    """Structure for the supersonic-corner regime c1 < u1 < c0 + c1.

    A corner wave OP at angle beta = arcsin(c1/u1) meets the vertical
    wave L_1m at P, and the two-wave interaction there produces the
    state U_3 between the transmitted waves PT_m and PT_2.  The builder
    is fully closed form; tangency feet are computed as perpendicular
    feet from circle centers and asserted to coincide, so an
    inconsistent construction fails loudly instead of being adjusted.
    """
    if classify_regime(inp) is not Regime.SUPERSONIC_CORNER:
        raise RegimeError(
            f"build_supersonic requires c1 < u1 < c0 + c1, got u1={inp.u1}, c0={inp.c0}, c1={inp.c1}"
        )
    u0, u1s, um = far_field_states(inp)
    u_m, c_m = um.u, um.c
    th = inp.theta0

    beta = math.asin(inp.c1 / inp.u1)
    if beta + th >= 0.5 * math.pi:
        raise StructureError(
            f"admissibility failed: beta + theta0 = {beta + th:.6g} >= pi/2, corner wave cannot turn the flow"
        )

    xi_p = inp.u1 - inp.c1
    eta_p = xi_p * math.tan(beta)
    p = (xi_p, eta_p)
    p0 = (xi_p, 0.0)

    # Corner state behind OP.
    c2 = inp.c1 / math.tan(beta) * math.tan(beta + th)
    u2v = (inp.u1 + (c2 - inp.c1) * math.sin(beta), (inp.c1 - c2) * math.cos(beta))
    state2 = FlowState(u2v[0], u2v[1], c2)

    # Interaction of L_1m and OP at P; the incoming waves meet at pi/2 + beta.
    alpha = 0.5 * math.pi + beta
    try:
        c3 = riemann1d.interact(c_m, c2, eta_p, alpha)
    except riemann1d.InteractionUndefinedError as exc:
        raise StructureError(f"admissibility failed: {exc} (theta0 too large)") from exc
    beta_m = 2.0 * math.atan(c_m / eta_p)
    beta_3 = 2.0 * math.atan(c3 / eta_p)
    half3 = 0.5 * beta_3
    u3v = (
        xi_p - c3 * math.cos(0.5 * math.pi + beta_m - half3) / math.sin(half3),
        eta_p - c3 * math.sin(0.5 * math.pi + beta_m - half3) / math.sin(half3),
    )
    state3 = FlowState(u3v[0], u3v[1], c3)

    # Wave lines from P.
    line_op = Line.through((0.0, 0.0), (math.cos(beta), math.sin(beta)))
    line_ptm = Line.through(p, (math.sin(beta_m), -math.cos(beta_m)))
    delta = beta_3 - beta_m
    line_pt2 = Line.through(p, (-math.sin(delta), -math.cos(delta)))

    # Tangency feet, asserted consistent between the two flanking circles.
    t1 = _common_foot("T_1", line_op, ((inp.u1, 0.0), inp.c1), (u2v, c2))
    tm = _common_foot("T_m", line_ptm, ((u_m, 0.0), c_m), (u3v, c3))
    t2 = _common_foot("T_2", line_pt2, (u2v, c2), (u3v, c3))

    # Upstream wall crossing of the corner sonic circle; its center lies
    # on the wall, so both crossings exist.
    s_o2 = math.hypot(*u2v)
    s_p1 = s_o2 - c2
    if s_p1 < 0.0:
        raise StructureError("admissibility failed: corner lies inside the corner sonic circle")
    if s_p1 >= inp.c0:
        raise StructureError(
            "admissibility failed: wall point P_1 is not upstream of the shock foot P_3"
        )
    ct, st = math.cos(th), math.sin(th)
    p1 = (s_p1 * ct, -s_p1 * st)
    p2 = (inp.c0, 0.0)
    p3 = (inp.c0 * ct, -inp.c0 * st)

    states = {"U_0": u0, "U_1": u1s, "U_m": um, "U_2": state2, "U_3": state3}
    points = {
        "O": (0.0, 0.0),
        "O_m": (u_m, 0.0),
        "P": p,
        "P_0": p0,
        "P_1": p1,
        "P_2": p2,
        "P_3": p3,
        "T_1": t1,
        "T_2": t2,
        "T_m": tm,
    }
    circles = [
        SonicCircle("C_0", (0.0, 0.0), inp.c0),
        SonicCircle("C_1", (inp.u1, 0.0), inp.c1),
        SonicCircle("C_m", (u_m, 0.0), c_m),
        SonicCircle("C_2", u2v, c2),
        SonicCircle("C_3", u3v, c3),
    ]

    top = _display_top(inp, c_m)
    lab1, lab2 = _far_field_labels(inp)
    waves = [
        StraightWave("L_1m", (p, (xi_p, top)), ("U_1", "U_m"), lab1, ("C_1", "C_m")),
        StraightWave("L_m0", (p2, (p2[0], top)), ("U_0", "U_m"), lab2, ("C_m", "C_0")),
        StraightWave("OP", ((0.0, 0.0), p), ("U_1", "U_2"),
                     _oblique_label(WaveFamily.TWO, inp.c1, c2), ("C_1", "C_2")),
        StraightWave("PT_m", (p, tm), ("U_m", "U_3"),
                     _oblique_label(WaveFamily.TWO, c_m, c3), ("C_m", "C_3")),
        StraightWave("PT_2", (p, t2), ("U_2", "U_3"),
                     _oblique_label(WaveFamily.ONE, c2, c3), ("C_2", "C_3")),
    ]

    arcs = [
        ArcSegment("Gamma_shock", "C_0", -th, 0.0, ("P_3", "P_2")),
        ArcSegment("P_2T_m", "C_m", 0.0, beta_m, ("P_2", "T_m")),
        ArcSegment(
            "T_2T_m", "C_3", beta_m, geo.angle_on_circle(t2, u3v), ("T_m", "T_2")
        ),
        ArcSegment(
            "P_1T_2", "C_2",
            geo.angle_on_circle(t2, u2v), geo.angle_on_circle(p1, u2v), ("T_2", "P_1"),
        ),
    ]

    return WaveStructure(
        regime=Regime.SUPERSONIC_CORNER,
        verdict=Verdict.EXISTS,
        states=states,
        points=points,
        circles=circles,
        waves=waves,
        arcs=arcs,
    )


def _common_foot(
    name: str,
    line: Line,
    circ_a: tuple[Point, float],
    circ_b: tuple[Point, float],
    tol: float = 1e-9,
) -> Point:
    """Tangency foot of a wave shared by both flanking sonic circles."""
    feet = []
    for center, radius in (circ_a, circ_b):
        s = line.signed_distance(center)
        if abs(abs(s) - radius) > tol * max(1.0, radius):
            raise StructureError(
                f"tangency failed at {name}: |distance - radius| = {abs(abs(s) - radius):.3e}"
            )
        feet.append(line.foot(center))
    if geo.dist(feet[0], feet[1]) > tol * max(1.0, circ_a[1], circ_b[1]):
        raise StructureError(
            f"tangency feet disagree at {name} by {geo.dist(feet[0], feet[1]):.3e}"
        )
    return feet[0]


def build_no_solution(inp: ProblemInput) -> WaveStructure:
    """Placeholder structure for the delta-wave regime u1 >= c0 + c1."""
    th = inp.theta0
    return WaveStructure(
        regime=Regime.UNSOLVABLE,
        verdict=Verdict.NO_SOLUTION,
        states={
            "U_0": FlowState(0.0, 0.0, inp.c0),
            "U_1": FlowState(inp.u1, 0.0, inp.c1),
        },
        points={
            "O": (0.0, 0.0),
            "P_3": (inp.c0 * math.cos(th), -inp.c0 * math.sin(th)),
        },
        circles=[],
        waves=[],
        arcs=[],
    )


def build_structure(inp: ProblemInput, tol: float = DEFAULT_TOL) -> WaveStructure:
    """Dispatch to the regime builder."""
    regime = classify_regime(inp, tol)
    if regime is Regime.SUBSONIC_CORNER:
        return build_subsonic(inp)
    if regime is Regime.CRITICAL:
        return build_critical(inp)
    if regime is Regime.SUPERSONIC_CORNER:
        return build_supersonic(inp)
    return build_no_solution(inp)


def build_shock_diffraction(
    u1: float, c1: float, theta0: float, k: GasConstants = GasConstants()
) -> WaveStructure:
    """Single-shock specialization c0 = u1 + c1.

    The intermediate state coincides with the left initial state, so in
    the supersonic sub-case the interaction at P degenerates: the corner
    wave runs straight from O to its tangency T_m with the (merged)
    circle C_m = C_1, the states U_3 and U_2 coincide, and the points
    P, T_1, T_2 collapse onto T_m.  The straight corner wave exists only
    for theta0 < arcsin(c1/u1); beyond that the bent shock cannot reach
    the wall and the construction is rejected.
    """
    inp = ProblemInput(u1, u1 + c1, c1, theta0, k)
    regime = classify_regime(inp)
    if regime is Regime.SUBSONIC_CORNER:
        return build_subsonic(inp)
    if regime is Regime.CRITICAL:
        return build_critical(inp)

    beta = math.asin(c1 / u1)
    if theta0 >= beta:
        raise StructureError(
            f"shock cannot intersect the wedge: theta0 = {theta0:.6g} >= arcsin(c1/u1) = {beta:.6g}"
        )

    c0 = u1 + c1
    u0, u1s, um = far_field_states(inp)  # um == u1s here
    th = theta0

    c2 = c1 / math.tan(beta) * math.tan(beta + th)
    u2v = (u1 + (c2 - c1) * math.sin(beta), (c1 - c2) * math.cos(beta))
    state2 = FlowState(u2v[0], u2v[1], c2)

    line_op = Line.through((0.0, 0.0), (math.cos(beta), math.sin(beta)))
    tm = _common_foot("T_m", line_op, ((u1, 0.0), c1), (u2v, c2))

    s_p1 = math.hypot(*u2v) - c2
    if s_p1 < 0.0:
        raise StructureError("admissibility failed: corner lies inside the corner sonic circle")
    ct, st = math.cos(th), math.sin(th)
    p1 = (s_p1 * ct, -s_p1 * st)
    p2 = (c0, 0.0)
    p3 = (c0 * ct, -c0 * st)

    states = {"U_0": u0, "U_1": u1s, "U_m": um, "U_2": state2, "U_3": state2}
    points = {
        "O": (0.0, 0.0),
        "O_m": (u1, 0.0),
        "P": tm,
        "P_1": p1,
        "P_2": p2,
        "P_3": p3,
        "T_1": tm,
        "T_2": tm,
        "T_m": tm,
    }
    circles = [
        SonicCircle("C_0", (0.0, 0.0), c0),
        SonicCircle("C_m", (u1, 0.0), c1),
        SonicCircle("C_2", u2v, c2),
    ]

    top = _display_top(inp, c1)
    _, lab2 = _far_field_labels(inp)
    waves = [
        StraightWave("L_m0", (p2, (p2[0], top)), ("U_0", "U_m"), lab2, ("C_m", "C_0")),
        StraightWave("OP", ((0.0, 0.0), tm), ("U_1", "U_2"),
                     _oblique_label(WaveFamily.TWO, c1, c2), ("C_m", "C_2")),
    ]
    arcs = [
        ArcSegment("Gamma_shock", "C_0", -th, 0.0, ("P_3", "P_2")),
        ArcSegment("P_2T_m", "C_m", 0.0, 0.5 * math.pi + beta, ("P_2", "T_m")),
        ArcSegment(
            "P_1T_2", "C_2",
            geo.angle_on_circle(tm, u2v), geo.angle_on_circle(p1, u2v), ("T_2", "P_1"),
        ),
    ]

    return WaveStructure(
        regime=Regime.SUPERSONIC_CORNER,
        verdict=Verdict.EXISTS,
        states=states,
        points=points,
        circles=circles,
        waves=waves,
        arcs=arcs,
    )


# ---------------------------------------------------------------------------
# Verification


def _wall_slip_pairs(ws: WaveStructure) -> list[tuple[str, Point, str]]:
    """(wall name, exterior normal, state name) triples of known wall flanks."""
    th = ws.theta0()
    nu_minus = (0.0, -1.0)
    nu_plus = (-math.sin(th), -math.cos(th))
    pairs = [("Gamma_minus", nu_minus, "U_1"), ("Gamma_plus", nu_plus, "U_0")]
    if ws.regime is Regime.SUPERSONIC_CORNER:
        pairs.append(("Gamma_plus", nu_plus, "U_2"))
    return pairs


def verify(ws: WaveStructure, k: GasConstants = GasConstants(), tol: float = DEFAULT_TOL) -> VerificationReport:
    """Numerical re-check of a constructed structure.

    Per straight wave: the characteristic condition |(u,v).n - d| = c for
    both flanks, the self-similar mass and momentum jump conditions, and
    tangency to the recorded sonic circles.  Per wall-adjacent state: the
    slip condition.  Per arc: both named endpoints lie on the parent
    circle at the recorded angles.  Returns a report, never raises.
    """
    report = VerificationReport()
    add = report.checks.append

    for wave in ws.waves:
        a, b = wave.endpoints
        if geo.dist(a, b) == 0.0:
            add(Check(f"{wave.name}: endpoints distinct", math.inf, tol))
            continue
        line = wave.line()

        flank_states = [ws.states[n] for n in wave.flanks]
        for name, st in zip(wave.flanks, flank_states):
            res = abs(abs(line.nx * st.u + line.ny * st.v - line.d) - st.c)
            add(Check(f"{wave.name}: characteristic for {name}", res, tol))

        up, dn = flank_states
        fluxes = []
        for st in (up, dn):
            rho = density(st.c, k)
            w = line.nx * st.u + line.ny * st.v - line.d
            pres = pressure_from_c(st.c, k)
            fluxes.append(
                (rho * w, rho * w * st.u + pres * line.nx, rho * w * st.v + pres * line.ny)
            )
        res_mass = abs(fluxes[0][0] - fluxes[1][0])
        res_mom = max(abs(fluxes[0][1] - fluxes[1][1]), abs(fluxes[0][2] - fluxes[1][2]))
        add(Check(f"{wave.name}: RH mass", res_mass, tol))
        add(Check(f"{wave.name}: RH momentum", res_mom, tol))

        for label in wave.tangent_circles:
            c = ws.circle(label)
            res = abs(abs(line.signed_distance(c.center)) - c.radius)
            add(Check(f"{wave.name}: tangent to {label}", res, tol))

    if "P_3" in ws.points:
        for wall, nu, state_name in _wall_slip_pairs(ws):
            st = ws.states.get(state_name)
            if st is None:
                continue
            res = abs(st.u * nu[0] + st.v * nu[1])
            add(Check(f"{wall}: slip for {state_name}", res, tol))

    for arc in ws.arcs:
        c = ws.circle(arc.circle)
        for angle, end_name in ((arc.start_angle, arc.ends[0]), (arc.end_angle, arc.ends[1])):
            q = geo.circle_point(c.center, c.radius, angle)
            res = geo.dist(q, ws.points[end_name])
            add(Check(f"{arc.name}: end {end_name} on {arc.circle}", res, tol))

    return report


# ---------------------------------------------------------------------------
# JSON serialization
#
# Top-level keys: regime, verdict, states, points, circles, waves, arcs.
# All floats are written with 17 significant digits ('%.17g'), which
# round-trips float64 exactly and makes repeated runs byte-identical.


def _fmt(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite value in structure serialization")
    return format(float(x), ".17g")


def _dump(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (key, val) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(key))
            out.append(": ")
            _dump(val, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, val in enumerate(obj):
            if i:
                out.append(", ")
            _dump(val, out)
        out.append("]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt(obj))
    else:
        out.append(json.dumps(obj))


def to_json(ws: WaveStructure) -> str:
    doc = {
        "regime": ws.regime.value,
        "verdict": ws.verdict.value,
        "states": {name: [st.u, st.v, st.c] for name, st in ws.states.items()},
        "points": {name: [p[0], p[1]] for name, p in ws.points.items()},
        "circles": [
            {"label": c.label, "center": [c.center[0], c.center[1]], "radius": c.radius}
            for c in ws.circles
        ],
        "waves": [
            {
                "name": w.name,
                "endpoints": [[w.endpoints[0][0], w.endpoints[0][1]],
                              [w.endpoints[1][0], w.endpoints[1][1]]],
                "flanks": list(w.flanks),
                "family": int(w.label.family),
                "kind": w.label.kind.value,
                "tangent": list(w.tangent_circles),
            }
            for w in ws.waves
        ],
        "arcs": [
            {
                "name": a.name,
                "circle": a.circle,
                "start_angle": a.start_angle,
                "end_angle": a.end_angle,
                "ends": list(a.ends),
            }
            for a in ws.arcs
        ],
    }
    out: list[str] = []
    _dump(doc, out)
    out.append("\n")
    return "".join(out)


def from_json(text: str) -> WaveStructure:
    doc = json.loads(text)
    return WaveStructure(
        regime=Regime(doc["regime"]),
        verdict=Verdict(doc["verdict"]),
        states={name: FlowState(*vals) for name, vals in doc["states"].items()},
        points={name: (p[0], p[1]) for name, p in doc["points"].items()},
        circles=[
            SonicCircle(c["label"], (c["center"][0], c["center"][1]), c["radius"])
            for c in doc["circles"]
        ],
        waves=[
            StraightWave(
                w["name"],
                ((w["endpoints"][0][0], w["endpoints"][0][1]),
                 (w["endpoints"][1][0], w["endpoints"][1][1])),
                (w["flanks"][0], w["flanks"][1]),
                WaveLabel(WaveFamily(w["family"]), WaveKind(w["kind"])),
                tuple(w["tangent"]),
            )
            for w in doc["waves"]
        ],
        arcs=[
            ArcSegment(a["name"], a["circle"], a["start_angle"], a["end_angle"],
                       (a["ends"][0], a["ends"][1]))
            for a in doc["arcs"]
        ],
    )
