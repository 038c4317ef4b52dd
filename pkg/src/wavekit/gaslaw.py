"""Chaplygin equation of state and flow-state containers.

The gas law is p(rho) = A*(1/rho_star - 1/rho) with sound speed
c = sqrt(A)/rho.  The product rho*c is therefore the constant sqrt(A),
which is why every wave of this gas is a single characteristic line.
All other modules work in the velocity/sound-speed variables (u, v, c);
density and pressure are derived on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class GasConstants:
    """EOS parameters: pressure scale A and reference density rho_star."""

    A: float = 1.0
    rho_star: float = 1.0

    def __post_init__(self) -> None:
        if not (self.A > 0.0) or not (self.rho_star > 0.0):
            raise ValueError(f"gas constants must be positive, got A={self.A}, rho_star={self.rho_star}")


@dataclass(frozen=True)
class FlowState:
    """Constant 2-D flow state: velocity (u, v) and sound speed c > 0."""

    u: float
    v: float
    c: float

    def __post_init__(self) -> None:
        if not (self.c > 0.0):
            raise ValueError(f"sound speed must be positive, got c={self.c}")


@dataclass(frozen=True)
class FlowState1D:
    """Constant 1-D flow state: velocity u and sound speed c > 0."""

    u: float
    c: float

    def __post_init__(self) -> None:
        if not (self.c > 0.0):
            raise ValueError(f"sound speed must be positive, got c={self.c}")


def density(c: float, k: GasConstants = GasConstants()) -> float:
    """Density of the state with sound speed ``c``: rho = sqrt(A)/c."""
    if not (c > 0.0):
        raise ValueError(f"sound speed must be positive, got c={c}")
    return math.sqrt(k.A) / c


def sound_speed(rho: float, k: GasConstants = GasConstants()) -> float:
    """Sound speed of the state with density ``rho``: c = sqrt(A)/rho."""
    if not (rho > 0.0):
        raise ValueError(f"density must be positive, got rho={rho}")
    return math.sqrt(k.A) / rho


def pressure(rho: float, k: GasConstants = GasConstants()) -> float:
    """Pressure p = A*(1/rho_star - 1/rho).  Negative for rho < rho_star."""
    if not (rho > 0.0):
        raise ValueError(f"density must be positive, got rho={rho}")
    return k.A * (1.0 / k.rho_star - 1.0 / rho)


def pressure_from_c(c: float, k: GasConstants = GasConstants()) -> float:
    """Pressure in terms of sound speed: p = A/rho_star - sqrt(A)*c."""
    if not (c > 0.0):
        raise ValueError(f"sound speed must be positive, got c={c}")
    return k.A / k.rho_star - math.sqrt(k.A) * c


def mass_flux_constant(state: FlowState | FlowState1D, k: GasConstants = GasConstants()) -> float:
    """rho*c for the given state; identically sqrt(A) for this gas."""
    return density(state.c, k) * state.c
