"""Coordinate, wavefunction, and potential maps between the nonlinear
oscillator on the line and the curved radial oscillator.

The coordinate map is x(r) = sinh(Upsilon(r))/sqrt(lam) with
Upsilon = arctan(sqrt(lam) r), under which the two intrinsic coordinates
coincide: Theta(x(r)) = Upsilon(r).  Wavefunctions map through
psi(r) = g(r) phi(x(r)) and potentials through a curvature-induced shift.
Both models must share one lam and the angular channel must equal the
fixed parameter m'_Q of the source model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import NegativeRadiusError, OutOfImageError, SingularPointError
from .params import PhysParams
from .special_functions import arcsinh

__all__ = [
    "MapContext",
    "x_of_r",
    "r_of_x",
    "x_image_supremum",
    "g_factor",
    "map_potential",
    "map_wavefunction",
]

# fixed convention of the wavefunction relation psi = g phi(x(r))
G_CONSTANT = complex(-2.0, 2.0)      # -2 (1 - i)


@dataclass(frozen=True)
class MapContext:
    """Shared curvature and the matched angular channel m' = m'_Q."""

    params: PhysParams
    mprime_q: float

    def __post_init__(self):
        self.params.require_curvature()


def x_image_supremum(lam: float) -> float:
    """sup of x(r) over r >= 0: sinh(pi/2)/sqrt(lam), not attained."""
    if not (lam > 0):
        raise ValueError(f"lam must be positive, got {lam}")
    return math.sinh(math.pi / 2) / math.sqrt(lam)


def x_of_r(ctx: MapContext, r: float) -> float:
    """x(r) = sinh(arctan(sqrt(lam) r))/sqrt(lam); strictly increasing,
    bounded above by sinh(pi/2)/sqrt(lam)."""
    if r < 0:
        raise NegativeRadiusError(f"x_of_r needs r >= 0, got {r}")
    lam = ctx.params.lam
    return math.sinh(math.atan(math.sqrt(lam) * r)) / math.sqrt(lam)


def r_of_x(ctx: MapContext, x: float) -> float:
    """Inverse map tan(arcsinh(sqrt(lam) x))/sqrt(lam) on [0, sinh(pi/2)/sqrt(lam))."""
    lam = ctx.params.lam
    if x < 0 or x >= x_image_supremum(lam):
        raise OutOfImageError(
            f"x = {x} outside the image [0, {x_image_supremum(lam)}) of the map")
    return math.tan(arcsinh(math.sqrt(lam) * x)) / math.sqrt(lam)


def g_factor(ctx: MapContext, r: float) -> complex:
    """g(r) = -2 (1-i) (lam r^2)^(-1/4) (1 + lam r^2)^(-1/2).

    The constant -2(1-i) is kept as a fixed convention; all physical
    comparisons are modulus- or ratio-based, so only |g| matters.
    """
    if r <= 0:
        raise SingularPointError(f"g(r) singular at r <= 0, got {r}")
    lam = ctx.params.lam
    return G_CONSTANT * (lam * r * r) ** -0.25 * (1 + lam * r * r) ** -0.5


def map_potential(ctx: MapContext, Vq: Callable[[float], float], r: float) -> float:
    """Radial potential from a line potential:

    V_rad(r) = Vq(x(r)) + (lam hbar^2/8m) [1 + (1 - 4 m'_Q^2)(1 + 1/(lam r^2))].
    """
    p = ctx.params
    lam = p.lam
    coeff = 1 - 4 * ctx.mprime_q**2
    if r <= 0:
        if coeff != 0:
            raise SingularPointError("curvature shift singular at r = 0")
        raise SingularPointError("map_potential needs r > 0")
    shift = lam * p.hbar**2 / (8 * p.mass) * (1 + coeff * (1 + 1 / (lam * r * r)))
    return Vq(x_of_r(ctx, r)) + shift


def map_wavefunction(ctx: MapContext, phi: Callable[[float], complex], r: float) -> complex:
    """psi(r) = g(r) phi(x(r))."""
    return g_factor(ctx, r) * phi(x_of_r(ctx, r))
