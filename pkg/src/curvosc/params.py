"""Shared physical parameters and quantum-number labels."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonpositiveCurvatureError


@dataclass(frozen=True)
class PhysParams:
    """Physical context every formula consumes.

    mass, hbar and omega must be positive.  The curvature lam may be any
    real number at construction time; operations that actually need
    curvature check lam > 0 themselves (flat-space limits use lam = 0).
    """

    mass: float = 1.0
    hbar: float = 1.0
    omega: float = 1.0
    lam: float = 1.0

    def __post_init__(self):
        if not (self.mass > 0):
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not (self.omega > 0):
            raise ValueError(f"omega must be positive, got {self.omega}")

    def require_curvature(self) -> float:
        """Return lam, rejecting lam <= 0."""
        if not (self.lam > 0):
            raise NonpositiveCurvatureError(f"operation requires lam > 0, got {self.lam}")
        return self.lam

    @property
    def omega_prime(self) -> float:
        """Effective frequency sqrt(omega^2 + hbar^2 lam^2 / (4 m^2))."""
        return math.sqrt(self.omega**2 + self.hbar**2 * self.lam**2 / (4 * self.mass**2))

    @property
    def delta(self) -> float:
        """sqrt(1 + 4 m^2 omega^2 / (lam^2 hbar^2)); needs lam > 0.

        Related to omega_prime by omega_prime = lam*hbar*delta/(2m).
        """
        lam = self.require_curvature()
        return math.sqrt(1 + 4 * self.mass**2 * self.omega**2 / (lam**2 * self.hbar**2))


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial excitation number N >= 0 and angular number m'."""

    N: int
    mprime: int = 0

    def __post_init__(self):
        if self.N < 0:
            raise ValueError(f"N must be nonnegative, got {self.N}")
