"""Scalar special functions and the two intrinsic coordinate maps.

Everything here is pure and operates on plain floats; the model modules
vectorize on top of these where they need arrays.
"""

from __future__ import annotations

import math

from .errors import NegativeRadiusError, NonpositiveCurvatureError, PoleInSeriesError


def hyp2f1_terminating(N: int, b: float, c: float, z: float) -> float:
    """Terminating Gauss series 2F1(-N, b; c; z), an exact degree-N polynomial.

    Summed left to right with the ratio recurrence
    t_{k+1} = t_k * (-N+k)(b+k) / ((c+k)(k+1)) * z, which avoids gamma
    functions and overflow for the N <~ 50 this package uses.  Since the
    series terminates there are no convergence concerns for any finite z,
    including |z| >= 1.
    """
    if N < 0 or N != int(N):
        raise ValueError(f"first parameter must be a nonnegative integer, got {N}")
    N = int(N)
    if c <= 0 and c == int(c) and -int(c) <= N - 1:
        # (c)_k hits zero at k = -c+1 <= N, before the series terminates
        raise PoleInSeriesError(f"(c)_k vanishes for c={c} before termination at N={N}")
    total = 1.0
    term = 1.0
    for k in range(N):
        term *= (-N + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def gudermannian(x: float) -> float:
    """Gudermannian gd(x) = 2 arctan(e^x) - pi/2.

    Odd, strictly increasing, bounded by pi/2.  Evaluated through
    pi/2 - 2 arctan(e^-|x|) so large |x| never overflows the exponential.
    """
    if x >= 0:
        return math.pi / 2 - 2 * math.atan(math.exp(-x))
    return -(math.pi / 2 - 2 * math.atan(math.exp(x)))


def arcsinh(x: float) -> float:
    """ln(x + sqrt(x^2 + 1)) with a series guard below |x| = 1e-4.

    The guard avoids the log1p-style cancellation near zero; accuracy there
    matters for the r -> 0 limits of the coordinate maps.
    """
    ax = abs(x)
    if ax < 1e-4:
        # asinh x = x - x^3/6 + 3 x^5/40 - ...; x^7 term < 1e-28 here
        s = x * (1.0 - ax * ax / 6.0 + 3.0 * ax**4 / 40.0)
        return s
    s = math.log(ax + math.sqrt(ax * ax + 1.0))
    return s if x > 0 else -s


def theta_of_x(x: float, lam: float) -> float:
    """Intrinsic coordinate of the nonlinear-oscillator line: arcsinh(sqrt(lam) x)."""
    if not (lam > 0):
        raise NonpositiveCurvatureError(f"theta_of_x requires lam > 0, got {lam}")
    return arcsinh(math.sqrt(lam) * x)


def upsilon_of_r(r: float, lam: float) -> float:
    """Polar angle of the curved radial coordinate: arctan(sqrt(lam) r) in [0, pi/2)."""
    if not (lam > 0):
        raise NonpositiveCurvatureError(f"upsilon_of_r requires lam > 0, got {lam}")
    if r < 0:
        raise NegativeRadiusError(f"upsilon_of_r requires r >= 0, got {r}")
    return math.atan(math.sqrt(lam) * r)
