"""Self-adjoint finite-difference machinery for 1D Sturm-Liouville
eigenproblems

    -(p psi')' + q psi = E w psi      on (a, b),

discretized on a uniform interior grid in conservative (finite-volume)
form:

    K_ii = (p_{i-1/2} + p_{i+1/2}) / h^2 + q_i,   K_{i,i+1} = -p_{i+1/2}/h^2,
    M = diag(w_i),          K v = E M v.

This module never evaluates any closed-form spectrum or wavefunction of
the model modules; it is the independent check applied to them.

Endpoint handling
-----------------
Plain Dirichlet walls are exact for limit-point endpoints.  Radial and
inverse-square-type problems have singular endpoints where the regular
solution behaves like |x - x0|^sigma; a Dirichlet wall at small distance
then converges only like a power of the cutoff (or logarithmically, for
sigma = 0 or the critical sigma = 1/2), far too slowly for the tolerances
used here.  The "power" endpoint rule instead:

  * closes the boundary face with the flux of the local profile
    phi(x) = |x-x0|^sigma (1 + c1 d + c2 d^2) fitted through the adjacent
    interior point,
  * replaces the face derivative factors 1/h near the corner by
    dphi(face)/(phi(x_i) - phi(x_{i-1})), exact on the profile,
  * replaces q_i, w_i near the corner by profile-weighted cell averages
    int q phi / (phi(x_i) h), so the divergent 1/x^2 parts of q are
    integrated exactly against the profile instead of point-sampled.

All three changes keep K symmetric (the face factors multiply the same
difference in both adjacent rows; the closure only adds to the diagonal).
An optional ratio tie u_1 = tau u_2 (tau from the profile) eliminates the
first interior point by symmetric Rayleigh-Ritz reduction; for a resonant
indicial pair this suppresses the unwanted partner solution exactly at the
two-point level.  The "decay" rule is the analogous closure for an
infinite right endpoint with profile x^(-mu).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import (
    NodeDetectedError,
    NonpositiveWeightError,
    UnresolvedError,
    ZeroNormError,
)

__all__ = [
    "Grid1D",
    "EndpointRule",
    "SturmLiouvilleProblem",
    "TridiagonalSystem",
    "EigenResult",
    "assemble",
    "lowest_eigenvalues",
    "richardson_eigenvalues",
    "residual_norm",
    "rayleigh_quotient",
    "normalize",
]

_GX, _GW = np.polynomial.legendre.leggauss(24)


def _cell_integral(f, lo: float, hi: float) -> float:
    xm = 0.5 * (hi + lo) + 0.5 * (hi - lo) * _GX
    return 0.5 * (hi - lo) * float(np.dot(_GW, f(xm)))


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid: n interior points on (a, b), spacing h = (b-a)/(n+1)."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{self.a}, {self.b}]")
        if self.n < 3:
            raise ValueError(f"need n >= 3 interior points, got {self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / (self.n + 1)

    def points(self) -> np.ndarray:
        """Interior points a + i h, i = 1..n."""
        return self.a + self.h * np.arange(1, self.n + 1)

    def faces(self) -> np.ndarray:
        """Cell faces a + (i + 1/2) h, i = 0..n."""
        return self.a + self.h * (np.arange(0, self.n + 1) + 0.5)

    def refined(self) -> "Grid1D":
        """Same interval with h halved (n -> 2n + 1)."""
        return Grid1D(self.a, self.b, 2 * self.n + 1)


@dataclass(frozen=True)
class EndpointRule:
    """Boundary treatment of one endpoint; see the module docstring."""

    kind: str = "dirichlet"       # "dirichlet" | "power" | "decay"
    exponent: float = 0.0         # sigma for power, mu for decay
    center: float = 0.0           # singular point location for power
    series: tuple = ()            # (c1, c2, ...) profile corrections
    tie: bool = False             # eliminate adjacent point via profile ratio
    cells: int | None = None      # corrected cells; default n//5 (power), 2 (decay)

    @classmethod
    def dirichlet(cls) -> "EndpointRule":
        return cls()

    @classmethod
    def power(cls, sigma: float, center: float, series: Sequence[float] = (),
              tie: bool = False, cells: int | None = None) -> "EndpointRule":
        return cls(kind="power", exponent=sigma, center=center,
                   series=tuple(series), tie=tie, cells=cells)

    @classmethod
    def decay(cls, mu: float, cells: int | None = 2) -> "EndpointRule":
        return cls(kind="decay", exponent=mu, cells=cells)

    def profile(self):
        """(phi, dphi) callables of the local regular profile."""
        if self.kind == "power":
            sig, c, ser = self.exponent, self.center, self.series

            def poly(d):
                out = np.ones_like(d)
                for j, cj in enumerate(ser):
                    out = out + cj * d ** (j + 1)
                return out

            def dpoly(d):
                out = np.zeros_like(d)
                for j, cj in enumerate(ser):
                    out = out + (j + 1) * cj * d ** j
                return out

            if sig == 0 and not ser:
                return (lambda t: np.ones_like(np.asarray(t, float)),
                        lambda t: np.zeros_like(np.asarray(t, float)))

            def phi(t):
                d = np.abs(np.asarray(t, float) - c)
                return d ** sig * poly(d)

            def dphi(t):
                t = np.asarray(t, float)
                d = np.abs(t - c)
                return np.sign(t - c) * (sig * d ** (sig - 1) * poly(d)
                                         + d ** sig * dpoly(d))

            return phi, dphi
        if self.kind == "decay":
            mu = self.exponent
            return (lambda t: np.asarray(t, float) ** (-mu),
                    lambda t: -mu * np.asarray(t, float) ** (-mu - 1))
        raise ValueError(f"no profile for rule kind {self.kind!r}")


def dirichlet_both() -> tuple[EndpointRule, EndpointRule]:
    return EndpointRule.dirichlet(), EndpointRule.dirichlet()


def regular_left_dirichlet_right(sigma: float, center: float = 0.0,
                                 **kw) -> tuple[EndpointRule, EndpointRule]:
    return EndpointRule.power(sigma, center, **kw), EndpointRule.dirichlet()


@dataclass(frozen=True)
class SturmLiouvilleProblem:
    """-(p psi')' + q psi = E w psi on grid, with endpoint rules bc."""

    p: Callable[[np.ndarray], np.ndarray]
    q: Callable[[np.ndarray], np.ndarray]
    w: Callable[[np.ndarray], np.ndarray]
    grid: Grid1D
    bc: tuple[EndpointRule, EndpointRule] = field(default_factory=dirichlet_both)

    def refined(self) -> "SturmLiouvilleProblem":
        return SturmLiouvilleProblem(self.p, self.q, self.w, self.grid.refined(), self.bc)


@dataclass
class TridiagonalSystem:
    """Assembled K v = E M v with K symmetric tridiagonal, M positive diagonal.

    Ratio ties may have reduced the system; tie_left/tie_right hold the
    elimination ratios needed to reconstruct full-grid eigenvectors.
    """

    k_diag: np.ndarray
    k_off: np.ndarray
    m_diag: np.ndarray
    grid: Grid1D
    tie_left: float | None = None
    tie_right: float | None = None

    def standard_form(self) -> tuple[np.ndarray, np.ndarray]:
        """(d, e) of the similarity-transformed standard problem
        M^(-1/2) K M^(-1/2) u = E u."""
        d = self.k_diag / self.m_diag
        e = self.k_off / np.sqrt(self.m_diag[:-1] * self.m_diag[1:])
        return d, e

    def expand(self, u_reduced: np.ndarray) -> np.ndarray:
        """Insert tie-eliminated points back into a reduced vector."""
        v = u_reduced
        if self.tie_left is not None:
            v = np.concatenate(([self.tie_left * v[0]], v))
        if self.tie_right is not None:
            v = np.concatenate((v, [self.tie_right * v[-1]]))
        return v


@dataclass
class EigenResult:
    """Lowest eigenpairs of a discretized problem.

    Eigenvalues ascend strictly; eigenvectors are sampled on grid.points()
    and normalized to sum(w_i v_i^2 h) = 1 with the first significant
    component positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray          # shape (n, k)
    residual_norms: np.ndarray
    grid: Grid1D

    def __post_init__(self):
        if np.any(np.diff(self.eigenvalues) <= 0):
            raise ValueError("eigenvalues not strictly ascending")


def assemble(problem: SturmLiouvilleProblem) -> TridiagonalSystem:
    """Build the symmetric tridiagonal generalized eigensystem."""
    grid = problem.grid
    n, h = grid.n, grid.h
    x = grid.points()
    xf = grid.faces()
    pf = np.asarray(problem.p(xf), float)
    qi = np.array(problem.q(x), float)
    wi = np.array(problem.w(x), float)
    if np.any(wi <= 0):
        raise NonpositiveWeightError("weight w must be positive on the interior")
    if np.any(pf <= 0):
        raise NonpositiveWeightError("leading coefficient p must be positive at faces")

    g = np.full(n + 1, 1.0 / h)       # face derivative factors
    extra0 = 0.0
    extra1 = 0.0
    left, right = problem.bc

    def apply_corner(side: int, rule: EndpointRule):
        nonlocal extra0, extra1
        if rule.kind == "dirichlet":
            return
        phi, dphi = rule.profile()
        ncells = rule.cells
        if ncells is None:
            ncells = max(40, n // 5) if rule.kind == "power" else 2
        ncells = min(ncells, n)
        if side == 0:
            for j in range(1, ncells):
                dp = phi(x[j]) - phi(x[j - 1])
                if dp != 0:
                    g[j] = dphi(xf[j]) / dp
            ph1 = phi(x[0])
            if ph1 != 0:
                extra0 += pf[0] * dphi(xf[0]) / ph1 / h
            for i in range(ncells):
                s = phi(x[i])
                qi[i] = _cell_integral(lambda t: problem.q(t) * phi(t), xf[i], xf[i + 1]) / (s * h)
                wi[i] = _cell_integral(lambda t: problem.w(t) * phi(t), xf[i], xf[i + 1]) / (s * h)
        else:
            for j in range(max(n - ncells, 1), n):
                dp = phi(x[j]) - phi(x[j - 1])
                if dp != 0:
                    g[j] = dphi(xf[j]) / dp
            phn = phi(x[n - 1])
            if phn != 0:
                extra1 += -pf[n] * dphi(xf[n]) / phn / h
            for i in range(max(n - ncells, 0), n):
                s = phi(x[i])
                qi[i] = _cell_integral(lambda t: problem.q(t) * phi(t), xf[i], xf[i + 1]) / (s * h)
                wi[i] = _cell_integral(lambda t: problem.w(t) * phi(t), xf[i], xf[i + 1]) / (s * h)

    apply_corner(0, left)
    apply_corner(1, right)

    off = -pf[1:-1] * g[1:-1] / h
    diag = (pf[:-1] * g[:-1] + pf[1:] * g[1:]) / h + qi
    if left.kind != "dirichlet":
        diag[0] = pf[1] * g[1] / h + qi[0] + extra0
    if right.kind != "dirichlet":
        diag[-1] = pf[-2] * g[-2] / h + qi[-1] + extra1

    tie_left = tie_right = None
    if left.kind == "power" and left.tie:
        phi, _ = left.profile()
        tau = float(phi(x[0]) / phi(x[1]))
        k11, k12, m11 = diag[0], off[0], wi[0]
        diag, off, wi = diag[1:].copy(), off[1:].copy(), wi[1:].copy()
        diag[0] += 2 * tau * k12 + tau * tau * k11
        wi[0] += tau * tau * m11
        tie_left = tau
    if right.kind in ("power", "decay") and right.tie:
        phi, _ = right.profile()
        tau = float(phi(x[-1]) / phi(x[-2]))
        knn, koff, mnn = diag[-1], off[-1], wi[-1]
        diag, off, wi = diag[:-1].copy(), off[:-1].copy(), wi[:-1].copy()
        diag[-1] += 2 * tau * koff + tau * tau * knn
        wi[-1] += tau * tau * mnn
        tie_right = tau

    return TridiagonalSystem(diag, off, wi, grid, tie_left, tie_right)


def lowest_eigenvalues(problem: SturmLiouvilleProblem, k: int) -> EigenResult:
    """k smallest eigenpairs by bisection on the Sturm-sequence sign count
    plus inverse iteration (LAPACK stebz/stein via eigh_tridiagonal)."""
    n = problem.grid.n
    if k < 1:
        raise ValueError("k must be positive")
    if k > n // 4:
        raise UnresolvedError(f"k = {k} exceeds resolved-mode budget n/4 = {n // 4}")
    system = assemble(problem)
    d, e = system.standard_form()
    vals, u = eigh_tridiagonal(d, e, select="i", select_range=(0, k - 1))
    edge = float(np.max(d) + 2 * np.max(np.abs(e)))
    if vals[-1] > 0.95 * edge:
        raise UnresolvedError(
            f"eigenvalue {vals[-1]:.6g} within 5% of the spectral edge {edge:.6g}")
    h = problem.grid.h
    wi_full = np.asarray(problem.w(problem.grid.points()), float)
    vecs = np.empty((n, k))
    resid = np.empty(k)
    m_red = system.m_diag
    for j in range(k):
        ur = u[:, j] / np.sqrt(m_red)        # back from the standard form
        kv = system.k_diag * ur
        kv[:-1] += system.k_off * ur[1:]
        kv[1:] += system.k_off * ur[:-1]
        mv = m_red * ur
        resid[j] = float(np.linalg.norm(kv - vals[j] * mv)
                         / ((1 + abs(vals[j])) * np.linalg.norm(mv)))
        v = system.expand(ur)
        nrm = math.sqrt(float(np.sum(wi_full * v * v) * h))
        if nrm == 0:
            raise ZeroNormError("eigenvector with zero weighted norm")
        v = v / nrm
        big = np.nonzero(np.abs(v) > 1e-8 * np.max(np.abs(v)))[0]
        if big.size and v[big[0]] < 0:
            v = -v
        vecs[:, j] = v
    return EigenResult(vals, vecs, resid, problem.grid)


def richardson_eigenvalues(problem: SturmLiouvilleProblem, k: int
                           ) -> tuple[np.ndarray, EigenResult, EigenResult]:
    """Eigenvalues on the grid and its h/2 refinement plus the second-order
    Richardson combination (4 E_fine - E_coarse)/3.  Returns
    (extrapolated, coarse result, fine result)."""
    coarse = lowest_eigenvalues(problem, k)
    fine = lowest_eigenvalues(problem.refined(), k)
    extrap = (4 * fine.eigenvalues - coarse.eigenvalues) / 3
    return extrap, coarse, fine


def residual_norm(p2: Callable, p1: Callable, p0plusV: Callable,
                  psi: Callable, E: float, grid: Grid1D,
                  step: float | Callable[[float], float] | None = None) -> float:
    """Max relative pointwise residual of p2 psi'' + p1 psi' + (p0+V) psi = E psi
    over the interior grid, derivatives by 5-point central stencils.

    The stencil step defaults to grid.h; pass a number or a callable
    step(x) to decouple it from the sampling grid (radial problems want a
    step growing with r so the relative resolution stays uniform).  Points
    where |psi| < 1e-10 max|psi| are excluded from the maximum.
    """
    x = grid.points()
    if step is None:
        hv = np.full(x.shape, grid.h)
    elif callable(step):
        hv = np.array([step(t) for t in x], float)
    else:
        hv = np.full(x.shape, float(step))
    f = {}
    for s in (-2, -1, 0, 1, 2):
        f[s] = np.array([psi(t) for t in x + s * hv], float)
    d1 = (f[-2] - 8 * f[-1] + 8 * f[1] - f[2]) / (12 * hv)
    d2 = (-f[-2] + 16 * f[-1] - 30 * f[0] + 16 * f[1] - f[2]) / (12 * hv * hv)
    p2v = np.array([p2(t) for t in x], float)
    p1v = np.array([p1(t) for t in x], float)
    p0v = np.array([p0plusV(t) for t in x], float)
    res = np.abs(p2v * d2 + p1v * d1 + p0v * f[0] - E * f[0])
    scale = abs(E) * np.abs(f[0]) + 1e-300
    mask = np.abs(f[0]) >= 1e-10 * np.max(np.abs(f[0]))
    return float(np.max(res[mask] / scale[mask]))


def rayleigh_quotient(problem: SturmLiouvilleProblem, psi: Callable,
                      exclude: int = 10) -> tuple[float, float]:
    """Pointwise energy e(x) = [-(p psi')' + q psi]/(w psi) on the interior
    grid (5-point stencils, step grid.h), excluding `exclude` points at each
    end where endpoint singularities contaminate the stencils.

    Returns (weighted mean of e with weight w psi^2, std(e)/|mean(e)|).
    Raises NodeDetectedError if psi changes sign on the included points.
    """
    grid = problem.grid
    h = grid.h
    x = grid.points()[exclude: grid.n - exclude]
    if x.size < 5:
        raise ValueError("grid too small for the requested exclusion zone")
    f = {}
    for s in (-2, -1, 0, 1, 2):
        f[s] = np.array([psi(t) for t in x + s * h], float)
    if np.any(f[0][:-1] * f[0][1:] < 0):
        raise NodeDetectedError("psi changes sign; Rayleigh quotient needs a nodeless state")
    d1 = (f[-2] - 8 * f[-1] + 8 * f[1] - f[2]) / (12 * h)
    d2 = (-f[-2] + 16 * f[-1] - 30 * f[0] + 16 * f[1] - f[2]) / (12 * h * h)
    pv = {}
    for s in (-2, -1, 0, 1, 2):
        pv[s] = np.asarray(problem.p(x + s * h), float)
    dp = (pv[-2] - 8 * pv[-1] + 8 * pv[1] - pv[2]) / (12 * h)
    qv = np.asarray(problem.q(x), float)
    wv = np.asarray(problem.w(x), float)
    e = (-pv[0] * d2 - dp * d1 + qv * f[0]) / (wv * f[0])
    weight = wv * f[0] * f[0]
    mean_w = float(np.sum(weight * e) / np.sum(weight))
    constancy = float(np.std(e) / abs(np.mean(e)))
    return mean_w, constancy


def normalize(psi_samples: np.ndarray, w_samples: np.ndarray, h: float) -> np.ndarray:
    """Scale samples so the trapezoidal integral of w psi^2 equals 1."""
    psi_samples = np.asarray(psi_samples, float)
    w_samples = np.asarray(w_samples, float)
    nrm2 = float(np.trapezoid(w_samples * psi_samples**2, dx=h))
    if nrm2 <= 0:
        raise ZeroNormError(f"weighted norm {nrm2} is not positive")
    return psi_samples / math.sqrt(nrm2)
