"""The radial oscillator on a 2D constant-curvature sphere and the
quasi-exactly solvable potentials obtained from the nonlinear-oscillator
construction.

After separating Psi(r, theta) = e^{i m' theta} psi(r), the radial
eigenproblem is

    -(hbar^2/2m) [ (1+lam r^2)^2 psi'' + (1+lam r^2)(1+5 lam r^2)/r psi'
                   + (3 lam - lam m'^2 + (15/4) lam^2 r^2 - m'^2/r^2) psi ]
    + V(r) psi = E psi.

For V = (1/2) m omega^2 r^2 the eigenpairs are hypergeometric with spectrum
E = hbar w' (2N+|m'|+1) + (lam hbar^2/2m)(2N+|m'|+1)^2.  The two
transplanted potential families below (cos(l Theta) and sqrt(lam) x source
models) are solvable only in the single angular channel m' = m'_Q.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import SingularPointError
from .params import PhysParams, QuantumNumbers
from .special_functions import gudermannian, hyp2f1_terminating, upsilon_of_r
from .crs import QesSpec

__all__ = [
    "RadialChannel",
    "QesExample1Params",
    "Example1SineFactor",
    "higgs_radial_coefficients",
    "higgs_wavefunction",
    "higgs_energy",
    "qes_example1_potential",
    "qes_example1_groundstate",
    "qes_example2_potential",
    "qes_example2_groundstate",
    "example1_branch_radius",
]


@dataclass(frozen=True)
class RadialChannel:
    """One angular channel of the separated problem."""

    mprime: int
    params: PhysParams


@dataclass(frozen=True)
class QesExample1Params:
    """The cos(l Theta) family: l > 0 with spec.A = -lam l^2 and spec.B = 0."""

    l: float
    spec: QesSpec

    def __post_init__(self):
        if not (self.l > 0):
            raise ValueError(f"l must be positive, got {self.l}")
        if self.spec.B != 0 or not self.spec.A < 0:
            raise ValueError("spec must carry A = -lam l^2 < 0 and B = 0")

    @classmethod
    def build(cls, l: float, mprime_q: float, params: PhysParams) -> "QesExample1Params":
        return cls(l=l, spec=QesSpec.example1(l, mprime_q, params))


def higgs_radial_coefficients(ch: RadialChannel, r: float) -> tuple[float, float, float]:
    """(p2, p1, p0) with the -hbar^2/2m factor applied, so the eigenproblem
    reads p2 psi'' + p1 psi' + p0 psi + V psi = E psi.  Singular at r = 0."""
    if r == 0:
        raise SingularPointError("radial coefficients singular at r = 0")
    p = ch.params
    lam, mp = p.lam, ch.mprime
    f = -p.hbar**2 / (2 * p.mass)
    K = 1 + lam * r * r
    return (f * K * K,
            f * K * (1 + 5 * lam * r * r) / r,
            f * (3 * lam - lam * mp**2 + 3.75 * lam**2 * r * r - mp**2 / (r * r)))


def higgs_wavefunction(qn: QuantumNumbers | tuple, params: PhysParams, r: float) -> float:
    """Unnormalized radial oscillator eigenfunction

    psi = r^|m'| (1/(1+lam r^2))^(1+|m'|/2+m w'/(2 hbar lam))
          * 2F1(-N, N+|m'|+1+m w'/(lam hbar); |m'|+1; lam r^2/(1+lam r^2)).

    At r = 0 this is 1 for m' = 0 and 0 otherwise.
    """
    lam = params.require_curvature()
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if isinstance(qn, tuple):
        N, mp = qn
    else:
        N, mp = qn.N, qn.mprime
    if r == 0:
        return 1.0 if mp == 0 else 0.0
    wp = params.omega_prime
    z = lam * r * r / (1 + lam * r * r)
    expo = 1 + abs(mp) / 2 + params.mass * wp / (2 * params.hbar * lam)
    b_par = N + abs(mp) + 1 + params.mass * wp / (lam * params.hbar)
    return (r ** abs(mp) * (1 / (1 + lam * r * r)) ** expo
            * hyp2f1_terminating(N, b_par, abs(mp) + 1, z))


def higgs_energy(qn: QuantumNumbers | tuple, params: PhysParams) -> float:
    """Radial oscillator spectrum; lam = 0 reduces to the flat 2D oscillator
    hbar omega (2N + |m'| + 1)."""
    if isinstance(qn, tuple):
        N, mp = qn
    else:
        N, mp = qn.N, qn.mprime
    n = 2 * N + abs(mp) + 1
    return params.hbar * params.omega_prime * n + params.lam * params.hbar**2 / (2 * params.mass) * n**2


def example1_branch_radius(l: float, params: PhysParams) -> float:
    """First sec singularity of the cos(l Theta) potential: the radius where
    (l/2) Upsilon(r) = pi/2.  Infinite for l <= 2 (Upsilon < pi/2 always)."""
    lam = params.require_curvature()
    if l <= 2:
        return math.inf
    return math.tan(math.pi / l) / math.sqrt(lam)


def qes_example1_potential(l: float, mprime_q: float, params: PhysParams, r: float) -> float:
    """Transplanted potential of the cos(l Theta) source model, term by term:

    V(r) = (hbar^2/8m r^2) [1 - 4 m'^2 + 2 lam r^2 (4 m'+3) + 4 lam r^2 (m'+1) delta]
         - (lam hbar^2/4m l^2) [10 + 8 m'(m'+2) + 8 (m'+1) delta
                + (l^2-4m'-2)(2m'+1) csc^2((l/2) U) + (l^2-4)(1+delta) sec^2((l/2) U)]
         + (2/l^2) m omega^2 [tan((l/2) U)/sqrt(lam)]^2,   U = Upsilon(r).

    The first bracket is evaluated in expanded form (the 1/r^2 piece split
    off exactly) so small r never suffers 0*inf cancellation.
    """
    lam = params.require_curvature()
    if r <= 0:
        raise SingularPointError(f"potential needs r > 0, got {r}")
    d = params.delta
    u = 0.5 * l * upsilon_of_r(r, lam)
    su, cu = math.sin(u), math.cos(u)
    if su == 0 or cu == 0:
        raise SingularPointError(f"(l/2) Upsilon(r) hits a csc/sec pole at r = {r}")
    hm = params.hbar**2 / (8 * params.mass)
    t1 = (hm * (1 - 4 * mprime_q**2) / (r * r)
          + hm * lam * (2 * (4 * mprime_q + 3) + 4 * (mprime_q + 1) * d))
    t2 = -(lam * params.hbar**2 / (4 * params.mass * l * l)) * (
        10 + 8 * mprime_q * (mprime_q + 2) + 8 * (mprime_q + 1) * d
        + (l * l - 4 * mprime_q - 2) * (2 * mprime_q + 1) / (su * su)
        + (l * l - 4) * (1 + d) / (cu * cu))
    t3 = (2 / (l * l)) * params.mass * params.omega**2 * (math.tan(u) / math.sqrt(lam))**2
    return t1 + t2 + t3


class Example1SineFactor(enum.Enum):
    """Angle convention of the sine factor in the cos(l Theta) ground state.

    FULL_ANGLE uses sin(l Upsilon), the form the factorization construction
    produces and the only one whose Rayleigh quotient is constant in the
    matching potential; HALF_ANGLE uses sin((l/2) Upsilon) and is retained
    so the alternative remains measurable (see the verify suite).
    """

    FULL_ANGLE = "full"
    HALF_ANGLE = "half"


def qes_example1_groundstate(l: float, mprime_q: float, params: PhysParams, r: float,
                             sine_factor: Example1SineFactor = Example1SineFactor.FULL_ANGLE
                             ) -> float:
    """Unnormalized channel-m'_Q ground state of the cos(l Theta) family,

    psi0 = (lam r^2)^(-1/4) (1+lam r^2)^(-1/2)
           [tan((l/2) U)]^(gamma/(lam l^2)) [sin(a U)]^(beta/(lam l^2)),

    with a = l (FULL_ANGLE) or a = l/2 (HALF_ANGLE).  Only defined on the
    principal branch (l/2) Upsilon in (0, pi/2).
    """
    lam = params.require_curvature()
    if r <= 0:
        raise SingularPointError(f"ground state needs r > 0, got {r}")
    spec = QesSpec.example1(l, mprime_q, params)
    u = upsilon_of_r(r, lam)
    if not (0 < 0.5 * l * u < math.pi / 2):
        raise SingularPointError(
            f"r = {r} lies outside the principal branch (l/2) Upsilon in (0, pi/2)")
    sin_arg = l * u if sine_factor is Example1SineFactor.FULL_ANGLE else 0.5 * l * u
    ll2 = lam * l * l
    return ((lam * r * r) ** -0.25 * (1 + lam * r * r) ** -0.5
            * math.tan(0.5 * l * u) ** (spec.gamma / ll2)
            * math.sin(sin_arg) ** (spec.beta / ll2))


def qes_example2_potential(mprime_q: float, params: PhysParams, r: float) -> float:
    """Transplanted potential of the sqrt(lam) x source model:

    V(r) = (2 m omega^2/lam) (sech U - tanh U)^2
         + (hbar^2/8m r^2) [1 + 2 lam r^2 - 4 m'^2 (1 + lam r^2)]
         + (lam hbar^2/2m) { m'(5m' - 3 delta) sech^2 U
             + [-2 + 2m'(5+4m') - 5 delta] sech U tanh U
             + [6 + 5m'(2+m') + 5(1+m') delta] tanh^2 U },   U = Upsilon(r).

    Smooth for all r > 0 (the hyperbolic factors take the bounded argument
    U < pi/2); the middle bracket is evaluated in expanded form.
    """
    lam = params.require_curvature()
    if r <= 0:
        raise SingularPointError(f"potential needs r > 0, got {r}")
    d = params.delta
    u = upsilon_of_r(r, lam)
    s = 1 / math.cosh(u)
    t = math.tanh(u)
    mq = mprime_q
    t1 = 2 * params.mass * params.omega**2 / lam * (s - t) ** 2
    hm = params.hbar**2 / (8 * params.mass)
    t2 = hm * (1 - 4 * mq * mq) / (r * r) + hm * lam * (2 - 4 * mq * mq)
    t3 = lam * params.hbar**2 / (2 * params.mass) * (
        mq * (5 * mq - 3 * d) * s * s
        + (-2 + 2 * mq * (5 + 4 * mq) - 5 * d) * s * t
        + (6 + 5 * mq * (2 + mq) + 5 * (1 + mq) * d) * t * t)
    return t1 + t2 + t3


def qes_example2_groundstate(spec: QesSpec, params: PhysParams, r: float) -> float:
    """Unnormalized channel-m'_Q ground state of the sqrt(lam) x family:

    psi0 = (lam r^2)^(-1/4) (1+lam r^2)^(-1/2) [sech U]^(beta/lam)
           * exp(-(gamma/lam) gd(U)).

    Diverges mildly (r^(-1/2)) at the origin; the weighted norm with
    w(r) = r stays finite.
    """
    lam = params.require_curvature()
    if r <= 0:
        raise SingularPointError(f"ground state needs r > 0, got {r}")
    u = upsilon_of_r(r, lam)
    return ((lam * r * r) ** -0.25 * (1 + lam * r * r) ** -0.5
            * math.cosh(u) ** (-spec.beta / lam)
            * math.exp(-(spec.gamma / lam) * gudermannian(u)))
