"""Independent closed-form results used as oracles for the recursion engine.

Covers the analytic Hulthen corrections E_0..E_5, the exact s-wave energy
with its screening expansion and critical coupling, and the Coulomb-limit
wavefunction apparatus (rescaled Laurent coefficients and the polynomial
factor obeying the associated-Laguerre recurrence).

All formulas are scalar-generic like the recursion engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AboveCritical,
    DomainError,
    NegativeDiscriminant,
    NoCritical,
    SingularSystem,
)
from .potentials import HulthenParams
from .perturbation import QuantumState

__all__ = [
    "SWaveExact",
    "CoulombLaurent",
    "hulthen_closed_corrections",
    "exact_swave_energy",
    "exact_swave_expansion",
    "critical_lambda",
    "coulomb_d_coefficients",
    "coulomb_polynomial_check",
]


@dataclass(frozen=True)
class SWaveExact:
    """Exact s-wave energy with its auxiliary numbers.

    kappa = sqrt(Ntilde^2 + a^2 - b^2) and
    Ntilde = n + 1/2 + sqrt(b^2 - a^2 + 1/4).
    """

    energy: float
    kappa: float
    cap_n_tilde: float


@dataclass(frozen=True)
class CoulombLaurent:
    """Coulomb-limit Laurent coefficients d_k in the variable rho = 2*mu*r."""

    d: tuple
    gamma: float
    n: int


def _swave_numbers(a, b, n):
    disc = b * b - a * a + 0.25
    if float(disc) < 0:
        raise NegativeDiscriminant(
            f"b^2 - a^2 + 1/4 = {float(disc):.6g} < 0: no regular s-wave"
        )
    cap_n_tilde = n + 0.5 + disc**0.5
    kappa = (cap_n_tilde * cap_n_tilde + a * a - b * b) ** 0.5
    return cap_n_tilde, kappa


def hulthen_closed_corrections(params: HulthenParams, state: QuantumState) -> tuple:
    """Analytic corrections E_0..E_5 for the Hulthen pair.

    Written with the recurring combinations A = a*m + b*E_0 (vector-weighted)
    and B = b*m + a*E_0 (scalar-weighted), mu^2 = m^2 - E_0^2, L = l(l+1).
    Every odd correction from the third onward carries an overall factor b.
    """
    a, b, lam = params.a, params.b, params.lam
    m = state.m
    l = state.l
    L = l * (l + 1)
    disc = b * b - a * a + (l + 0.5) ** 2
    if float(disc) < 0:
        raise NegativeDiscriminant(
            f"b^2 - a^2 + (l+1/2)^2 = {float(disc):.6g} < 0"
        )
    cap_n = state.n + 0.5 + disc**0.5
    radicand = cap_n * cap_n + a * a - b * b
    if float(radicand) < 0:
        raise DomainError(f"N^2 + a^2 - b^2 = {float(radicand):.6g} < 0")
    e0 = m * (cap_n * radicand**0.5 - a * b) / (cap_n * cap_n + a * a)
    mu2 = m * m - e0 * e0
    if not float(mu2) > 0:
        raise DomainError("state sits at the continuum edge; corrections undefined")

    A = a * m + b * e0
    B = b * m + a * e0
    e1 = lam / (2 * m) * A
    e2 = -(lam**2) * B / (24 * A * mu2 * m) * (3 * A * A - mu2 * L)
    e3 = -lam * b / (2 * m) * e2

    # shared part of the two long angular brackets
    common = (
        24 * a**3 * m**3 * b * e0 * (6 * e0 * e0 - m * m)
        + 6 * a**4 * m**4 * (7 * e0 * e0 - 2 * m * m)
        - a * m * mu2 * (a * m + 2 * b * e0) * (5 * L * e0 * e0 + 13 * L * m * m - 6 * m * m)
        + b * b * m * m * mu2 * (5 * L * m * m - 23 * L * e0 * e0 + 6 * e0 * e0)
        + 6 * b * b * e0 * e0 * (22 * a * a * m * m * e0 * e0 - 2 * a * a * m**4 - 5 * b * b * e0**4)
    )
    e4 = (
        -(lam**4) * B / (5760 * A**3 * mu2**2 * m**3)
        * (45 * (A**6 + 5 * b * b * mu2 * A**4)
           + L * (common - 6 * b * b * A * A * (13 * m**4 - 28 * m * m * e0 * e0 + 5 * e0**4)))
    )
    e5 = (
        lam**5 * b * B / (3840 * A**3 * mu2**2 * m**4)
        * (45 * A**6 + 105 * b * b * mu2 * A**4
           + L * (common - 2 * b * b * A * A * (19 * m**4 - 44 * m * m * e0 * e0 - 5 * e0**4)))
    )
    return (e0, e1, e2, e3, e4, e5)


def exact_swave_energy(params: HulthenParams, n: int, m: float = 1.0) -> SWaveExact:
    """Exact l = 0 energy

        E = [ -a*b*m + lam*a*kappa^2/2
              + Ntilde*kappa*sqrt(m^2 + lam*m*b - lam^2*kappa^2/4) ] / (Ntilde^2 + a^2).

    Raises AboveCritical when the radicand is negative (screening too strong
    for a real energy on this branch).
    """
    if n < 0:
        raise DomainError("radial quantum number must be non-negative")
    a, b, lam = params.a, params.b, params.lam
    cap_n_tilde, kappa = _swave_numbers(a, b, n)
    radicand = m * m + lam * m * b - lam * lam * kappa * kappa / 4
    if float(radicand) < 0:
        raise AboveCritical(
            f"m^2 + lam*m*b - lam^2*kappa^2/4 = {float(radicand):.6g} < 0 "
            f"(lam = {float(lam):.6g} exceeds the critical screening)"
        )
    energy = (
        -a * b * m + lam * a * kappa * kappa / 2 + cap_n_tilde * kappa * radicand**0.5
    ) / (cap_n_tilde * cap_n_tilde + a * a)
    return SWaveExact(energy=energy, kappa=kappa, cap_n_tilde=cap_n_tilde)


def exact_swave_expansion(params: HulthenParams, n: int, m: float = 1.0) -> tuple:
    """Screening expansion E_0..E_5 of the exact s-wave energy."""
    if n < 0:
        raise DomainError("radial quantum number must be non-negative")
    a, b, lam = params.a, params.b, params.lam
    nt, kap = _swave_numbers(a, b, n)
    den = nt * nt + a * a
    e0 = m * (-a * b + nt * kap) / den
    e1 = lam / 2 * kap * (kap * a + nt * b) / den
    e2 = -(lam * lam) / (8 * m) * nt * kap * (kap * kap + b * b) / den
    e3 = -lam * b / (2 * m) * e2
    e4 = lam * lam * (kap * kap + 5 * b * b) / (16 * m * m) * e2
    e5 = -(lam**3) * b * (3 * kap * kap + 7 * b * b) / (32 * m**3) * e2
    return (e0, e1, e2, e3, e4, e5)


def critical_lambda(a: float, b: float, n: int, m: float = 1.0) -> float:
    """Critical screening  lam_cr = 2m / (sqrt(Ntilde^2 + a^2) - b).

    Below this value the exact s-wave energy is real; it is a necessary,
    not sufficient, condition for a bound state (the level can cross into
    the continuum at weaker screening).
    """
    if n < 0:
        raise DomainError("radial quantum number must be non-negative")
    cap_n_tilde, _ = _swave_numbers(a, b, n)
    denom = (cap_n_tilde * cap_n_tilde + a * a) ** 0.5 - b
    if not float(denom) > 0:
        raise NoCritical(f"sqrt(Ntilde^2 + a^2) - b = {float(denom):.6g} <= 0")
    return 2 * m / denom


def coulomb_d_coefficients(n: int, gamma: float, max_order: int) -> CoulombLaurent:
    """Laurent coefficients of the pure-Coulomb log-derivative in rho = 2*mu*r.

    d_0 = -1/2, d_1 = n + 1/2 + gamma, d_2 = n(n + 2*gamma), and

        d_k = (1-k) d_{k-1} + sum_{j=1}^{k-1} d_j d_{k-j}      (k > 2).
    """
    if max_order < 0:
        raise DomainError("max_order must be non-negative")
    if not float(gamma) > 0:
        raise DomainError("gamma must be positive")
    d = [0 * gamma - 0.5, n + 0.5 + gamma, n * (n + 2 * gamma)]
    for k in range(3, max_order + 1):
        d.append((1 - k) * d[k - 1] + sum(d[j] * d[k - j] for j in range(1, k)))
    return CoulombLaurent(d=tuple(d[: max_order + 1]), gamma=gamma, n=n)


def coulomb_polynomial_check(n: int, gamma: float) -> list:
    """Consecutive coefficient ratios of the Coulomb polynomial factor.

    The degree-n polynomial P_n(rho) = sum a_k rho^k multiplying the
    exponential-and-power prefactor satisfies the triangular system

        a_k (n - k) + sum_{j=k+1}^{n} a_j d_{j-k+1} = 0,

    solved top-down from a_n = 1.  Returns [a_0/a_1, ..., a_{n-1}/a_n];
    these obey the associated-Laguerre pattern  a_{m-1}/a_m =
    m (m + 2*gamma) / (m - n - 1), which identifies P_n with L_n^(2*gamma).
    """
    if n < 0:
        raise DomainError("polynomial degree must be non-negative")
    if n == 0:
        return []
    d = coulomb_d_coefficients(n, gamma, n + 1).d
    coeffs = [None] * (n + 1)
    coeffs[n] = 0 * gamma + 1
    for k in range(n - 1, -1, -1):
        pivot = n - k
        if pivot == 0:
            raise SingularSystem(f"zero pivot at row k = {k}")
        acc = 0 * gamma
        for j in range(k + 1, n + 1):
            acc = acc + coeffs[j] * d[j - k + 1]
        coeffs[k] = -acc / pivot
    return [coeffs[m - 1] / coeffs[m] for m in range(1, n + 1)]
