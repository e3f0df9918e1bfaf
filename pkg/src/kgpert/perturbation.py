"""Energy corrections for the radial Klein-Gordon equation, to arbitrary order.

The bound-state problem

    R'' = { (m + W(r))^2 - (E - V(r))^2 + l(l+1)/r^2 } R

with screened Coulomb potentials is treated through the logarithmic
derivative C(r) = R'(r)/R(r), whose order-k piece C_k(r) has a pole of
order k at the origin and is expanded as the Laurent series

    C_k(r) = r^(-k) * sum_i C_i^k r^i          (k >= 1),
    C_0(r) = -sqrt(m^2 - E_0^2)                (a constant, kept as c00).

Matching powers of r in the Riccati form of the wave equation yields one
linear relation per table entry: with the conventions C_i^0 = 0 for i > 0
and the index guards below,

    C_i^k = -(1/(2*c00)) * [ (i-k+1) C_i^(k-1)
                             + sum_{j=1}^{k-1} sum_{p=0}^{i} C_p^j C_{i-p}^{k-j}
                             + delta_{k,i} sum_{j=0}^{k} E_j E_{k-j}
                             - 2 E_{k-1} V_{i-k+1}
                             + delta_{k,2} sum_p (V_p V_{i-p} - W_p W_{i-p})
                             - delta_{i,0} delta_{k,2} l(l+1)
                             - delta_{k,1} 2 m W_i ].

Counting nodes plus the origin exponent with the residue theorem pins the
residue of every order:  C_k^(k+1) = N * delta_{0,k}  where
N = n + 1/2 + sqrt(W_0^2 - V_0^2 + (l+1/2)^2).  For each k >= 1 this
quantization together with the diagonal relation (i = k above) forms a pair
of equations linear in the unknowns (E_k, C_k^k), which is solved exactly;
no separately transcribed energy formula is involved, so the table relation
is the single source of truth.

Everything here is scalar-generic: series coefficients and the mass may be
floats or any real scalar type with Python arithmetic (``mpmath.mpf`` gives
a drop-in higher-precision build).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    DivergentTable,
    DomainError,
    MissingDependency,
    NegativeDiscriminant,
    NoBoundState,
    NoCoulombSingularity,
)
from .potentials import CouplingSeries

__all__ = [
    "QuantumState",
    "EffectiveNumbers",
    "LaurentTable",
    "EnergyExpansion",
    "effective_numbers",
    "leading_energy",
    "laurent_coefficient",
    "energy_corrections",
    "quantization_residues",
]


@dataclass(frozen=True)
class QuantumState:
    """Radial quantum number n (node count), orbital number l, rest mass m."""

    n: int
    l: int
    m: float = 1.0

    def __post_init__(self):
        if self.n < 0 or self.l < 0:
            raise DomainError("quantum numbers must be non-negative")
        if not float(self.m) > 0:
            raise DomainError("mass must be positive")


@dataclass(frozen=True)
class EffectiveNumbers:
    """gamma = sqrt(W0^2 - V0^2 + (l+1/2)^2), N = n + 1/2 + gamma, mu^2 = m^2 - E0^2.

    ``mu_sq`` is filled in a second phase once the leading energy is known.
    """

    gamma: float
    cap_n: float
    mu_sq: Optional[float] = None

    def with_mu(self, mu_sq) -> "EffectiveNumbers":
        if not float(mu_sq) > 0:
            raise NoBoundState(f"mu^2 = {mu_sq} must be positive for a bound state")
        return EffectiveNumbers(self.gamma, self.cap_n, mu_sq)


class LaurentTable:
    """Triangular table of log-derivative Laurent coefficients C_i^k.

    Column k collects the coefficients of C_k(r); row index i is the power
    offset, so the residue of C_k(r) sits at i = k-1.  ``c00`` stores the
    constant order-zero log-derivative (negative for a bound state).
    """

    def __init__(self, c00, kmax: int, width: int):
        self.c00 = c00
        self.kmax = kmax
        self.width = width
        self._entries = {}

    def has(self, k: int, i: int) -> bool:
        return (k, i) in self._entries

    def get(self, k: int, i: int):
        """Entry C_i^k; zero for negative indices, c00-convention for k = 0."""
        if k < 0 or i < 0:
            return 0 * self.c00
        if k == 0:
            return self.c00 if i == 0 else 0 * self.c00
        try:
            return self._entries[(k, i)]
        except KeyError:
            raise MissingDependency(
                f"Laurent coefficient C_{i}^{k} has not been computed yet"
            ) from None

    def set(self, k: int, i: int, value):
        if not math.isfinite(float(value)):
            raise DivergentTable(f"Laurent coefficient C_{i}^{k} is non-finite")
        self._entries[(k, i)] = value


@dataclass(frozen=True)
class EnergyExpansion:
    """Corrections E_0..E_K; the physical energy is their plain sum."""

    corrections: tuple
    state: QuantumState
    series: CouplingSeries
    max_order: int
    effective: EffectiveNumbers
    table: LaurentTable = field(repr=False)

    def __post_init__(self):
        for e in self.corrections:
            if not math.isfinite(float(e)):
                raise DivergentTable("energy correction is non-finite")


def effective_numbers(state: QuantumState, series: CouplingSeries) -> EffectiveNumbers:
    """gamma and N for the given state and coupling strengths.

    Raises NegativeDiscriminant when W0^2 - V0^2 + (l+1/2)^2 < 0, i.e. when
    the vector coupling is too strong for a regular origin behaviour.
    """
    v0, w0 = series.v[0], series.w[0]
    disc = w0 * w0 - v0 * v0 + (state.l + 0.5) ** 2
    if float(disc) < 0:
        raise NegativeDiscriminant(
            f"W0^2 - V0^2 + (l+1/2)^2 = {float(disc):.6g} < 0: "
            "no regular bound state for these couplings"
        )
    gamma = disc**0.5
    return EffectiveNumbers(gamma=gamma, cap_n=state.n + 0.5 + gamma)


def leading_energy(state: QuantumState, series: CouplingSeries) -> float:
    """Leading bound-state energy

        E_0 = m/(N^2 + V0^2) * ( N*sqrt(N^2 + V0^2 - W0^2) - V0*W0 ),

    on the branch entering the gap from the upper continuum.
    """
    v0, w0 = series.v[0], series.w[0]
    cap_n = effective_numbers(state, series).cap_n
    m = state.m
    radicand = cap_n * cap_n + v0 * v0 - w0 * w0
    if float(radicand) < 0:
        raise NoBoundState(
            f"N^2 + V0^2 - W0^2 = {float(radicand):.6g} < 0: leading energy undefined"
        )
    e0 = m * (cap_n * radicand**0.5 - v0 * w0) / (cap_n * cap_n + v0 * v0)
    if abs(float(e0)) > float(m):
        raise NoBoundState(f"|E_0| = {float(e0):.6g} exceeds the rest mass")
    return e0


def _energy(energies, j: int):
    if j < 0 or j >= len(energies) or energies[j] is None:
        raise MissingDependency(f"energy correction E_{j} is not available yet")
    return energies[j]


def _recursion_rhs(k: int, i: int, table: LaurentTable, series: CouplingSeries,
                   state: QuantumState, energies) -> float:
    """Bracket of the Laurent recursion for slot (k, i).

    Requires E_0..E_{k-1}; the diagonal slot i = k additionally couples to
    E_k.  Coefficients with negative indices contribute zero.
    """
    v, w = series.v, series.w
    total = 0 * table.c00
    step = i - k + 1
    if step != 0:
        total = total + step * table.get(k - 1, i)
    for j in range(1, k):
        for p in range(i + 1):
            total = total + table.get(j, p) * table.get(k - j, i - p)
    if i == k:
        for j in range(k + 1):
            total = total + _energy(energies, j) * _energy(energies, k - j)
    if 0 <= step <= series.order:
        total = total - 2 * _energy(energies, k - 1) * v[step]
    if k == 2:
        for p in range(i + 1):
            if p <= series.order and i - p <= series.order:
                total = total + v[p] * v[i - p] - w[p] * w[i - p]
        if i == 0:
            total = total - state.l * (state.l + 1)
    if k == 1 and i <= series.order:
        total = total - 2 * state.m * w[i]
    return total


def laurent_coefficient(k: int, i: int, *, table: LaurentTable, series: CouplingSeries,
                        state: QuantumState, energies) -> float:
    """Evaluate C_i^k from already-known table entries and energies.

    The diagonal i = k is reserved for the quantization step and rejected
    here; prerequisites that are absent raise MissingDependency.
    """
    if k < 1:
        raise DomainError("Laurent columns start at k = 1")
    if i == k:
        raise DomainError(
            "the diagonal slot i = k is fixed by the quantization condition, "
            "not by the plain recursion"
        )
    return -_recursion_rhs(k, i, table, series, state, energies) / (2 * table.c00)


def _solve_order(k: int, table: LaurentTable, series: CouplingSeries,
                 state: QuantumState, energies) -> float:
    """E_k from the residue constraint C_k^(k+1) = 0 (k >= 1).

    Both the diagonal entry C_k^k and the residue expression are affine in
    the unknown E_k, so two trial evaluations solve the constraint exactly.
    """
    c00 = table.c00
    zero = 0 * c00

    def residue(trial):
        energies[k] = trial
        table.set(k, k, -_recursion_rhs(k, k, table, series, state, energies) / (2 * c00))
        return -_recursion_rhs(k + 1, k, table, series, state, energies) / (2 * c00)

    f0 = residue(zero)
    f1 = residue(zero + 1)
    slope = f1 - f0
    if float(slope) == 0.0 or not math.isfinite(float(slope)):
        raise DivergentTable(f"energy recursion is singular at order {k}")
    energies[k] = None
    return -f0 / slope


def energy_corrections(state: QuantumState, series: CouplingSeries,
                       max_order: int) -> EnergyExpansion:
    """Energy corrections E_0..E_K for a screened Coulomb coupling series.

    The table is filled column by column; within column k the off-diagonal
    entries come first, then E_k is extracted from the quantization residue
    and the diagonal entry is completed.  Deterministic for fixed inputs.
    """
    K = max_order
    if K < 0:
        raise DomainError("max_order must be non-negative")
    if series.order < K + 1:
        raise DomainError(
            f"series order {series.order} is too short for {K} corrections; "
            f"need at least {K + 1}"
        )
    if float(series.v[0]) == 0.0 and float(series.w[0]) == 0.0:
        raise NoCoulombSingularity(
            "V0 = W0 = 0: the expansion requires a Coulomb-like origin"
        )

    eff = effective_numbers(state, series)
    e0 = leading_energy(state, series)
    mu_sq = state.m * state.m - e0 * e0
    if not float(mu_sq) > 0:
        raise NoBoundState(f"mu^2 = {float(mu_sq):.6g} <= 0: state at the continuum edge")
    eff = eff.with_mu(mu_sq)

    width = K + 1
    table = LaurentTable(c00=-(mu_sq**0.5), kmax=K + 1, width=width)
    energies = [e0] + [None] * K

    for k in range(1, K + 2):
        for i in range(min(k, width + 1)):
            table.set(k, i, -_recursion_rhs(k, i, table, series, state, energies)
                      / (2 * table.c00))
        if k <= K:
            e_k = _solve_order(k, table, series, state, energies)
            energies[k] = e_k
            table.set(k, k, -_recursion_rhs(k, k, table, series, state, energies)
                      / (2 * table.c00))
        for i in range(k + 1, width + 1):
            table.set(k, i, -_recursion_rhs(k, i, table, series, state, energies)
                      / (2 * table.c00))

    return EnergyExpansion(
        corrections=tuple(energies),
        state=state,
        series=series,
        max_order=K,
        effective=eff,
        table=table,
    )


def quantization_residues(expansion: EnergyExpansion) -> list:
    """Re-evaluate the residue slots C_k^(k+1) from the finished table.

    Index 0 must return N and every higher index must vanish; this is the
    defining consistency check of the table construction.
    """
    table = expansion.table
    series = expansion.series
    state = expansion.state
    energies = list(expansion.corrections)
    return [
        -_recursion_rhs(k + 1, k, table, series, state, energies) / (2 * table.c00)
        for k in range(expansion.max_order + 1)
    ]
