"""Partial sums, percentage errors and stabilization of oscillating series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError
from .perturbation import EnergyExpansion

__all__ = [
    "PartialSumSequence",
    "StabilizedEstimate",
    "partial_sums",
    "percent_error",
    "stabilized_estimate",
]


@dataclass(frozen=True)
class PartialSumSequence:
    """Cumulative sums S_k = E_0 + ... + E_k of an energy expansion."""

    sums: tuple
    source: Optional[EnergyExpansion] = None

    @classmethod
    def from_corrections(cls, corrections: Sequence,
                         source: Optional[EnergyExpansion] = None) -> "PartialSumSequence":
        if not corrections:
            raise DomainError("corrections must be non-empty")
        out = []
        total = 0 * corrections[0]
        for e in corrections:
            total = total + e
            out.append(total)
        return cls(sums=tuple(out), source=source)


@dataclass(frozen=True)
class StabilizedEstimate:
    value: float
    index: int  # k* of the tightest pair (S_k*, S_k*+1)


def partial_sums(expansion: EnergyExpansion) -> PartialSumSequence:
    """Partial sums of an energy expansion, lowest order first."""
    return PartialSumSequence.from_corrections(expansion.corrections, source=expansion)


def percent_error(e_pert: float, e_ref: float) -> float:
    """100 * |e_pert - e_ref| / |e_ref|; rejects a zero reference."""
    if float(e_ref) == 0.0:
        raise DomainError("reference energy must be non-zero")
    return 100 * abs(e_pert - e_ref) / abs(e_ref)


def stabilized_estimate(seq: PartialSumSequence,
                        mode: str = "consecutive") -> StabilizedEstimate:
    """Average the two partial sums at their point of closest approach.

    For series whose tails oscillate around the limit, successive sums
    bracket it from both sides and their midpoint at the smallest gap is a
    better estimate than either.  ``mode="consecutive"`` scans every pair
    (S_k, S_{k+1}) for 1 <= k < K; ``mode="evenodd"`` restricts the scan to
    even k >= 2, pairing the below/above subsequences at matched positions.
    """
    sums = seq.sums
    if len(sums) < 3:
        raise DomainError("need at least three partial sums (K >= 2)")
    if mode == "consecutive":
        candidates = range(1, len(sums) - 1)
    elif mode == "evenodd":
        candidates = range(2, len(sums) - 1, 2)
    else:
        raise DomainError(f"unknown mode {mode!r}")
    best_k = None
    best_gap = None
    for k in candidates:
        gap = abs(sums[k + 1] - sums[k])
        if best_gap is None or gap < best_gap:
            best_gap = gap
            best_k = k
    return StabilizedEstimate(value=(sums[best_k] + sums[best_k + 1]) / 2, index=best_k)
