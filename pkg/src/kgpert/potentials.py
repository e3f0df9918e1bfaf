"""Screened Coulomb potentials: truncated power series and closed forms.

Both the Lorentz-vector part V(r) and the Lorentz-scalar part W(r) are kept
in the 1/r-prefactored form

    V(r) = (1/r) * sum_i V_i r^i,        W(r) = (1/r) * sum_i W_i r^i,

which makes the Coulomb singularity at the origin explicit.  Natural units
hbar = c = 1 throughout; coefficients V_i, W_i carry energy * length^(i-1).

The perturbation engine consumes :class:`CouplingSeries`; the shooting-method
eigensolver consumes :class:`PotentialFunction` closed forms so that it is
never biased by series truncation.

Scalar coefficients are ordinarily floats, but any real scalar type with
Python arithmetic (for instance ``mpmath.mpf``) may be supplied; all series
construction is carried out with the caller's scalar type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = [
    "CouplingSeries",
    "HulthenParams",
    "PotentialFunction",
    "hulthen_series",
    "coulomb_series",
    "hulthen_closed_form",
    "coulomb_closed_form",
    "required_series_order",
]

# Default lambda*r below which the closed-form Hulthen evaluator switches to
# a short series for x/(e^x - 1); next omitted term is ~x^8/1209600.
SERIES_SWITCH = 1e-4


@dataclass(frozen=True)
class CouplingSeries:
    """Coefficients {V_i}, {W_i} of the 1/r-prefactored potential expansions."""

    v: tuple
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.v))
        object.__setattr__(self, "w", tuple(self.w))
        if len(self.v) != len(self.w):
            raise DomainError(
                "vector and scalar coefficient lists must have equal length "
                f"({len(self.v)} != {len(self.w)})"
            )
        if not self.v:
            raise DomainError("coefficient lists must not be empty")
        for c in (*self.v, *self.w):
            if not math.isfinite(float(c)):
                raise DomainError("all series coefficients must be finite")

    @property
    def order(self) -> int:
        """Highest retained power index I (lists hold I+1 entries)."""
        return len(self.v) - 1

    def scaled(self, factor) -> "CouplingSeries":
        """Series with every coefficient multiplied by ``factor``."""
        return CouplingSeries(
            tuple(factor * c for c in self.v), tuple(factor * c for c in self.w)
        )


@dataclass(frozen=True)
class HulthenParams:
    """Hulthen couplings: V(r) = -a*lam/(e^(lam*r)-1), W(r) = -b*lam/(e^(lam*r)-1)."""

    a: float
    b: float
    lam: float

    def __post_init__(self):
        if not float(self.lam) > 0:
            raise DomainError(f"screening parameter must be positive, got {self.lam}")
        if float(self.a) < 0 or float(self.b) < 0:
            raise DomainError("attractive convention requires a >= 0 and b >= 0")


@dataclass(frozen=True)
class PotentialFunction:
    """Closed-form potential pair for the numerical eigensolver.

    ``v_at``/``w_at`` evaluate V(r), W(r) for r > 0 (scalar or ndarray).
    ``v0``/``w0`` are the Coulomb strengths, i.e. the limits of r*V(r) and
    r*W(r) at the origin.  ``origin_v``/``origin_w`` hold the first few series
    coefficients used to start the outward integration; ``scale`` is the
    characteristic length of the potential (grid-sizing hint).
    """

    v_at: Callable
    w_at: Callable
    v0: float
    w0: float
    origin_v: tuple = field(default=())
    origin_w: tuple = field(default=())
    scale: float = 1.0

    def __post_init__(self):
        if not self.origin_v:
            object.__setattr__(self, "origin_v", (self.v0, 0.0, 0.0, 0.0))
        if not self.origin_w:
            object.__setattr__(self, "origin_w", (self.w0, 0.0, 0.0, 0.0))


def required_series_order(corrections: int) -> int:
    """Minimum CouplingSeries order needed for ``corrections`` energy orders.

    The recursion for E_K reads coefficients up to index K+1; shorter series
    are rejected by the perturbation engine.
    """
    if corrections < 0:
        raise DomainError("number of corrections must be non-negative")
    return corrections + 1


def hulthen_series(params: HulthenParams, order: int) -> CouplingSeries:
    """Power-series coefficients of the Hulthen pair up to ``order``.

    V_0 = -a and the higher coefficients follow the factorial recursion

        V_k = -sum_{j=0}^{k-1} V_j lam^(k-j) / (k+1-j)!        (k >= 1)

    (same form for W_k with W_0 = -b), equivalent to the Bernoulli-number
    expansion of lam*r / (e^(lam*r) - 1).
    """
    if order < 0:
        raise DomainError("series order must be non-negative")
    lam = params.lam
    v = [-params.a + 0 * lam]
    w = [-params.b + 0 * lam]
    for k in range(1, order + 1):
        v.append(-sum(v[j] * lam ** (k - j) / math.factorial(k + 1 - j) for j in range(k)))
        w.append(-sum(w[j] * lam ** (k - j) / math.factorial(k + 1 - j) for j in range(k)))
    return CouplingSeries(tuple(v), tuple(w))


def coulomb_series(v0: float, w0: float, order: int) -> CouplingSeries:
    """Pure Coulomb limit: only the 1/r strengths are non-zero."""
    if order < 0:
        raise DomainError("series order must be non-negative")
    zero = 0 * v0
    v = (v0,) + (zero,) * order
    w = (w0,) + (zero,) * order
    return CouplingSeries(v, w)


def _screening_profile(x, switch):
    """x / (e^x - 1), series-protected below the switchover value."""
    x = np.asarray(x, dtype=float)
    small = x < switch
    xs = np.where(small, 1.0, x)
    with np.errstate(over="ignore"):
        direct = xs / np.expm1(xs)
    series = 1.0 - x / 2.0 + x**2 / 12.0 - x**4 / 720.0 + x**6 / 30240.0
    return np.where(small, series, direct)


def hulthen_closed_form(params: HulthenParams,
                        series_switch: float = SERIES_SWITCH) -> PotentialFunction:
    """Closed-form Hulthen evaluators V(r) = -a*lam/(e^(lam*r)-1) and scalar twin.

    Below lam*r = ``series_switch`` the evaluation uses the short series of
    x/(e^x - 1) to avoid the cancellation in e^x - 1.
    """
    a = float(params.a)
    b = float(params.b)
    lam = float(params.lam)
    if not series_switch > 0:
        raise DomainError("series_switch must be positive")

    def make(strength):
        def evaluate(r):
            r_arr = np.asarray(r, dtype=float)
            if np.any(r_arr <= 0):
                raise DomainError("potential evaluation requires r > 0")
            out = -strength * _screening_profile(lam * r_arr, series_switch) / r_arr
            return out if out.ndim else float(out)

        return evaluate

    series = hulthen_series(HulthenParams(a, b, lam), 3)
    return PotentialFunction(
        v_at=make(a),
        w_at=make(b),
        v0=-a,
        w0=-b,
        origin_v=series.v,
        origin_w=series.w,
        scale=1.0 / lam,
    )


def coulomb_closed_form(v0: float, w0: float, scale: float = 1.0) -> PotentialFunction:
    """Unscreened Coulomb pair V(r) = v0/r, W(r) = w0/r (eigensolver checks)."""

    def make(strength):
        def evaluate(r):
            r_arr = np.asarray(r, dtype=float)
            if np.any(r_arr <= 0):
                raise DomainError("potential evaluation requires r > 0")
            out = strength / r_arr
            return out if out.ndim else float(out)

        return evaluate

    return PotentialFunction(
        v_at=make(float(v0)),
        w_at=make(float(w0)),
        v0=float(v0),
        w0=float(w0),
        scale=float(scale),
    )
