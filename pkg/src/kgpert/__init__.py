"""Relativistic bound states of screened Coulomb potentials.

Energy corrections for the radial Klein-Gordon equation with
Lorentz-vector plus Lorentz-scalar screened Coulomb couplings, computed to
arbitrary order through a logarithmic-derivative recursion, with analytic
closed forms and a Numerov shooting-method eigensolver as independent
cross-checks.  Natural units hbar = c = 1.
"""

from .errors import (
    AboveCritical,
    BracketFailure,
    ConvergenceError,
    DivergentTable,
    DomainError,
    GridUnderflow,
    KgpertError,
    MissingDependency,
    NegativeDiscriminant,
    NoBoundState,
    NoCoulombSingularity,
    NoCritical,
    SingularSystem,
)
from .potentials import (
    CouplingSeries,
    HulthenParams,
    PotentialFunction,
    coulomb_closed_form,
    coulomb_series,
    hulthen_closed_form,
    hulthen_series,
    required_series_order,
)
from .perturbation import (
    EffectiveNumbers,
    EnergyExpansion,
    LaurentTable,
    QuantumState,
    effective_numbers,
    energy_corrections,
    laurent_coefficient,
    leading_energy,
    quantization_residues,
)
from .closed_forms import (
    CoulombLaurent,
    SWaveExact,
    coulomb_d_coefficients,
    coulomb_polynomial_check,
    critical_lambda,
    exact_swave_energy,
    exact_swave_expansion,
    hulthen_closed_corrections,
)
from .summation import (
    PartialSumSequence,
    StabilizedEstimate,
    partial_sums,
    percent_error,
    stabilized_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "AboveCritical",
    "BracketFailure",
    "ConvergenceError",
    "CoulombLaurent",
    "CouplingSeries",
    "DivergentTable",
    "DomainError",
    "EffectiveNumbers",
    "EnergyExpansion",
    "GridUnderflow",
    "HulthenParams",
    "KgpertError",
    "LaurentTable",
    "MissingDependency",
    "NegativeDiscriminant",
    "NoBoundState",
    "NoCoulombSingularity",
    "NoCritical",
    "PartialSumSequence",
    "PotentialFunction",
    "QuantumState",
    "SWaveExact",
    "SingularSystem",
    "StabilizedEstimate",
    "coulomb_closed_form",
    "coulomb_d_coefficients",
    "coulomb_polynomial_check",
    "coulomb_series",
    "critical_lambda",
    "effective_numbers",
    "energy_corrections",
    "exact_swave_energy",
    "exact_swave_expansion",
    "hulthen_closed_corrections",
    "hulthen_closed_form",
    "hulthen_series",
    "laurent_coefficient",
    "leading_energy",
    "partial_sums",
    "percent_error",
    "quantization_residues",
    "required_series_order",
    "stabilized_estimate",
]
