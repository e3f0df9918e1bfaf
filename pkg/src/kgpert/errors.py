"""Exception hierarchy shared across the package.

Domain errors signal inputs outside the physical or mathematical domain
(CLI exit code 2).  Convergence errors signal numerical failure of an
otherwise well-posed computation (CLI exit code 3).
"""


class KgpertError(Exception):
    """Base class for package-specific failures."""


class DomainError(KgpertError, ValueError):
    """Parameters lie outside the supported domain."""


class NegativeDiscriminant(DomainError):
    """W0^2 - V0^2 + (l+1/2)^2 < 0: no regular bound-state wavefunction."""


class NoBoundState(DomainError):
    """Leading energy leaves no gap below the continuum (mu^2 <= 0)."""


class NoCoulombSingularity(DomainError):
    """V0 = W0 = 0: the log-derivative expansion needs a Coulomb-like origin."""


class AboveCritical(DomainError):
    """Screening too strong for a real s-wave energy."""


class NoCritical(DomainError):
    """Critical screening undefined (denominator <= 0)."""


class SingularSystem(DomainError):
    """Triangular polynomial system hit a zero pivot."""


class ConvergenceError(KgpertError, RuntimeError):
    """A numerical iteration failed to converge."""


class BracketFailure(ConvergenceError):
    """No eigenvalue with the requested node count inside the energy bracket."""


class GridUnderflow(ConvergenceError):
    """A Numerov sweep produced non-finite values (grid badly scaled)."""


class DivergentTable(ConvergenceError):
    """An intermediate of the energy recursion became non-finite or singular."""


class MissingDependency(KgpertError, RuntimeError):
    """Table entry requested before its prerequisites were computed."""
