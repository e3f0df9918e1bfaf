import pytest


@pytest.fixture(scope="session")
def warm_solver():
    """Compile the Numerov kernels once so timed tests measure the solver."""
    from kgpert import HulthenParams, QuantumState, hulthen_closed_form
    from kgpert.numerov import shoot

    pot = hulthen_closed_form(HulthenParams(1.0, 1.0, 0.05))
    shoot(pot, QuantumState(n=1, l=1, m=1.0), 0.84)
    return True
