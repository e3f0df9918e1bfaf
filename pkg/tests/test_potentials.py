import math

import mpmath as mp
import numpy as np
import pytest

from kgpert import (
    CouplingSeries,
    DomainError,
    HulthenParams,
    coulomb_series,
    hulthen_closed_form,
    hulthen_series,
    required_series_order,
)


def bernoulli_coefficients(a, lam, order):
    """Independent oracle: V_i = -a * B_i * lam^i / i! from the generating
    function lam*r/(e^(lam*r)-1) = sum B_i (lam*r)^i / i!."""
    mp.mp.dps = 40
    return [float(-a * mp.bernoulli(i) * mp.mpf(lam) ** i / mp.factorial(i))
            for i in range(order + 1)]


class TestHulthenSeries:
    def test_leading_coefficients_are_couplings(self):
        series = hulthen_series(HulthenParams(a=1.0, b=1.0, lam=0.3), 4)
        assert series.v[0] == -1.0
        assert series.w[0] == -1.0

    def test_first_coefficient_against_taylor_oracle(self):
        # frozen from the Bernoulli oracle: V_1 = a*lam/2
        series = hulthen_series(HulthenParams(a=1.0, b=0.0, lam=0.1), 1)
        assert series.v[1] == pytest.approx(0.05, abs=1e-15)
        assert series.w[1] == 0.0

    def test_second_coefficient_against_taylor_oracle(self):
        # frozen from the Bernoulli oracle: V_2 = -a*lam^2/12 = -1/1200
        series = hulthen_series(HulthenParams(a=1.0, b=0.0, lam=0.1), 2)
        assert series.v[2] == pytest.approx(-1.0 / 1200.0, rel=1e-13)

    @pytest.mark.parametrize("lam", [0.05, 0.1, 0.8])
    def test_recursion_matches_bernoulli_oracle(self, lam):
        series = hulthen_series(HulthenParams(a=1.3, b=0.0, lam=lam), 12)
        oracle = bernoulli_coefficients(1.3, lam, 12)
        for got, want in zip(series.v, oracle):
            # odd coefficients beyond the first are exact zeros in the oracle;
            # the recursion reaches them through cancellation at ~1e-17
            assert got == pytest.approx(want, rel=1e-12, abs=1e-16)

    def test_truncated_series_converges_to_closed_form(self):
        lam = 0.05
        params = HulthenParams(a=1.0, b=0.5, lam=lam)
        series = hulthen_series(params, 20)
        closed = hulthen_closed_form(params)
        r = 0.1 / lam
        v_series = sum(c * r**i for i, c in enumerate(series.v)) / r
        w_series = sum(c * r**i for i, c in enumerate(series.w)) / r
        assert abs(v_series - closed.v_at(r)) < 1e-10
        assert abs(w_series - closed.w_at(r)) < 1e-10

    def test_single_coupling_zeroes_other_list(self):
        only_v = hulthen_series(HulthenParams(a=1.0, b=0.0, lam=0.1), 6)
        assert all(c == 0.0 for c in only_v.w)
        only_w = hulthen_series(HulthenParams(a=0.0, b=1.0, lam=0.1), 6)
        assert all(c == 0.0 for c in only_w.v)

    def test_linear_in_couplings(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a, b = rng.uniform(0.1, 1.5, size=2)
            lam = rng.uniform(0.01, 0.5)
            base = hulthen_series(HulthenParams(a, b, lam), 8)
            doubled = hulthen_series(HulthenParams(2 * a, 2 * b, lam), 8)
            for c2, c1 in zip(doubled.v + doubled.w, base.v + base.w):
                assert c2 == pytest.approx(2 * c1, rel=1e-14, abs=1e-300)

    def test_rejects_nonpositive_screening(self):
        with pytest.raises(DomainError):
            HulthenParams(a=1.0, b=1.0, lam=0.0)
        with pytest.raises(DomainError):
            HulthenParams(a=1.0, b=1.0, lam=-0.1)

    def test_rejects_negative_order(self):
        with pytest.raises(DomainError):
            hulthen_series(HulthenParams(1.0, 1.0, 0.1), -1)


class TestCoulombSeries:
    def test_pure_vector(self):
        series = coulomb_series(-1.0, 0.0, 5)
        assert series.v == (-1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        assert all(c == 0.0 for c in series.w)

    def test_all_zero(self):
        series = coulomb_series(0.0, 0.0, 3)
        assert all(c == 0.0 for c in series.v + series.w)

    def test_order_zero(self):
        series = coulomb_series(-0.5, -0.5, 0)
        assert series.order == 0
        assert series.v == (-0.5,)
        assert series.w == (-0.5,)


class TestClosedForm:
    def test_value_at_unit_radius(self):
        # frozen from 40-digit evaluation of -0.05/(e^0.05 - 1)
        pot = hulthen_closed_form(HulthenParams(a=1.0, b=0.0, lam=0.05))
        assert pot.v_at(1.0) == pytest.approx(-0.97520832465329444, rel=1e-14)
        assert pot.w_at(1.0) == 0.0

    def test_coulomb_limit_at_origin(self):
        pot = hulthen_closed_form(HulthenParams(a=1.0, b=1.0, lam=0.3))
        for r in (1e-3, 1e-6, 1e-9):
            assert r * pot.v_at(r) == pytest.approx(-1.0, abs=2e-3 * r / 1e-3 + 1e-9)
        assert pot.v0 == -1.0 and pot.w0 == -1.0

    def test_series_switchover_is_smooth(self):
        # compare r*V(r) across the switchover (the bare potential itself
        # varies as 1/r there); the profile changes only at O(lam*dr)
        lam = 1.0
        pot = hulthen_closed_form(HulthenParams(a=1.0, b=0.0, lam=lam))
        below, above = 0.9999e-4 / lam, 1.0001e-4 / lam
        assert below * pot.v_at(below) == pytest.approx(
            above * pot.v_at(above), rel=1e-7
        )

    def test_zero_coupling_evaluates_to_zero(self):
        pot = hulthen_closed_form(HulthenParams(a=0.0, b=1.0, lam=0.05))
        assert pot.v_at(3.7) == 0.0
        assert pot.w_at(3.7) != 0.0

    def test_rejects_nonpositive_radius(self):
        pot = hulthen_closed_form(HulthenParams(a=1.0, b=0.0, lam=0.05))
        with pytest.raises(DomainError):
            pot.v_at(0.0)
        with pytest.raises(DomainError):
            pot.v_at(np.array([1.0, -2.0]))

    def test_vectorized_evaluation(self):
        pot = hulthen_closed_form(HulthenParams(a=1.0, b=0.0, lam=0.05))
        r = np.array([0.5, 1.0, 2.0])
        vals = pot.v_at(r)
        assert vals.shape == (3,)
        assert vals[1] == pytest.approx(pot.v_at(1.0))


class TestCouplingSeries:
    def test_mismatched_lengths_rejected(self):
        with pytest.raises(DomainError):
            CouplingSeries((1.0, 2.0), (1.0,))

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            CouplingSeries((1.0, math.inf), (0.0, 0.0))

    def test_required_order_contract(self):
        assert required_series_order(0) == 1
        assert required_series_order(10) == 11
        with pytest.raises(DomainError):
            required_series_order(-1)
