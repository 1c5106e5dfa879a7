import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sincquad.exceptions import DomainError
from sincquad.oracles import e1_increment, oracle_e1, upper_gamma0
from sincquad.special import arcsinh, si

SI_MAX = 1.8519370519824662  # Si(pi)


def mp_si(x):
    return float(mpmath.si(mpmath.mpf(x)))


class TestSi:
    def test_zero(self):
        assert si(0.0) == 0.0

    def test_odd_at_2_5(self):
        assert si(-2.5) == -si(2.5)

    def test_value_at_one(self):
        # independent series value
        assert si(1.0) == pytest.approx(0.9460830703671830, abs=1e-16)

    def test_limits(self):
        assert si(math.inf) == math.pi / 2
        assert si(-math.inf) == -math.pi / 2

    def test_nan_propagates(self):
        assert math.isnan(si(math.nan))

    def test_vectorised_matches_scalar(self):
        xs = np.linspace(-60, 60, 301)
        vec = si(xs)
        assert vec.shape == xs.shape
        assert all(vec[i] == si(float(xs[i])) for i in range(0, 301, 17))

    @pytest.mark.parametrize("x", [3.999999, 4.0, 4.000001])
    def test_regime_switch_is_continuous(self, x):
        assert abs(si(x) - mp_si(x)) < 1e-15

    def test_against_mpmath_dense(self):
        xs = np.concatenate([np.linspace(-50, 50, 2001), np.geomspace(50, 1e8, 200)])
        ours = si(xs)
        ref = np.array([mp_si(x) for x in xs])
        assert np.max(np.abs(ours - ref)) < 1e-15

    @given(st.floats(-1e6, 1e6, allow_nan=False))
    def test_odd(self, x):
        assert abs(si(x) + si(-x)) <= 1e-15

    @given(st.floats(-1e12, 1e12, allow_nan=False))
    def test_bounded(self, x):
        assert abs(si(x)) <= SI_MAX + 1e-15


class TestArcsinh:
    def test_values(self):
        assert arcsinh(0.0) == 0.0
        assert arcsinh(1.0) == pytest.approx(0.8813735870195430, rel=1e-16)

    def test_symmetry_large(self):
        assert arcsinh(-1e8) == -arcsinh(1e8)
        assert arcsinh(1e8) == pytest.approx(float(mpmath.asinh(1e8)), rel=1e-15)

    @pytest.mark.parametrize("x", [1e-300, 1e-20, 1e-9, 0.3, 1.5, 3.0, 1e5, 1e20, 1e300])
    def test_against_mpmath(self, x):
        ref = float(mpmath.asinh(x))
        assert arcsinh(x) == pytest.approx(ref, rel=4e-16)
        assert arcsinh(-x) == pytest.approx(-ref, rel=4e-16)

    @given(st.floats(-30, 30))
    def test_inverts_sinh(self, t):
        assert abs(arcsinh(math.sinh(t)) - t) <= 1e-12 * max(1.0, abs(t))

    def test_array_input(self):
        out = arcsinh(np.array([-2.0, 0.0, 2.0]))
        assert out.shape == (3,)
        assert out[0] == -out[2]


class TestOracleE1:
    def test_value_at_one(self):
        assert oracle_e1(1.0) == pytest.approx(0.21938393439552029, abs=1e-15)

    def test_limit_at_infinity(self):
        assert oracle_e1(math.inf) == 0.0

    @pytest.mark.parametrize("x", [0.0, -1.0, math.nan])
    def test_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            oracle_e1(x)

    def test_upper_gamma_alias(self):
        assert upper_gamma0(2.5) == oracle_e1(2.5)

    @pytest.mark.parametrize("x", [1e-8, 0.01, 0.5, 1.0, 1.0000001, 2.0, 10.0, 100.0, 700.0])
    def test_against_mpmath(self, x):
        assert oracle_e1(x) == pytest.approx(float(mpmath.e1(x)), rel=1e-14)

    @given(st.floats(1e-6, 600))
    def test_sandwich(self, x):
        v = oracle_e1(x)
        assert math.exp(-x) / (x + 1) <= v * (1 + 1e-14)
        assert v <= math.exp(-x) / x * (1 + 1e-14)

    @pytest.mark.parametrize("dx", [1e-30, 1e-12, 1e-4, 0.3, 1.0, 5.0])
    def test_increment(self, dx):
        ref = mpmath.e1(1) - mpmath.e1(1 + mpmath.mpf(dx))
        assert e1_increment(1.0, dx) == pytest.approx(float(ref), rel=1e-14)

    def test_increment_zero(self):
        assert e1_increment(1.0, 0.0) == 0.0
