import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sincquad.exceptions import DomainError, UnsupportedTransformError
from sincquad.transforms import IntervalCase, TransformId, case_of, psi, psi_inverse, psi_prime, x_gamma

ALL = list(TransformId)
INVERTIBLE = [t for t in ALL if t is not TransformId.DE3_DAGGER]

# high-precision reference maps
MP_PSI = {
    TransformId.SE1: mpmath.sinh,
    TransformId.SE2: mpmath.exp,
    TransformId.SE3: lambda t: mpmath.asinh(mpmath.exp(t)),
    TransformId.DE1: lambda t: mpmath.sinh(mpmath.pi / 2 * mpmath.sinh(t)),
    TransformId.DE2: lambda t: mpmath.exp(mpmath.pi / 2 * mpmath.sinh(t)),
    TransformId.DE3_DAGGER: lambda t: mpmath.exp(t - mpmath.exp(-t)),
    TransformId.DE3_DDAGGER: lambda t: mpmath.log1p(mpmath.exp(mpmath.pi * mpmath.sinh(t))),
}


class TestCases:
    def test_case_mapping(self):
        assert {t for t in ALL if case_of(t) is IntervalCase.CASE1} == {TransformId.SE1, TransformId.DE1}
        assert {t for t in ALL if case_of(t) is IntervalCase.CASE2} == {TransformId.SE2, TransformId.DE2}
        assert {t for t in ALL if case_of(t) is IntervalCase.CASE3} == {
            TransformId.SE3,
            TransformId.DE3_DAGGER,
            TransformId.DE3_DDAGGER,
        }

    def test_lower_endpoint(self):
        assert IntervalCase.CASE1.lower == -math.inf
        assert IntervalCase.CASE3.lower == 0.0

    def test_string_ids_accepted(self):
        assert psi("se1", 0.0) == 0.0


class TestPsi:
    def test_simple_values(self):
        assert psi(TransformId.SE1, 0.0) == 0.0
        assert psi(TransformId.DE3_DDAGGER, 0.0) == pytest.approx(math.log(2.0), rel=1e-16)

    def test_de1_at_one(self):
        # direct high-precision composition sinh((pi/2) sinh 1)
        assert psi(TransformId.DE1, 1.0) == pytest.approx(3.0882874179763229, rel=1e-15)

    @pytest.mark.parametrize("tid", ALL)
    @mpmath.workdps(40)
    def test_against_mpmath(self, tid):
        for t in np.linspace(-4, 4, 41):
            ref = MP_PSI[tid](mpmath.mpf(t))
            # exp(pi sinh t) has condition number ~|pi t cosh t| (up to ~90 here)
            assert psi(tid, t) == pytest.approx(float(ref), rel=1e-13, abs=1e-300)

    @pytest.mark.parametrize("tid", [t for t in ALL if case_of(t) is not IntervalCase.CASE1])
    def test_half_line_positive(self, tid):
        t = np.linspace(-3, 3, 101)
        assert np.all(psi(tid, t) > 0)

    @pytest.mark.parametrize("tid", ALL)
    def test_monotone_on_wide_grid(self, tid):
        t = np.linspace(-20, 20, 1000)
        with np.errstate(over="ignore"):
            v = psi(tid, t)
        assert not np.isnan(v).any()
        assert np.all(v[1:] >= v[:-1])
        # strict wherever the map has not saturated to 0 or +-inf in double
        live = np.isfinite(v) & (v != 0)
        both = live[:-1] & live[1:]
        assert np.all(v[1:][both] > v[:-1][both])

    def test_large_arguments_do_not_warn(self):
        with np.errstate(all="raise"):
            assert psi(TransformId.SE3, 800.0) == pytest.approx(800.0 + math.log(2.0))
            assert psi(TransformId.DE3_DDAGGER, 10.0) == pytest.approx(math.pi * math.sinh(10.0))


class TestPsiPrime:
    def test_simple_values(self):
        assert psi_prime(TransformId.SE2, 0.0) == 1.0
        assert psi_prime(TransformId.DE3_DDAGGER, 0.0) == pytest.approx(math.pi / 2, rel=1e-16)

    @pytest.mark.parametrize("tid", ALL)
    @mpmath.workdps(40)
    def test_against_mpmath_derivative(self, tid):
        for t in np.linspace(-5, 5, 21):
            ref = mpmath.diff(MP_PSI[tid], mpmath.mpf(t))
            assert psi_prime(tid, t) == pytest.approx(float(ref), rel=1e-13, abs=1e-300)

    @pytest.mark.parametrize("tid", ALL)
    def test_positive(self, tid):
        assert np.all(psi_prime(tid, np.linspace(-3, 3, 301)) > 0)

    def test_de1_finite_difference(self):
        h = 1e-6
        fd = (psi(TransformId.DE1, 0.5 + h) - psi(TransformId.DE1, 0.5 - h)) / (2 * h)
        assert psi_prime(TransformId.DE1, 0.5) == pytest.approx(fd, rel=1e-8)

    def test_tails_underflow_to_zero_not_nan(self):
        for tid in (TransformId.DE2, TransformId.DE3_DAGGER, TransformId.DE3_DDAGGER):
            with np.errstate(all="raise"):
                v = psi_prime(tid, -40.0)
            assert v == 0.0


class TestPsiInverse:
    def test_simple_values(self):
        assert psi_inverse(TransformId.SE1, 0.0) == 0.0
        assert psi_inverse(TransformId.DE3_DDAGGER, math.log(2.0)) == pytest.approx(0.0, abs=1e-16)

    def test_de2_at_five(self):
        # arcsinh((2/pi) log 5) at high precision
        assert psi_inverse(TransformId.DE2, 5.0) == pytest.approx(0.89866187640227338, rel=1e-15)

    def test_dagger_has_no_inverse(self):
        with pytest.raises(UnsupportedTransformError):
            psi_inverse(TransformId.DE3_DAGGER, 1.0)

    @pytest.mark.parametrize("tid", [TransformId.SE2, TransformId.SE3, TransformId.DE2])
    @pytest.mark.parametrize("x", [0.0, -1.0])
    def test_outside_half_line(self, tid, x):
        with pytest.raises(DomainError):
            psi_inverse(tid, x)

    def test_ddagger_tiny_argument_sentinel(self):
        assert psi_inverse(TransformId.DE3_DDAGGER, 0.0) == -math.inf
        assert psi_inverse(TransformId.DE3_DDAGGER, 1e-301) == -math.inf

    @pytest.mark.parametrize("tid", INVERTIBLE)
    def test_psi_of_inverse(self, tid):
        xs = [0.5, 1.0, 7.0, 1e3, 1e10] + ([-3.0, -1e5] if case_of(tid) is IntervalCase.CASE1 else [1e-5])
        for x in xs:
            assert psi(tid, psi_inverse(tid, x)) == pytest.approx(x, rel=1e-12)

    @pytest.mark.parametrize("tid", INVERTIBLE)
    @given(t=st.floats(-5, 5))
    def test_round_trip_property(self, tid, t):
        assert abs(psi_inverse(tid, psi(tid, t)) - t) <= 1e-11 * max(1.0, abs(t))

    def test_vectorised(self):
        x = np.array([0.1, 1.0, 10.0])
        out = psi_inverse(TransformId.SE2, x)
        np.testing.assert_allclose(out, np.log(x), rtol=1e-15)


class TestXGamma:
    def test_upper_branch(self):
        assert x_gamma(1.0) == pytest.approx(0.8813735870195430, rel=1e-16)
        assert x_gamma(1 / (2 * math.pi)) == pytest.approx(0.8813735870195430, rel=1e-15)

    def test_small_gamma(self):
        # arcsinh(sqrt(1 + sqrt(1 - (0.1 pi)^2)) / (0.1 pi)) at high precision
        assert x_gamma(0.05) == pytest.approx(2.1971792384777114, rel=1e-15)

    def test_continuous_at_switch(self):
        g = 1 / (2 * math.pi)
        assert abs(x_gamma(g * (1 - 1e-15)) - x_gamma(g)) < 1e-6
        # the lower branch tends to arcsinh(1) with a square-root singularity
        assert abs(x_gamma(g * (1 - 1e-26)) - x_gamma(g)) <= 1e-12

    @pytest.mark.parametrize("g", [0.0, -1.0, math.inf])
    def test_rejects(self, g):
        with pytest.raises(DomainError):
            x_gamma(g)

    @pytest.mark.parametrize("g", [1 / (2 * math.pi), 0.5, 1.0])
    def test_weight_non_increasing_beyond_threshold(self, g):
        x = np.linspace(x_gamma(g), x_gamma(g) + 8, 2000)
        w = np.cosh(x) * np.exp(-math.pi * g * np.sinh(x))
        assert np.all(np.diff(w) <= 1e-15 * w[:-1])

    @pytest.mark.parametrize("g", [0.01, 0.05, 0.1])
    def test_small_gamma_threshold_lies_before_turning_point(self, g):
        # the weight turns down at sinh x = (1 + sqrt(1 - c^2)) / c, c = 2 pi g;
        # the closed form used for x_gamma sits below that point
        c = 2 * math.pi * g
        turn = math.asinh((1 + math.sqrt(1 - c * c)) / c)
        assert x_gamma(g) < turn
        x = np.linspace(turn, turn + 8, 2000)
        w = np.cosh(x) * np.exp(-math.pi * g * np.sinh(x))
        assert np.all(np.diff(w) <= 1e-15 * w[:-1])
