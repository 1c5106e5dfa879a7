import math

import mpmath
import pytest

from sincquad.problems import PROBLEMS, get_problem
from sincquad.transforms import IntervalCase

MP_F = {
    1: lambda t: mpmath.sqrt(3) / (2 * mpmath.pi * (t * t + t + 1)),
    2: lambda t: 2 / (mpmath.pi * (1 + t * t)),
    3: lambda t: mpmath.exp(-(1 + t)) / (1 + t),
}


@pytest.mark.parametrize("ex", [1, 2, 3])
def test_exact_values(ex):
    lo = -mpmath.inf if ex == 1 else 0
    ref = mpmath.quad(MP_F[ex], [lo, 0, 1, mpmath.inf])
    assert get_problem(ex).exact == pytest.approx(float(ref), rel=1e-15)


@pytest.mark.parametrize("ex", [1, 2, 3])
@pytest.mark.parametrize("tau", [1e-20, 1e-6, 0.3, 1.0, 7.5, 1e3])
def test_indefinite_closed_forms(ex, tau):
    lo = -mpmath.inf if ex == 1 else 0
    ref = mpmath.quad(MP_F[ex], [lo, 0, tau] if ex == 1 else [lo, tau])
    assert get_problem(ex).exact_indef(tau) == pytest.approx(float(ref), rel=1e-14)


def test_example1_negative_tau():
    ref = mpmath.quad(MP_F[1], [-mpmath.inf, -3])
    assert get_problem(1).exact_indef(-3.0) == pytest.approx(float(ref), rel=1e-14)


def test_parameters():
    p1, p2, p3 = (PROBLEMS[i] for i in (1, 2, 3))
    assert p1.se[1].K == math.sqrt(3) * math.e and p1.se[1].d == 0.75
    assert p1.de[1].d == math.pi / 7
    assert p2.se[1].d == math.cosh(1.0) and p2.de[1].d == 1.5
    assert p3.se[1].K == math.exp(-1.0) and p3.de[1].d == math.log(math.pi)
    assert (p1.case, p2.case, p3.case) == (IntervalCase.CASE1, IntervalCase.CASE2, IntervalCase.CASE3)


def test_unknown():
    with pytest.raises(ValueError):
        get_problem(4)
    with pytest.raises(ValueError):
        get_problem(1).setup("xe")
