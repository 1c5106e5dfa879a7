"""Built-in benchmark integrands with closed-form integrals.

Each problem carries certified decay parameters for an SE and a DE
transformation.
"""
import math
from dataclasses import dataclass
from typing import Callable

from .mesh import DecayParams
from .oracles import e1_increment, oracle_e1
from .transforms import IntervalCase, TransformId

__all__ = ["Problem", "PROBLEMS", "get_problem"]

_SQRT3 = math.sqrt(3.0)
_E1_OF_1 = oracle_e1(1.0)


def f1(t):
    return _SQRT3 / (2.0 * math.pi * (t * t + t + 1.0))


def f1_indef(tau):
    return 0.5 + math.atan(2.0 / _SQRT3 * (tau + 0.5)) / math.pi


def f2(t):
    return 2.0 / (math.pi * (1.0 + t * t))


def f2_indef(tau):
    return 2.0 / math.pi * math.atan(tau)


def f3(t):
    return math.exp(-(1.0 + t)) / (1.0 + t)


def f3_indef(tau):
    # E1(1) - Gamma(0, 1 + tau)
    return e1_increment(1.0, tau)


@dataclass(frozen=True)
class Problem:
    number: int
    f: Callable[[float], float]
    exact: float
    exact_indef: Callable[[float], float]
    se: tuple  # (TransformId, DecayParams)
    de: tuple

    @property
    def case(self):
        return self.se[1].case

    def setup(self, family):
        """``(TransformId, DecayParams)`` for family ``"se"`` or ``"de"``."""
        family = family.lower()
        if family not in ("se", "de"):
            raise ValueError(f"family must be 'se' or 'de', got {family!r}")
        return self.se if family == "se" else self.de


def _p(K, d, case):
    return DecayParams(K=K, alpha=1.0, beta=1.0, d=d, case=case)


PROBLEMS = {
    1: Problem(
        1, f1, 1.0, f1_indef,
        se=(TransformId.SE1, _p(_SQRT3 * math.e, 0.75, IntervalCase.CASE1)),
        de=(TransformId.DE1, _p(8.0 * _SQRT3 / math.e, math.pi / 7, IntervalCase.CASE1)),
    ),
    2: Problem(
        2, f2, 1.0, f2_indef,
        se=(TransformId.SE2, _p(2.0 / math.pi, math.cosh(1.0), IntervalCase.CASE2)),
        de=(TransformId.DE2, _p(2.0 / math.pi, 1.5, IntervalCase.CASE2)),
    ),
    3: Problem(
        3, f3, _E1_OF_1, f3_indef,
        se=(TransformId.SE3, _p(math.exp(-1.0), 1.5, IntervalCase.CASE3)),
        de=(TransformId.DE3_DDAGGER, _p(math.e, math.log(math.pi), IntervalCase.CASE3)),
    ),
}


def get_problem(number):
    try:
        return PROBLEMS[int(number)]
    except (KeyError, ValueError):
        raise ValueError(f"unknown example {number!r}; choose 1, 2 or 3") from None
