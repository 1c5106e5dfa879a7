"""Variable transformations mapping the real line onto the integration interval.

Every function here is vectorised over ``t`` (or ``x``) and returns a float
for scalar input.
"""
import enum
import math

import numpy as np

from .exceptions import DomainError, UnsupportedTransformError
from .special import arcsinh

__all__ = [
    "IntervalCase",
    "TransformId",
    "case_of",
    "psi",
    "psi_prime",
    "psi_inverse",
    "x_gamma",
]

_HALF_PI = math.pi / 2
_LN2 = math.log(2.0)
# DE3(ddagger)^{-1}(x) is -inf below this.
_DE3_INVERSE_FLOOR = 1e-300


class IntervalCase(enum.Enum):
    """The three interval/decay settings handled by the library."""

    CASE1 = 1  # (-inf, inf), algebraic decay
    CASE2 = 2  # (0, inf), algebraic decay
    CASE3 = 3  # (0, inf), exponential decay

    @property
    def lower(self):
        return -math.inf if self is IntervalCase.CASE1 else 0.0


class TransformId(enum.Enum):
    SE1 = "se1"
    SE2 = "se2"
    SE3 = "se3"
    DE1 = "de1"
    DE2 = "de2"
    DE3_DAGGER = "de3dagger"
    DE3_DDAGGER = "de3ddagger"

    @property
    def is_de(self):
        return self.value.startswith("de")

    @property
    def case(self):
        return case_of(self)


_CASES = {
    TransformId.SE1: IntervalCase.CASE1,
    TransformId.DE1: IntervalCase.CASE1,
    TransformId.SE2: IntervalCase.CASE2,
    TransformId.DE2: IntervalCase.CASE2,
    TransformId.SE3: IntervalCase.CASE3,
    TransformId.DE3_DAGGER: IntervalCase.CASE3,
    TransformId.DE3_DDAGGER: IntervalCase.CASE3,
}


def case_of(tid):
    """Return the :class:`IntervalCase` a transformation belongs to."""
    return _CASES[TransformId(tid)]


def _prepare(t):
    arr = np.asarray(t, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _finish(out, scalar):
    return float(out[0]) if scalar else out


def _psi_se3(t):
    out = np.empty_like(t)
    pos = t > 0
    tp = t[pos]
    # arcsinh(e^t) = t + log(1 + sqrt(1 + e^{-2t}))
    out[pos] = tp + np.log1p(np.sqrt(1.0 + np.exp(-2.0 * tp)))
    out[~pos] = arcsinh(np.exp(t[~pos]))
    return out


def _psi_de3_ddagger(t):
    s = math.pi * np.sinh(t)
    out = np.empty_like(t)
    pos = s > 0
    out[pos] = s[pos] + np.log1p(np.exp(-s[pos]))
    out[~pos] = np.log1p(np.exp(s[~pos]))
    return out


def psi(tid, t):
    """Evaluate the transformation ``psi(t)``.

    Parameters
    ----------
    tid : TransformId or str
    t : float or array_like

    Returns
    -------
    float or ndarray
        Transformed abscissa; positive for the half-line cases.
    """
    tid = TransformId(tid)
    t, scalar = _prepare(t)
    with np.errstate(over="ignore", under="ignore"):
        if tid is TransformId.SE1:
            out = np.sinh(t)
        elif tid is TransformId.SE2:
            out = np.exp(t)
        elif tid is TransformId.SE3:
            out = _psi_se3(t)
        elif tid is TransformId.DE1:
            out = np.sinh(_HALF_PI * np.sinh(t))
        elif tid is TransformId.DE2:
            out = np.exp(_HALF_PI * np.sinh(t))
        elif tid is TransformId.DE3_DAGGER:
            out = np.exp(t - np.exp(-t))
        else:
            out = _psi_de3_ddagger(t)
    return _finish(out, scalar)


def _prime_se3(t):
    out = np.empty_like(t)
    pos = t > 0
    out[pos] = 1.0 / np.sqrt(1.0 + np.exp(-2.0 * t[pos]))
    e = np.exp(t[~pos])
    out[~pos] = e / np.sqrt(1.0 + e * e)
    return out


def _prime_de2(t):
    out = np.empty_like(t)
    # cosh(t) = e^{-t}/2 exactly in double below -20; fold it into the exponent
    far = t < -20.0
    tf = t[far]
    out[far] = (math.pi / 4) * np.exp(-tf + _HALF_PI * np.sinh(tf))
    tn = t[~far]
    out[~far] = _HALF_PI * np.cosh(tn) * np.exp(_HALF_PI * np.sinh(tn))
    return out


def _prime_de3_dagger(t):
    out = np.zeros_like(t)
    # exp(t - e^{-t}) is below the smallest subnormal for t < -7
    live = t > -7.0
    tl = t[live]
    em = np.exp(-tl)
    out[live] = (1.0 + em) * np.exp(tl - em)
    return out


def _prime_de3_ddagger(t):
    out = np.zeros_like(t)
    live = t > -8.0
    tl = t[live]
    s = math.pi * np.sinh(tl)
    c = math.pi * np.cosh(tl)
    vals = np.empty_like(tl)
    pos = s >= 0
    vals[pos] = c[pos] / (1.0 + np.exp(-s[pos]))
    es = np.exp(s[~pos])
    vals[~pos] = c[~pos] * es / (1.0 + es)
    out[live] = vals
    return out


def psi_prime(tid, t):
    """Derivative ``psi'(t)`` (strictly positive wherever representable)."""
    tid = TransformId(tid)
    t, scalar = _prepare(t)
    with np.errstate(over="ignore", under="ignore"):
        if tid is TransformId.SE1:
            out = np.cosh(t)
        elif tid is TransformId.SE2:
            out = np.exp(t)
        elif tid is TransformId.SE3:
            out = _prime_se3(t)
        elif tid is TransformId.DE1:
            out = _HALF_PI * np.cosh(t) * np.cosh(_HALF_PI * np.sinh(t))
        elif tid is TransformId.DE2:
            out = _prime_de2(t)
        elif tid is TransformId.DE3_DAGGER:
            out = _prime_de3_dagger(t)
        else:
            out = _prime_de3_ddagger(t)
    return _finish(out, scalar)


def _log_sinh(x):
    out = np.empty_like(x)
    big = x > 20.0
    xb = x[big]
    out[big] = xb - _LN2 + np.log1p(-np.exp(-2.0 * xb))
    out[~big] = np.log(np.sinh(x[~big]))
    return out


def _log_expm1(x):
    out = np.empty_like(x)
    big = x > 30.0
    xb = x[big]
    out[big] = xb + np.log1p(-np.exp(-xb))
    out[~big] = np.log(np.expm1(x[~big]))
    return out


def psi_inverse(tid, x):
    """Inverse transformation ``psi^{-1}(x)``.

    Raises
    ------
    UnsupportedTransformError
        For DE3 (dagger), whose inverse has no elementary closed form.
    DomainError
        If ``x`` lies outside the image of ``psi``.
    """
    tid = TransformId(tid)
    if tid is TransformId.DE3_DAGGER:
        raise UnsupportedTransformError("the DE3 (dagger) transformation has no elementary inverse")
    x, scalar = _prepare(x)
    if np.isnan(x).any():
        raise DomainError("psi_inverse: NaN argument")
    if case_of(tid) is not IntervalCase.CASE1:
        if tid is TransformId.DE3_DDAGGER:
            bad = x < 0
        else:
            bad = x <= 0
        if bad.any():
            raise DomainError(f"psi_inverse({tid.value}): argument outside (0, inf): {x[bad][0]!r}")

    with np.errstate(over="ignore", divide="ignore"):
        if tid is TransformId.SE1:
            out = arcsinh(x)
        elif tid is TransformId.SE2:
            out = np.log(x)
        elif tid is TransformId.SE3:
            out = _log_sinh(x)
        elif tid is TransformId.DE1:
            out = arcsinh(arcsinh(x) / _HALF_PI)
        elif tid is TransformId.DE2:
            out = arcsinh(np.log(x) / _HALF_PI)
        else:
            out = np.full_like(x, -np.inf)
            ok = x >= _DE3_INVERSE_FLOOR
            out[ok] = arcsinh(_log_expm1(x[ok]) / math.pi)
    return _finish(np.asarray(out, dtype=float), scalar)


def x_gamma(gamma):
    """Threshold beyond which ``cosh(x) exp(-pi*gamma*sinh(x))`` is monotone.

    Parameters
    ----------
    gamma : float
        Positive decay exponent.

    Returns
    -------
    float
    """
    gamma = float(gamma)
    if not gamma > 0 or math.isinf(gamma):
        raise DomainError(f"x_gamma requires a finite gamma > 0, got {gamma!r}")
    two_pi_g = 2.0 * math.pi * gamma
    if two_pi_g >= 1.0:
        return float(arcsinh(1.0))
    return float(arcsinh(math.sqrt(1.0 + math.sqrt(1.0 - two_pi_g * two_pi_g)) / two_pi_g))
