"""Reference values for the exponential integral.

Only the experiment harness and the tests import this module; the
integration core never does.
"""
import math

from .exceptions import DomainError

__all__ = ["e1_increment", "oracle_e1", "upper_gamma0"]

_EULER_GAMMA = 0.57721566490153286061
_MAXITER = 1000
_EPS = 1e-17


def _e1_series(x):
    # E1(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k k!), summed exactly-rounded
    # with fsum: near x = 1 the result is ~0.22 out of terms of size ~0.8
    parts = [-_EULER_GAMMA, -math.log(x)]
    term = 1.0
    for k in range(1, _MAXITER):
        term *= -x / k
        contrib = term / k
        parts.append(-contrib)
        if abs(contrib) < _EPS * 1e-3:
            break
    return math.fsum(parts)


def _e1_continued_fraction(x):
    # Modified Lentz on E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAXITER):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(-x)


def oracle_e1(x):
    """Exponential integral E1(x) for x > 0 (``+inf`` gives 0).

    Power series for ``x <= 1``, continued fraction above.
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"oracle_e1 requires x > 0, got {x!r}")
    if math.isinf(x):
        return 0.0
    if x <= 1.0:
        return _e1_series(x)
    return _e1_continued_fraction(x)


def upper_gamma0(x):
    """Upper incomplete gamma function Gamma(0, x), which equals E1(x)."""
    return oracle_e1(x)


def e1_increment(x, dx):
    """E1(x) - E1(x + dx) without cancellation for small ``dx``.

    Uses the series form when ``0 < x`` and ``x + dx <= 2``; otherwise the
    plain difference, which then loses nothing significant.
    """
    x, dx = float(x), float(dx)
    if not x > 0 or dx < 0:
        raise DomainError(f"e1_increment requires x > 0 and dx >= 0, got {x!r}, {dx!r}")
    if dx == 0:
        return 0.0
    if x + dx > 2.0:
        return oracle_e1(x) - oracle_e1(x + dx)
    # log((x+dx)/x) + sum_k (-1)^k (( x+dx)^k - x^k) / (k k!)
    lg = math.log1p(dx / x)
    total = 0.0
    xk_over_fact = 1.0
    for k in range(1, _MAXITER):
        xk_over_fact *= -x / k
        contrib = xk_over_fact * math.expm1(k * lg) / k
        total += contrib
        if abs(contrib) < _EPS * abs(total):
            break
    return lg + total
