"""Sinc quadrature and Sinc indefinite integration.

Integrands are plain Python callables ``f(x) -> float`` on the original
interval. They are sampled once per mesh point; the indefinite formula is
vectorised over the evaluation points ``tau``.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import certificate
from .exceptions import DomainError, NonFiniteSampleError, UnsupportedTransformError
from .mesh import DecayParams, Mesh, build_mesh, check_case, scheme_for, validate_n
from .special import si
from .transforms import IntervalCase, TransformId, case_of, psi, psi_inverse, psi_prime

__all__ = [
    "EnvelopeReport",
    "QuadResult",
    "basis_j",
    "envelope_check",
    "integrate",
    "integrate_indef",
    "sample",
    "sinc_indef",
    "sinc_quad",
]


@dataclass(frozen=True)
class QuadResult:
    """Approximation together with its certified bound, if one applies.

    ``value`` is a float, or an ndarray for indefinite integrals evaluated
    at several points.
    """

    value: object
    bound: Optional[float]
    mesh: Mesh
    terms_used: int


def sample(f, tid, mesh):
    """Sample the transformed integrand ``F(kh) = f(psi(kh)) psi'(kh)``.

    Returns
    -------
    ks : ndarray of int
        ``-M, ..., N``.
    F : ndarray
        Transformed samples; terms whose weight underflows are exactly 0.
    """
    tid = TransformId(tid)
    ks = np.arange(-mesh.M, mesh.N + 1)
    t = ks * mesh.h
    xs = np.atleast_1d(psi(tid, t))
    ws = np.atleast_1d(psi_prime(tid, t))
    lower = case_of(tid).lower
    F = np.zeros(len(ks))
    for i, (k, x, w) in enumerate(zip(ks, xs, ws)):
        if w == 0.0:
            continue
        fx = float(f(float(x)))
        with np.errstate(over="ignore", invalid="ignore"):
            term = fx * w
        if not math.isfinite(term):
            at_endpoint = x == lower or math.isinf(x)
            if at_endpoint or (fx == 0.0 and math.isinf(w)):
                # x rounded onto the endpoint: the weighted term tends to 0 there
                continue
            raise NonFiniteSampleError(int(k), float(x), fx)
        F[i] = term
    return ks, F


def _ends_inward(values, n_neg):
    """Sum from the outermost index toward k = 0, left and right separately."""
    left = 0.0
    for v in values[:n_neg]:
        left += v
    right = 0.0
    for v in reversed(values[n_neg:]):
        right += v
    return left + right


def sinc_quad(f, tid, mesh):
    """Transformed Sinc quadrature ``h * sum_{k=-M}^{N} f(psi(kh)) psi'(kh)``.

    Parameters
    ----------
    f : callable
        Integrand on the original interval.
    tid : TransformId or str
    mesh : Mesh

    Returns
    -------
    QuadResult
        ``bound`` is None; use :func:`integrate` to attach a certificate.
    """
    ks, F = sample(f, tid, mesh)
    total = _ends_inward([float(v) for v in F], mesh.M)
    return QuadResult(value=mesh.h * total, bound=None, mesh=mesh, terms_used=int(np.count_nonzero(F)))


def basis_j(k, h, x):
    """Sinc indefinite-integration basis ``h (1/2 + Si(pi (x/h - k)) / pi)``.

    Works elementwise for array ``x``; ``x = -inf`` gives 0 and ``+inf`` gives h.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        arg = math.pi * ((x - k * h) / h)
    out = h * (0.5 + np.asarray(si(arg)) / math.pi)
    return float(out) if out.ndim == 0 else out


def _check_tau(tid, tau):
    if np.isnan(tau).any():
        raise DomainError("tau must not be NaN")
    if case_of(tid) is not IntervalCase.CASE1 and (tau < 0).any():
        raise DomainError(f"tau must be >= 0 on (0, inf), got {tau[tau < 0][0]!r}")


def _indef_sum(ks, F, h, xi, n_neg):
    used = np.flatnonzero(F)
    if used.size == 0:
        return np.zeros_like(xi)
    # one Si evaluation for the whole (tau, k) table; same values as basis_j
    with np.errstate(invalid="ignore"):
        arg = math.pi * ((xi[:, None] - ks[used] * h) / h)
    J = h * (0.5 + si(arg) / math.pi)
    terms = F[used] * J
    left = used < n_neg
    total_left = np.zeros_like(xi)
    for col in terms[:, left].T:
        total_left += col
    total_right = np.zeros_like(xi)
    for col in terms[:, ~left][:, ::-1].T:
        total_right += col
    return total_left + total_right


def sinc_indef(f, tid, mesh, tau):
    """Sinc indefinite integral from the lower endpoint up to ``tau``.

    Parameters
    ----------
    f : callable
    tid : TransformId or str
        Any transformation except DE3 (dagger).
    mesh : Mesh
    tau : float or array_like
        Upper limit(s); ``tau >= 0`` on the half line, ``+inf`` allowed.

    Returns
    -------
    QuadResult
        ``value`` is a float for scalar ``tau``, an ndarray otherwise.
    """
    tid = TransformId(tid)
    if tid is TransformId.DE3_DAGGER:
        raise UnsupportedTransformError("indefinite integration needs psi^{-1}, unavailable for DE3 (dagger)")
    tau_arr = np.asarray(tau, dtype=float)
    scalar = tau_arr.ndim == 0
    tau_arr = np.atleast_1d(tau_arr)
    _check_tau(tid, tau_arr)

    ks, F = sample(f, tid, mesh)
    value = np.zeros_like(tau_arr)
    if case_of(tid) is IntervalCase.CASE1:
        live = tau_arr > -np.inf
    else:
        # lower endpoint: exact limit 0, psi^{-1}(0) = -inf never formed
        live = tau_arr > 0
    if live.any():
        xi = np.atleast_1d(psi_inverse(tid, tau_arr[live]))
        value[live] = _indef_sum(ks, F, mesh.h, xi, mesh.M)
    out = float(value[0]) if scalar else value
    return QuadResult(value=out, bound=None, mesh=mesh, terms_used=int(np.count_nonzero(F)))


def _certified(tid, params, kind, mesh):
    scheme = scheme_for(tid, kind)
    if not validate_n(scheme, params, mesh):
        return None
    try:
        cert = certificate(tid, params, kind)
    except UnsupportedTransformError:
        return None
    return cert.bound(mesh.n)


def integrate(f, tid, params, n):
    """Sinc quadrature with the mesh rule and certified bound for ``params``.

    ``bound`` is None when no explicit constant exists (DE3 dagger) or
    ``n`` fails the side conditions.
    """
    tid = TransformId(tid)
    check_case(tid, params)
    mesh = build_mesh(scheme_for(tid, "quad"), params, n)
    res = sinc_quad(f, tid, mesh)
    return QuadResult(res.value, _certified(tid, params, "quad", mesh), mesh, res.terms_used)


def integrate_indef(f, tid, params, n, tau):
    """Sinc indefinite integration with mesh rule and uniform certified bound."""
    tid = TransformId(tid)
    check_case(tid, params)
    mesh = build_mesh(scheme_for(tid, "indef"), params, n)
    res = sinc_indef(f, tid, mesh, tau)
    return QuadResult(res.value, _certified(tid, params, "indef", mesh), mesh, res.terms_used)


# ---------------------------------------------------------------------------
# envelope sampling


_ENVELOPE_SLACK = 1e-12


@dataclass(frozen=True)
class EnvelopeReport:
    max_ratio: float
    at: float
    n_points: int

    @property
    def ok(self):
        # slack for rounding when f touches its envelope exactly
        return self.max_ratio <= 1.0 + _ENVELOPE_SLACK


def _log1p_sq(z):
    # log(1 + z^2) without overflow
    az = np.abs(z)
    big = az > 1.0
    out = np.empty_like(az)
    out[big] = 2.0 * np.log(az[big]) + np.log1p(1.0 / (az[big] * az[big]))
    out[~big] = np.log1p(az[~big] * az[~big])
    return out


def _log_envelope(case, params, x):
    a, b = params.alpha, params.beta
    if case is IntervalCase.CASE1:
        gamma = np.where(x < 0, a, b)
        return -(gamma + 1.0) / 2.0 * _log1p_sq(x)
    if case is IntervalCase.CASE2:
        return (a - 1.0) * np.log(x) - (a + b) / 2.0 * _log1p_sq(x)
    return (a - 1.0) * (np.log(x) - np.log1p(x)) - b * x


def envelope_check(f, params, tid, grid):
    """Sample ``|f(x)| / (K |E(x)|)`` on a real grid and report its maximum.

    This only probes the real axis; analyticity in the strip cannot be
    verified numerically.
    """
    tid = TransformId(tid)
    case = case_of(tid)
    x = np.asarray(grid, dtype=float)
    if case is not IntervalCase.CASE1 and (x <= 0).any():
        raise DomainError("grid points must lie in (0, inf)")
    fx = np.abs(np.array([float(f(float(v))) for v in x]))
    log_env = math.log(params.K) + _log_envelope(case, params, x)
    with np.errstate(divide="ignore"):
        ratios = np.where(fx > 0, np.exp(np.log(np.where(fx > 0, fx, 1.0)) - log_env), 0.0)
    i = int(np.argmax(ratios))
    return EnvelopeReport(max_ratio=float(ratios[i]), at=float(x[i]), n_points=len(x))
