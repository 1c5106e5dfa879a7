"""Scalar kernels: the sine integral and an inverse hyperbolic sine.

Both functions accept floats or numpy arrays and return the same kind.
"""
import math

import numpy as np

__all__ = ["si", "arcsinh"]

_SERIES_CUTOFF = 4.0
_SERIES_TERMS = 22
_CF_MAXITER = 500
_LN2 = math.log(2.0)
_TWO_POW_28 = 2.0**28
_TWO_POW_M28 = 2.0**-28


def _si_series(x):
    # Maclaurin series, sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!).
    x2 = x * x
    term = x.copy()
    total = x.copy()
    for k in range(1, _SERIES_TERMS):
        term = term * (-x2) / ((2 * k) * (2 * k + 1))
        total = total + term / (2 * k + 1)
    return total


def _si_auxiliary(x):
    """Si for x > 0 via the auxiliary functions f, g.

    e^{ix} E1(ix) = g(x) - i f(x) is evaluated with the modified Lentz
    algorithm on its continued fraction, then Si = pi/2 - f cos x - g sin x.
    """
    tiny = 1e-300
    b = 1.0 + 1j * x
    c = np.full(x.shape, 1.0 / tiny, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    # iterate only on the entries that have not converged yet
    idx = np.arange(x.size)
    hb, bb, cb, db = h, b, c, d
    for i in range(2, _CF_MAXITER):
        a = -float((i - 1) ** 2)
        bb = bb + 2.0
        db = 1.0 / (a * db + bb)
        cb = bb + a / cb
        delta = cb * db
        hb = hb * delta
        keep = np.abs(delta - 1.0) > 1e-16
        if not keep.all():
            h[idx[~keep]] = hb[~keep]
            idx, hb, bb, cb, db = idx[keep], hb[keep], bb[keep], cb[keep], db[keep]
            if idx.size == 0:
                break
    h[idx] = hb
    # h now holds e^{ix} E1(ix) = g - i f
    g = h.real
    f = -h.imag
    return math.pi / 2 - f * np.cos(x) - g * np.sin(x)


def si(x):
    """Sine integral Si(x) = int_0^x sin(s)/s ds.

    Parameters
    ----------
    x : float or array_like
        Argument. ``+inf`` and ``-inf`` return the limits ``pi/2`` and ``-pi/2``.

    Returns
    -------
    float or ndarray
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    ax = np.abs(arr)
    out = np.empty_like(arr)

    small = ax <= _SERIES_CUTOFF
    if small.any():
        out[small] = _si_series(ax[small])
    inf = np.isinf(ax)
    out[inf] = math.pi / 2
    large = ~small & ~inf & ~np.isnan(ax)
    if large.any():
        out[large] = _si_auxiliary(ax[large])
    out[np.isnan(ax)] = np.nan
    out = np.copysign(out, arr)
    return float(out[0]) if scalar else out


def arcsinh(x):
    """Inverse hyperbolic sine, accurate for all finite arguments.

    Uses the odd symmetry so that negative arguments never suffer the
    cancellation in ``log(x + sqrt(x*x + 1))``.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    ax = np.abs(arr)
    out = np.empty_like(arr)

    tiny = ax < _TWO_POW_M28
    huge = ax > _TWO_POW_28
    mid = (ax > 2.0) & ~huge
    low = ~tiny & ~huge & ~mid

    out[tiny] = ax[tiny]
    with np.errstate(divide="ignore"):
        out[huge] = np.log(ax[huge]) + _LN2
    a = ax[mid]
    out[mid] = np.log(2.0 * a + 1.0 / (np.sqrt(a * a + 1.0) + a))
    a = ax[low]
    a2 = a * a
    out[low] = np.log1p(a + a2 / (1.0 + np.sqrt(1.0 + a2)))

    out = np.copysign(out, arr)
    return float(out[0]) if scalar else out
