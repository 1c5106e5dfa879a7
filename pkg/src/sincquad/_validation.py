"""Input-validation helpers shared by the estimator wrappers."""
import math

import numpy as np

from .exceptions import DomainError

__all__ = ["check_integrand", "check_n_or_tol", "check_tau"]


def check_integrand(f):
    """Reject anything that is not a callable of one real argument."""
    if not callable(f):
        raise DomainError(f"integrand must be callable, got {type(f).__name__}")
    return f


def check_n_or_tol(n, tol):
    """Exactly one of ``n`` (positive int) and ``tol`` (positive float)."""
    if (n is None) == (tol is None):
        raise DomainError("give exactly one of n and tol")
    if n is not None:
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise DomainError(f"n must be a positive integer, got {n!r}")
        return int(n), None
    tol = float(tol)
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError(f"tol must be finite and positive, got {tol!r}")
    return None, tol


def check_tau(tau):
    """Coerce upper limits to a 1-D float array; NaN is rejected."""
    arr = np.atleast_1d(np.asarray(tau, dtype=float))
    if arr.ndim != 1:
        arr = arr.ravel()
    if np.isnan(arr).any():
        raise DomainError("tau contains NaN")
    return arr
