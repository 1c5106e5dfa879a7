"""Tolerance-driven selection of n from the a-priori bounds."""
import math
from dataclasses import dataclass

from .bounds import indef_certificate, quad_certificate
from .engine import QuadResult, sinc_indef, sinc_quad
from .exceptions import DomainError, ToleranceUnreachableError
from .mesh import DecayParams, SchemeId, build_mesh
from .transforms import TransformId

__all__ = ["ToleranceRequest", "choose_n", "integrate_to_tol"]

DEFAULT_N_CAP = 10**6


@dataclass(frozen=True)
class ToleranceRequest:
    tol: float
    scheme: SchemeId
    tid: TransformId
    params: DecayParams
    n_cap: int = DEFAULT_N_CAP

    def __post_init__(self):
        object.__setattr__(self, "scheme", SchemeId(self.scheme))
        object.__setattr__(self, "tid", TransformId(self.tid))
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise DomainError(f"tol must be a finite positive number, got {self.tol!r}")
        if int(self.n_cap) != self.n_cap or self.n_cap < 1:
            raise DomainError(f"n_cap must be a positive integer, got {self.n_cap!r}")

    def certificate(self):
        if self.scheme.is_indef:
            return indef_certificate(self.scheme, self.tid, self.params)
        return quad_certificate(self.scheme, self.tid, self.params)


def _first_valid(cert, n_cap):
    for n in range(1, n_cap + 1):
        if cert.is_valid(n):
            return n
    raise ToleranceUnreachableError(f"no n <= {n_cap} satisfies the side conditions of {cert.scheme.value}")


def choose_n(req):
    """Smallest admissible ``n`` whose certified bound is at most ``req.tol``.

    Returns
    -------
    n : int
    bound : float
        The certified bound at ``n``.

    Raises
    ------
    ToleranceUnreachableError
        If no ``n <= req.n_cap`` qualifies.
    """
    cert = req.certificate()
    lo = _first_valid(cert, req.n_cap)
    first_bound = cert.bound(lo)

    def ok(n):
        return cert.is_valid(n) and cert.bound(n) <= req.tol

    if ok(lo):
        return lo, first_bound

    # doubling: lo always fails, hi passes once found
    hi = lo
    while True:
        if hi >= req.n_cap:
            raise ToleranceUnreachableError(
                f"bound at n_cap={req.n_cap} is {cert.bound(req.n_cap):.3e} > tol={req.tol:.3e}"
            )
        hi = min(2 * hi, req.n_cap)
        assert cert.bound(hi) <= first_bound, "bound not decreasing on the valid range"
        if ok(hi):
            break
        lo = hi

    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi, cert.bound(hi)


def integrate_to_tol(f, req, tau=None):
    """Integrate ``f`` with the smallest ``n`` certified to meet ``req.tol``.

    For indefinite schemes pass the upper limit(s) in ``tau``.
    """
    n, bound = choose_n(req)
    mesh = build_mesh(req.scheme, req.params, n)
    if req.scheme.is_indef:
        if tau is None:
            raise DomainError("an indefinite scheme needs tau")
        res = sinc_indef(f, req.tid, mesh, tau)
    else:
        res = sinc_quad(f, req.tid, mesh)
    return QuadResult(value=res.value, bound=bound, mesh=mesh, terms_used=res.terms_used)
