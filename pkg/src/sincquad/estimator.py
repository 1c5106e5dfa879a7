"""scikit-learn style wrappers around the integration engine.

The "data" passed to ``fit`` is the integrand itself; hyperparameters are
the transformation and its decay parameters.

Examples
--------
>>> import math
>>> est = SincQuadrature("de2", K=2 / math.pi, d=1.5, n=40).fit(lambda t: 2 / (math.pi * (1 + t * t)))
>>> abs(est.value_ - 1.0) < 1e-14
True
"""
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_integrand, check_n_or_tol, check_tau
from .auto_tol import DEFAULT_N_CAP, ToleranceRequest, choose_n
from .engine import integrate, integrate_indef, sinc_indef
from .mesh import DecayParams, build_mesh, scheme_for
from .transforms import TransformId, case_of

__all__ = ["SincIndefiniteIntegral", "SincQuadrature"]


class _SincBase(BaseEstimator):
    _kind = "quad"

    def __init__(self, transformation="de1", K=1.0, alpha=1.0, beta=1.0, d=0.5, n=None, tol=None,
                 n_cap=DEFAULT_N_CAP):
        self.transformation = transformation
        self.K = K
        self.alpha = alpha
        self.beta = beta
        self.d = d
        self.n = n
        self.tol = tol
        self.n_cap = n_cap

    def _setup(self, f):
        check_integrand(f)
        n, tol = check_n_or_tol(self.n, self.tol)
        tid = TransformId(self.transformation)
        params = DecayParams(K=self.K, alpha=self.alpha, beta=self.beta, d=self.d, case=case_of(tid))
        if tol is not None:
            req = ToleranceRequest(tol=tol, scheme=scheme_for(tid, self._kind), tid=tid, params=params,
                                   n_cap=self.n_cap)
            n, _ = choose_n(req)
        return tid, params, n


class SincQuadrature(_SincBase):
    """Integral of ``f`` over the whole interval, with its a-priori bound.

    Parameters
    ----------
    transformation : str
        One of ``se1 se2 se3 de1 de2 de3dagger de3ddagger``.
    K, alpha, beta, d : float
        Decay certificate of the integrand.
    n : int, optional
        Mesh size. Mutually exclusive with ``tol``.
    tol : float, optional
        Target bound; the smallest certified ``n`` is chosen.
    n_cap : int
        Search limit when ``tol`` is given.

    Attributes
    ----------
    value_ : float
    bound_ : float or None
        None when no explicit constant exists or ``n`` is outside the
        certified range.
    mesh_ : Mesh
    n_ : int
    """

    def fit(self, f, y=None):
        tid, params, n = self._setup(f)
        res = integrate(f, tid, params, n)
        self.value_ = res.value
        self.bound_ = res.bound
        self.mesh_ = res.mesh
        self.n_ = n
        return self

    def predict(self, X=None):
        """The fitted integral (``X`` is ignored)."""
        check_is_fitted(self, "value_")
        return self.value_


class SincIndefiniteIntegral(TransformerMixin, _SincBase):
    """Indefinite integral of ``f`` from the left end of the interval.

    Same parameters as :class:`SincQuadrature`. After ``fit(f)``,
    ``transform(tau)`` returns the integral up to each ``tau``; ``bound_``
    is uniform in ``tau``.
    """

    _kind = "indef"

    def fit(self, f, y=None):
        tid, params, n = self._setup(f)
        self.f_ = f
        self.tid_ = tid
        self.mesh_ = build_mesh(scheme_for(tid, "indef"), params, n)
        # bound only depends on n; evaluate at a harmless upper limit
        self.bound_ = integrate_indef(f, tid, params, n, float("inf")).bound
        self.n_ = n
        return self

    def transform(self, tau):
        check_is_fitted(self, "mesh_")
        taus = check_tau(tau)
        return sinc_indef(self.f_, self.tid_, self.mesh_, taus).value
