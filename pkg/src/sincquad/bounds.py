"""Explicit a-priori error constants and convergence rates.

The constants are evaluated in ordinary double precision; they are
mathematical bounds, not floating-point-rigorous enclosures.
"""
import enum
import math
from dataclasses import dataclass

from .exceptions import DomainError, InvalidMeshError, UnsupportedTransformError
from .mesh import DecayParams, SchemeId, build_mesh, check_case, scheme_for, validate_n
from .transforms import IntervalCase, TransformId

__all__ = [
    "BoundCertificate",
    "EnvelopeSpace",
    "GeneralEnvelope",
    "c_alpha_d",
    "c_tilde_d",
    "certificate",
    "envelope_for",
    "general_envelope_bound",
    "general_envelope_constant",
    "indef_certificate",
    "quad_certificate",
    "rate",
    "rate_eps_de",
]

_PI = math.pi


def _check_d(d):
    if not 0 < d < _PI / 2:
        raise DomainError(f"d must lie in (0, pi/2), got {d!r}")


def c_alpha_d(alpha, d):
    """Factor used by the SE case-3 constants."""
    _check_d(d)
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if alpha < 1:
        return (2.0 * (1.0 + 1.0 / math.cos(d))) ** ((1.0 - alpha) / 2.0)
    return 2.0 ** ((alpha - 1.0) / 2.0)


def c_tilde_d(d):
    """Factor used by the DE3 (double dagger) constants."""
    _check_d(d)
    c = 1.0 + 1.0 / math.cos(_PI / 2 * math.sin(d))
    lg = math.log(1.0 + c)
    return (1.0 + lg) / lg * c


def rate_eps_de(d, mu, n):
    """``exp(-pi d n / log(4dn/mu)) * log(4dn/mu) / n``."""
    arg = 4.0 * d * n / mu
    if not arg > 1:
        raise DomainError(f"rate_eps_de requires 4 d n / mu > 1, got {arg!r}")
    lg = math.log(arg)
    return math.exp(-_PI * d * n / lg) * lg / n


def _de_rate(d, mu, n, factor):
    arg = factor * d * n / mu
    if not arg > 1:
        raise DomainError(f"DE rate requires {factor:g} d n / mu > 1, got {arg!r}")
    return math.exp(-2.0 * _PI * d * n / math.log(arg))


def rate(scheme, d, mu, n):
    """Convergence rate (the n-dependent factor of the bound) for a scheme."""
    scheme = SchemeId(scheme)
    if scheme is SchemeId.SE_QUAD:
        return math.exp(-math.sqrt(2.0 * _PI * d * mu * n))
    if scheme is SchemeId.SE_INDEF:
        return math.exp(-math.sqrt(_PI * d * mu * n))
    if scheme is SchemeId.DE_QUAD:
        return _de_rate(d, mu, n, 8.0)
    if scheme is SchemeId.DE3_QUAD:
        return _de_rate(d, mu, n, 4.0)
    if scheme is SchemeId.DE3_DAGGER_QUAD:
        return _de_rate(d, mu, n, 2.0 * _PI)
    if scheme is SchemeId.DE_INDEF:
        return rate_eps_de(d, mu, n)
    return rate_eps_de(d, 2.0 * mu, n)


@dataclass(frozen=True)
class BoundCertificate:
    """Explicit constant plus the scheme's rate; ``bound(n) = constant * rate(n)``."""

    constant: float
    scheme: SchemeId
    params: DecayParams

    def rate(self, n):
        return rate(self.scheme, self.params.d, self.params.mu, n)

    def bound(self, n):
        return self.constant * self.rate(n)

    def is_valid(self, n):
        """Whether the side conditions of the bound hold at ``n``."""
        try:
            mesh = build_mesh(self.scheme, self.params, n)
        except DomainError:
            return False
        return bool(validate_n(self.scheme, self.params, mesh))

    def certified_bound(self, n):
        """Bound at ``n``; raises :class:`InvalidMeshError` if ``n`` is not admissible."""
        if not self.is_valid(n):
            raise InvalidMeshError(f"n={n} violates the side conditions of {self.scheme.value}")
        return self.bound(n)


def _se_parts(p):
    """Shared pieces of the SE constants: (denominator base, cos-power)."""
    return math.sqrt(2.0 * _PI * p.d * p.mu), math.cos(p.d)


def quad_certificate(scheme, tid, params):
    """Certificate for the Sinc quadrature error.

    Parameters
    ----------
    scheme : SchemeId
        One of ``SE_QUAD``, ``DE_QUAD``, ``DE3_QUAD``.
    tid : TransformId
    params : DecayParams

    Raises
    ------
    UnsupportedTransformError
        For DE3 (dagger), which has a known rate but no explicit constant.
    """
    scheme, tid = SchemeId(scheme), TransformId(tid)
    _check_pairing(scheme, tid, "quad")
    check_case(tid, params)
    K, a, b, d = params.K, params.alpha, params.beta, params.d
    mu, nu = params.mu, params.nu

    if scheme is SchemeId.SE_QUAD:
        denom = 1.0 - math.exp(-math.sqrt(2.0 * _PI * d * mu))
        cd = math.cos(d)
        if tid is TransformId.SE1:
            C = 2.0 ** (nu + 1) * K / mu * (2.0 / (denom * cd**nu) + 1.0)
        elif tid is TransformId.SE2:
            C = 2.0 * K / mu * (2.0 / (denom * cd ** ((a + b) / 2)) + 1.0)
        else:
            C = 2.0 * K / mu * (
                2.0 ** (1.0 + b / 2) * c_alpha_d(a, d) / (denom * cd ** ((a + b) / 2))
                + 2.0 ** ((1.0 - a + abs(1.0 - a)) / 2)
            )
    else:
        cs = math.cos(_PI / 2 * math.sin(d))
        cd = math.cos(d)
        if tid is TransformId.DE1:
            denom = 1.0 - math.exp(-_PI * mu * math.e / 4)
            C = 2.0 ** (nu + 1) * K / mu * (2.0 / (denom * cs**nu * cd) + math.exp(_PI * nu / 4))
        elif tid is TransformId.DE2:
            denom = 1.0 - math.exp(-_PI * mu * math.e / 4)
            C = 2.0 * K / mu * (2.0 / (denom * cs ** ((a + b) / 2) * cd) + math.exp(_PI * nu / 4))
        else:
            denom = 1.0 - math.exp(-_PI * mu * math.e / 2)
            C = 2.0 * K / mu * (
                2.0 * c_tilde_d(d) ** (1.0 - a) / (denom * cs ** (a + b) * cd)
                + math.exp(_PI * (1.0 - a + 6.0 * nu) / 12)
            )
    return BoundCertificate(constant=C, scheme=scheme, params=params)


def indef_certificate(scheme, tid, params):
    """Certificate for the Sinc indefinite integration error (sup over tau).

    ``scheme`` is one of ``SE_INDEF``, ``DE_INDEF``, ``DE3_INDEF``.
    """
    scheme, tid = SchemeId(scheme), TransformId(tid)
    _check_pairing(scheme, tid, "indef")
    check_case(tid, params)
    K, a, b, d = params.K, params.alpha, params.beta, params.d
    mu, nu = params.mu, params.nu

    if scheme is SchemeId.SE_INDEF:
        denom = 1.0 - math.exp(-2.0 * math.sqrt(_PI * d * mu))
        root = math.sqrt(_PI / (d * mu))
        cd = math.cos(d)
        if tid is TransformId.SE1:
            C = 2.0 ** (nu + 1) * K / mu * (root / (denom * cd**nu) + 1.1)
        elif tid is TransformId.SE2:
            C = 2.0 * K / mu * (root / (denom * cd ** ((a + b) / 2)) + 1.1)
        else:
            # 2^{beta/2} c_{alpha,d}: the envelope constant L of the SE3 integrand
            C = 2.0 * K / mu * (
                2.0 ** (b / 2) * c_alpha_d(a, d) * root / (denom * cd ** ((a + b) / 2))
                + 1.1 * 2.0 ** ((1.0 - a + abs(1.0 - a)) / 2)
            )
    else:
        cs = math.cos(_PI / 2 * math.sin(d))
        cd = math.cos(d)
        if tid is TransformId.DE1:
            denom = 1.0 - math.exp(-_PI * mu * math.e / 2)
            C = 2.0 ** (nu + 1) * K / (mu * d) * (1.0 / (denom * cs**nu * cd) + math.exp(_PI * (a + b) / 4))
        elif tid is TransformId.DE2:
            denom = 1.0 - math.exp(-_PI * mu * math.e / 2)
            C = 2.0 * K / (mu * d) * (
                1.0 / (denom * cs ** ((a + b) / 2) * cd) + math.exp(_PI * (a + b) / 4)
            )
        else:
            denom = 1.0 - math.exp(-_PI * mu * math.e)
            C = 2.0 * K / (mu * d) * (
                c_tilde_d(d) ** (1.0 - a) / (denom * cs ** (a + b) * cd)
                + math.exp(_PI * (1.0 + 5.0 * a + 6.0 * b) / 12)
            )
    return BoundCertificate(constant=C, scheme=scheme, params=params)


def certificate(tid, params, kind="quad"):
    """Certificate for ``tid`` and formula ``kind`` (``"quad"`` or ``"indef"``)."""
    scheme = scheme_for(tid, kind)
    if kind == "quad":
        return quad_certificate(scheme, tid, params)
    return indef_certificate(scheme, tid, params)


def _check_pairing(scheme, tid, kind):
    if scheme is SchemeId.DE3_DAGGER_QUAD or tid is TransformId.DE3_DAGGER:
        raise UnsupportedTransformError("no explicit error constant is known for DE3 (dagger)")
    if scheme.is_indef != (kind == "indef"):
        raise DomainError(f"scheme {scheme.value} is not a {kind} scheme")
    expected = scheme_for(tid, kind)
    if expected is not scheme:
        raise DomainError(f"transform {tid.value} pairs with {expected.value}, not {scheme.value}")


# ---------------------------------------------------------------------------
# general envelope spaces


class EnvelopeSpace(enum.Enum):
    SE = "se"
    DE = "de"


@dataclass(frozen=True)
class GeneralEnvelope:
    """Bounds ``L`` (in the strip) and ``R`` (on the real axis) of a transformed integrand."""

    L: float
    R: float
    alpha: float
    beta: float
    d: float

    def __post_init__(self):
        for name in ("L", "R", "alpha", "beta"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)!r}")
        _check_d(self.d)

    @property
    def mu(self):
        return min(self.alpha, self.beta)

    @property
    def nu(self):
        return max(self.alpha, self.beta)


def envelope_for(tid, params):
    """Envelope ``(L, R, alpha, beta, d)`` that ``f(psi) psi'`` is known to satisfy.

    The DE3 (double dagger) integrand lives in the space with doubled
    exponents ``2 alpha, 2 beta``.
    """
    tid = TransformId(tid)
    check_case(tid, params)
    K, a, b, d = params.K, params.alpha, params.beta, params.d
    mu, nu = params.mu, params.nu
    if tid is TransformId.SE1:
        L, R = 2.0**nu * K / math.cos(d) ** ((nu - mu) / 2), 2.0**nu * K
    elif tid in (TransformId.SE2, TransformId.DE2):
        L = R = K
    elif tid is TransformId.SE3:
        L = 2.0 ** (b / 2) * c_alpha_d(a, d) * K
        R = 2.0 ** ((1.0 - a + abs(1.0 - a)) / 2) * K
    elif tid is TransformId.DE1:
        L = 2.0**nu * K / math.cos(_PI / 2 * math.sin(d)) ** ((nu - mu) / 2)
        R = 2.0**nu * K
    elif tid is TransformId.DE3_DDAGGER:
        L = 2.0 * c_tilde_d(d) ** (1.0 - a) * K
        R = 2.0 * math.exp(_PI / 12) ** (1.0 - a) * K
        return GeneralEnvelope(L=L, R=R, alpha=2.0 * a, beta=2.0 * b, d=d)
    else:
        raise UnsupportedTransformError("no envelope estimate is known for DE3 (dagger)")
    return GeneralEnvelope(L=L, R=R, alpha=a, beta=b, d=d)


def general_envelope_constant(space, kind, env):
    """Constant of the general bound for the given envelope space and formula kind."""
    space = EnvelopeSpace(space)
    L, R, a, b, d = env.L, env.R, env.alpha, env.beta, env.d
    mu, nu = env.mu, env.nu
    if space is EnvelopeSpace.SE:
        if kind == "quad":
            denom = 1.0 - math.exp(-math.sqrt(2.0 * _PI * d * mu))
            return 2.0 / mu * (2.0 * L / (denom * math.cos(d) ** ((a + b) / 2)) + R)
        denom = 1.0 - math.exp(-2.0 * math.sqrt(_PI * d * mu))
        return 2.0 / mu * (
            L / (denom * math.cos(d) ** ((a + b) / 2)) * math.sqrt(_PI / (d * mu)) + 1.1 * R
        )
    cs = math.cos(_PI / 2 * math.sin(d))
    if kind == "quad":
        denom = 1.0 - math.exp(-_PI * mu * math.e / 4)
        return 2.0 / mu * (2.0 * L / (denom * cs ** ((a + b) / 2) * math.cos(d)) + R * math.exp(_PI * nu / 4))
    denom = 1.0 - math.exp(-_PI * mu * math.e / 2)
    return 2.0 / (mu * d) * (
        L / (denom * cs ** ((a + b) / 2) * math.cos(d)) + R * math.exp(_PI * (a + b) / 4)
    )


def _envelope_scheme(space, kind):
    if space is EnvelopeSpace.SE:
        return SchemeId.SE_QUAD if kind == "quad" else SchemeId.SE_INDEF
    return SchemeId.DE_QUAD if kind == "quad" else SchemeId.DE_INDEF


def general_envelope_bound(space, kind, env, n):
    """Error bound at ``n`` for any transformed integrand in the envelope space.

    Parameters
    ----------
    space : {"se", "de"}
    kind : {"quad", "indef"}
    env : GeneralEnvelope
    n : int

    Raises
    ------
    InvalidMeshError
        For the DE space when ``n`` violates the side conditions.
    """
    space = EnvelopeSpace(space)
    if kind not in ("quad", "indef"):
        raise ValueError(f"kind must be 'quad' or 'indef', got {kind!r}")
    scheme = _envelope_scheme(space, kind)
    # the mesh rules depend only on (alpha, beta, d); K and case are placeholders
    params = DecayParams(K=1.0, alpha=env.alpha, beta=env.beta, d=env.d, case=IntervalCase.CASE2)
    if space is EnvelopeSpace.DE:
        try:
            mesh = build_mesh(scheme, params, n)
        except DomainError as exc:
            raise InvalidMeshError(str(exc)) from exc
        report = validate_n(scheme, params, mesh)
        if not report:
            raise InvalidMeshError(f"n={n} violates {', '.join(report.failed)} for the DE envelope bound")
    return general_envelope_constant(space, kind, env) * rate(scheme, env.d, env.mu, n)
