"""Step size and truncation selection for the Sinc formulas."""
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DomainError, UnsupportedTransformError
from .transforms import IntervalCase, TransformId, case_of, x_gamma

__all__ = [
    "DecayParams",
    "Mesh",
    "SchemeId",
    "ValidityReport",
    "build_mesh",
    "scheme_for",
    "validate_n",
]


class SchemeId(enum.Enum):
    SE_QUAD = "se_quad"
    SE_INDEF = "se_indef"
    DE_QUAD = "de_quad"
    DE3_QUAD = "de3_quad"
    DE_INDEF = "de_indef"
    DE3_INDEF = "de3_indef"
    DE3_DAGGER_QUAD = "de3dagger_quad"

    @property
    def is_se(self):
        return self in (SchemeId.SE_QUAD, SchemeId.SE_INDEF)

    @property
    def is_indef(self):
        return self in (SchemeId.SE_INDEF, SchemeId.DE_INDEF, SchemeId.DE3_INDEF)


# DE schemes: h = log(c d n / mu) / n
_DE_LOG_FACTOR = {
    SchemeId.DE_QUAD: 8.0,
    SchemeId.DE3_QUAD: 4.0,
    SchemeId.DE_INDEF: 4.0,
    SchemeId.DE3_INDEF: 2.0,
    SchemeId.DE3_DAGGER_QUAD: 2.0 * math.pi,
}

# (divisor c in n >= nu e / (c d), multiplier m in Mh >= x_{m alpha})
_DE_CONDITIONS = {
    SchemeId.DE_QUAD: (8.0, 0.5),
    SchemeId.DE_INDEF: (4.0, 0.5),
    SchemeId.DE3_QUAD: (4.0, 1.0),
    SchemeId.DE3_INDEF: (2.0, 1.0),
}


@dataclass(frozen=True)
class DecayParams:
    """Decay and analyticity data certified for an integrand.

    Parameters
    ----------
    K : float
        Envelope scale.
    alpha, beta : float
        Decay exponents at the left and right ends.
    d : float
        Half-width of the strip of analyticity, ``0 < d < pi/2``.
    case : IntervalCase
    """

    K: float
    alpha: float
    beta: float
    d: float
    case: IntervalCase

    def __post_init__(self):
        object.__setattr__(self, "case", IntervalCase(self.case))
        for name in ("K", "alpha", "beta", "d"):
            value = float(getattr(self, name))
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be a finite positive number, got {value!r}")
            object.__setattr__(self, name, value)
        if not self.d < math.pi / 2:
            raise DomainError(f"d must lie in (0, pi/2), got {self.d!r}")
        if self.case is IntervalCase.CASE3 and self.alpha > 1:
            raise DomainError(f"case 3 requires alpha <= 1, got {self.alpha!r}")

    @property
    def mu(self):
        return min(self.alpha, self.beta)

    @property
    def nu(self):
        return max(self.alpha, self.beta)


@dataclass(frozen=True)
class Mesh:
    h: float
    M: int
    N: int
    n: int

    @property
    def size(self):
        return self.M + self.N + 1


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of :func:`validate_n`; truthy when every condition holds."""

    valid: bool
    checks: dict = field(default_factory=dict)

    def __bool__(self):
        return self.valid

    @property
    def failed(self):
        return [name for name, (ok, _, _) in self.checks.items() if not ok]


_SCHEMES = {
    ("se", False): SchemeId.SE_QUAD,
    ("se", True): SchemeId.SE_INDEF,
    ("de", False): SchemeId.DE_QUAD,
    ("de", True): SchemeId.DE_INDEF,
}


def scheme_for(tid, kind="quad"):
    """Pick the scheme that pairs with a transformation and a formula kind.

    ``kind`` is ``"quad"`` or ``"indef"``.
    """
    tid = TransformId(tid)
    if kind not in ("quad", "indef"):
        raise ValueError(f"kind must be 'quad' or 'indef', got {kind!r}")
    indef = kind == "indef"
    if tid is TransformId.DE3_DAGGER:
        if indef:
            raise UnsupportedTransformError("indefinite integration is not available with DE3 (dagger)")
        return SchemeId.DE3_DAGGER_QUAD
    if tid is TransformId.DE3_DDAGGER:
        return SchemeId.DE3_INDEF if indef else SchemeId.DE3_QUAD
    return _SCHEMES[("de" if tid.is_de else "se", indef)]


def _step(scheme, params, n):
    mu, d = params.mu, params.d
    if scheme is SchemeId.SE_QUAD:
        return math.sqrt(2.0 * math.pi * d / (mu * n))
    if scheme is SchemeId.SE_INDEF:
        return math.sqrt(math.pi * d / (mu * n))
    arg = _DE_LOG_FACTOR[scheme] * d * n / mu
    if arg <= 1.0:
        raise DomainError(
            f"n={n} too small for {scheme.value}: log({_DE_LOG_FACTOR[scheme]:g} d n / mu) <= 0"
        )
    return math.log(arg) / n


def build_mesh(scheme, params, n):
    """Build the mesh ``(h, M, N)`` for a given scheme and ``n``.

    Parameters
    ----------
    scheme : SchemeId or str
    params : DecayParams
    n : int
        Positive discretisation parameter; ``max(M, N) == n``.

    Returns
    -------
    Mesh
    """
    scheme = SchemeId(scheme)
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    h = _step(scheme, params, n)
    alpha, beta = params.alpha, params.beta

    if scheme is SchemeId.DE3_DAGGER_QUAD:
        return Mesh(h=h, M=n, N=n, n=n)
    if scheme.is_se:
        # exact rational ceiling: alpha * n / beta in floating point can land
        # just above an integer (e.g. alpha == beta) and overshoot by one
        if params.mu == alpha:
            M, N = n, math.ceil(Fraction(alpha) * n / Fraction(beta))
        else:
            M, N = math.ceil(Fraction(beta) * n / Fraction(alpha)), n
    else:
        if params.mu == alpha:
            M, N = n, n - math.floor(math.log(beta / alpha) / h)
        else:
            M, N = n - math.floor(math.log(alpha / beta) / h), n
        # clamp; validate_n rejects such n for certification
        M, N = max(M, 1), max(N, 1)
    return Mesh(h=h, M=M, N=N, n=n)


def validate_n(scheme, params, mesh):
    """Check the side conditions under which the explicit DE bounds are proven.

    SE schemes and DE3 (dagger) carry no conditions and are always valid.
    """
    scheme = SchemeId(scheme)
    if scheme not in _DE_CONDITIONS:
        return ValidityReport(valid=True)
    divisor, factor = _DE_CONDITIONS[scheme]
    n_min = params.nu * math.e / (divisor * params.d)
    x_left = x_gamma(factor * params.alpha)
    x_right = x_gamma(factor * params.beta)
    Mh = mesh.M * mesh.h
    Nh = mesh.N * mesh.h
    checks = {
        "n": (mesh.n >= n_min, mesh.n, n_min),
        "Mh": (Mh >= x_left, Mh, x_left),
        "Nh": (Nh >= x_right, Nh, x_right),
    }
    return ValidityReport(valid=all(ok for ok, _, _ in checks.values()), checks=checks)


def check_case(tid, params):
    """Raise if ``params.case`` does not match the transformation's interval case."""
    expected = case_of(tid)
    if params.case is not expected:
        raise DomainError(
            f"transform {TransformId(tid).value} handles {expected.name}, params declare {params.case.name}"
        )
