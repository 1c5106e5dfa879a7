"""Sinc quadrature and Sinc indefinite integration on infinite and
semi-infinite intervals, with single- and double-exponential variable
transformations and explicit a-priori error bounds.
"""
from .auto_tol import ToleranceRequest, choose_n, integrate_to_tol
from .bounds import (
    BoundCertificate,
    EnvelopeSpace,
    GeneralEnvelope,
    c_alpha_d,
    c_tilde_d,
    certificate,
    envelope_for,
    general_envelope_bound,
    indef_certificate,
    quad_certificate,
    rate_eps_de,
)
from .engine import (
    EnvelopeReport,
    QuadResult,
    basis_j,
    envelope_check,
    integrate,
    integrate_indef,
    sinc_indef,
    sinc_quad,
)
from .estimator import SincIndefiniteIntegral, SincQuadrature
from .exceptions import (
    DomainError,
    InvalidMeshError,
    NonFiniteSampleError,
    SincError,
    ToleranceUnreachableError,
    UnsupportedTransformError,
)
from .mesh import DecayParams, Mesh, SchemeId, ValidityReport, build_mesh, scheme_for, validate_n
from .special import arcsinh, si
from .transforms import IntervalCase, TransformId, psi, psi_inverse, psi_prime, x_gamma

__version__ = "0.1.0"
