"""Equilibrium shapes and axial lengths of rotating fluid interfaces in zero
gravity: exact series solutions, near-critical asymptotics, uniformly accurate
log-singular approximants, and spinning-bubble tensiometry."""

from ._backend import backend_name
from .approximant import (
    Approximant,
    build_approximant,
    bubble_approximant,
    error_scan,
    eval_approximant,
    meniscus_approximant,
)
from .asymptotics import (
    BUBBLE_CONST,
    BUBBLE_LAW,
    MENISCUS_H0,
    MENISCUS_LAW,
    bubble_H_asymptotic,
    compute_bubble_constant,
    compute_meniscus_H0,
    meniscus_H_asymptotic,
)
from .bubble_series import bubble_C_coeffs, bubble_H_series, c_coeffs, explicit_Cp, miller_b_coeffs
from .errors import (
    ConditioningWarning,
    DivergenceWarning,
    DomainError,
    ExtrapolationError,
    NonConvergenceError,
    QuadratureError,
    RotameniscusError,
    SingularPointError,
    SupercriticalError,
)
from .meniscus_series import (
    a_coeffs,
    b_coeffs,
    meniscus_H_series,
    ratio_diagnostic,
)
from .shape_core import (
    CriticalPoint,
    GridSpec,
    LAMBDA_C_BUBBLE,
    LAMBDA_C_NORMAL,
    ShapeProfile,
    axial_length_quadrature,
    critical_params,
    h_prime,
    inflection_radius,
    lambda_min,
    master_rescale,
    max_sin_theta,
    profile,
    sin_theta,
)
from .tensiometer import (
    TensiometerReading,
    TensiometerResult,
    analyze,
    bubble_volume,
    delta_percent,
    delta_percent_asymptotic,
    lambda_from_H,
    lambda_from_H_asymptotic,
    sigma_assuming_critical,
    sigma_corrected,
    volume_deficit,
)

__version__ = "0.1.0"

__all__ = [
    "Approximant",
    "BUBBLE_CONST",
    "BUBBLE_LAW",
    "ConditioningWarning",
    "CriticalPoint",
    "DivergenceWarning",
    "DomainError",
    "ExtrapolationError",
    "GridSpec",
    "LAMBDA_C_BUBBLE",
    "LAMBDA_C_NORMAL",
    "MENISCUS_H0",
    "MENISCUS_LAW",
    "NonConvergenceError",
    "QuadratureError",
    "RotameniscusError",
    "ShapeProfile",
    "SingularPointError",
    "SupercriticalError",
    "TensiometerReading",
    "TensiometerResult",
    "a_coeffs",
    "analyze",
    "axial_length_quadrature",
    "b_coeffs",
    "backend_name",
    "bubble_C_coeffs",
    "bubble_H_asymptotic",
    "bubble_H_series",
    "bubble_approximant",
    "bubble_volume",
    "build_approximant",
    "c_coeffs",
    "compute_bubble_constant",
    "compute_meniscus_H0",
    "critical_params",
    "delta_percent",
    "delta_percent_asymptotic",
    "error_scan",
    "eval_approximant",
    "explicit_Cp",
    "h_prime",
    "inflection_radius",
    "lambda_from_H",
    "lambda_from_H_asymptotic",
    "lambda_min",
    "master_rescale",
    "max_sin_theta",
    "meniscus_H_asymptotic",
    "meniscus_H_series",
    "meniscus_approximant",
    "miller_b_coeffs",
    "profile",
    "ratio_diagnostic",
    "sigma_assuming_critical",
    "sigma_corrected",
    "sin_theta",
    "volume_deficit",
]
