"""Exact power series for the meniscus axial length at normal contact.

H(lam) = sum over odd k of a_k * b_k * lam^k, where the a_k come from the
Taylor expansion of s/sqrt(1-s^2) and b_k = (1/8^k) int_0^1 (r - r^3)^k dr.
The series converges for lam < 12*sqrt(3) with consecutive-term coefficient
ratio tending to 1/432.
"""
from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DivergenceWarning, DomainError
from .shape_core import LAMBDA_C_NORMAL

RATIO_LIMIT = 1.0 / 432.0  # = 1/lambda_c^2

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 5000


class SeriesEval(NamedTuple):
    """Partial sum of a length series with its geometric tail estimate."""
    value: float
    tail_estimate: float
    n_terms: int
    converged: bool


def a_coeffs(n_max):
    """Slope-expansion coefficients a_0..a_n_max; even entries are zero.

    a_1 = 1 and a_n = a_(n-2)*(n-2)/(n-1) for odd n.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    out = np.zeros(n_max + 1)
    a = 1.0
    k = 1
    while k <= n_max:
        out[k] = a
        a = a * k / (k + 1.0)
        k += 2
    return out


def b_coeffs(n_max):
    """Radial-integral coefficients b_0..b_n_max; even entries are zero.

    b_1 = 1/32; successive odd entries follow the three-term rational ratio
    used in series_products.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    out = np.zeros(n_max + 1)
    b = 1.0 / 32.0
    k = 1
    while k <= n_max:
        out[k] = b
        b = b * (k + 2.0) * (k + 1.0) ** 2 / (16.0 * (3.0 * k + 7.0) * (3.0 * k + 5.0) * (3.0 * k + 3.0))
        k += 2
    return out


def a_coeffs_exact(n_max):
    """Exact-rational a coefficients, the certification path for a_coeffs."""
    out = [Fraction(0)] * (n_max + 1)
    a = Fraction(1)
    k = 1
    while k <= n_max:
        out[k] = a
        a = a * k / (k + 1)
        k += 2
    return out


def b_coeffs_exact(n_max):
    """Exact-rational b coefficients, the certification path for b_coeffs."""
    out = [Fraction(0)] * (n_max + 1)
    b = Fraction(1, 32)
    k = 1
    while k <= n_max:
        out[k] = b
        b = b * (k + 2) * (k + 1) ** 2 / (16 * (3 * k + 7) * (3 * k + 5) * (3 * k + 3))
        k += 2
    return out


def series_coefficients(n_max):
    """Length-series coefficients H_0..H_n_max (H_k = a_k*b_k, odd k only).

    Unscaled doubles; valid up to n_max ~ 240 before the 432^-n decay
    underflows. The summation path works with the scaled products instead.
    """
    n_pairs = (n_max + 1) // 2
    prods = kernels.series_products(n_pairs) * (1.0 / 432.0) ** np.arange(n_pairs)
    out = np.zeros(n_max + 1)
    out[1::2] = prods
    return out


def ratio_diagnostic(n):
    """Ratio of consecutive nonzero coefficient products, (a b)_{2n+1}/(a b)_{2n-1}.

    Tends to 1/432 = 1/lambda_c^2, which fixes the radius of convergence.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    g = kernels.series_products(n + 1)
    return float(g[n] / g[n - 1]) / 432.0


def meniscus_H_series(lam, n_terms=None, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Partial sum of the meniscus length series with a truncation estimate.

    With n_terms given, exactly that many nonzero terms are summed. Otherwise
    terms are added until the geometric tail bound (ratio lam^2/432) drops
    below tol, up to max_terms; the result carries a converged flag.

    Emits DivergenceWarning for lam at or beyond 12*sqrt(3).
    """
    if lam < 0.0:
        raise DomainError(f"lam must be nonnegative, got {lam}")
    if n_terms is not None and n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    ratio = lam * lam / 432.0
    if ratio >= 1.0:
        warnings.warn(
            f"series divergent for lam={lam} >= 12*sqrt(3)", DivergenceWarning,
            stacklevel=2,
        )
        if n_terms is None:
            n_terms = 50
    cap = n_terms if n_terms is not None else max_terms
    scaled = kernels.series_products(cap)
    total = 0.0
    pw = lam  # lam * (lam^2/432)^i, matching the 432^i scale of the products
    used = 0
    tail = math.inf
    converged = False
    for i in range(cap):
        total += scaled[i] * pw
        used = i + 1
        pw *= ratio
        if ratio < 1.0:
            tail = abs(scaled[min(i + 1, cap - 1)] * pw) / (1.0 - ratio)
            if n_terms is None and tail < tol:
                converged = True
                break
    if n_terms is not None:
        converged = ratio < 1.0 and tail < tol
    return SeriesEval(total, tail, used, converged)


def check_radius(lam):
    """True when lam is inside the series' radius of convergence."""
    return 0.0 <= lam < LAMBDA_C_NORMAL
