"""Hot numeric kernels.

Each kernel has a plain-numpy implementation (the ``*_numpy`` name) and, when
the numba backend is active, a jit-compiled variant. The public names bind to
whichever path ``ROTAMENISCUS_BACKEND`` selects; ``benchmarks/bench_kernels.py``
times the two against each other.

Radial positions near the singular end r=1 are parametrized as r = 1 - t**2;
kernels that work on that end take t, not r, and form 1 - r**2 = t**2*(2 - t**2)
in factored form. The naive expression loses ~5 significant digits at the
smallest quadrature nodes, which is exactly the accuracy the dual-path
coefficient check needs.
"""
import math

import numpy as np
from scipy.special import gammaln

from ._backend import USE_NUMBA, njit


# ---------------------------------------------------------------------------
# interface slope on a radial grid


def h_prime_grid_numpy(r, cos_alpha, lam):
    """dh/dr = s/sqrt(1-s^2) on an array of radii with |s| < 1."""
    s = r * cos_alpha + (lam / 8.0) * r * (1.0 - r * r)
    return s / np.sqrt(1.0 - s * s)


def endpoint_integrand_numpy(t, lam):
    """2*t*h'(1-t**2) for the zero-contact-angle geometry, cancellation-free.

    With u = t**2 the slope denominator factors as 1 - s^2 = u*q*(1+s) where
    q = (1 - lam/4) + (lam/8)*u*(3 - u) stays exact even at lam = 4 and u -> 0;
    dividing out sqrt(u) leaves a bounded, even, analytic integrand.
    """
    u = t * t
    r = 1.0 - u
    s = r + (lam / 8.0) * r * (1.0 - r * r)
    q = (1.0 - 0.25 * lam) + (lam / 8.0) * u * (3.0 - u)
    return 2.0 * s / np.sqrt(q * (1.0 + s))


# ---------------------------------------------------------------------------
# Miller-recursion coefficient tables


def miller_tables_numpy(t, n_max):
    """Tables b_n(r) and c_n(r) for n = 0..n_max at nodes r = 1 - t**2.

    b_n are the series coefficients of (1 - sin^2(theta))**(-1/2) in powers of
    the rotation parameter; c_0 = A*b_0 and c_n = A*b_n + B*b_(n-1) with
    A = r, B = (r - r^3)/8. Returns (b, c), each of shape (n_max+1, t.size).
    """
    t = np.asarray(t, dtype=np.float64)
    u = t * t
    A = 1.0 - u
    om = u * (2.0 - u)  # 1 - A^2
    B = A * om / 8.0
    b = np.empty((n_max + 1, t.size))
    c = np.empty((n_max + 1, t.size))
    b[0] = 1.0 / np.sqrt(om)
    c[0] = A * b[0]
    if n_max >= 1:
        b[1] = A * B * b[0] / om
        c[1] = A * b[1] + B * b[0]
    for n in range(2, n_max + 1):
        b[n] = ((n - 0.5) * 2.0 * A * B * b[n - 1] + (n - 1.0) * B * B * b[n - 2]) / (n * om)
        c[n] = A * b[n] + B * b[n - 1]
    return b, c


def _miller_tables_loop(t, n_max):
    m = t.size
    b = np.empty((n_max + 1, m))
    c = np.empty((n_max + 1, m))
    for j in range(m):
        u = t[j] * t[j]
        A = 1.0 - u
        om = u * (2.0 - u)
        B = A * om / 8.0
        b0 = 1.0 / math.sqrt(om)
        b[0, j] = b0
        c[0, j] = A * b0
        if n_max >= 1:
            b1 = A * B * b0 / om
            b[1, j] = b1
            c[1, j] = A * b1 + B * b0
            for n in range(2, n_max + 1):
                bn = ((n - 0.5) * 2.0 * A * B * b[n - 1, j] + (n - 1.0) * B * B * b[n - 2, j]) / (n * om)
                b[n, j] = bn
                c[n, j] = A * bn + B * b[n - 1, j]
    return b, c


# ---------------------------------------------------------------------------
# meniscus series coefficient products


def series_products_numpy(n_pairs):
    """Scaled products 432^n * a_(2n+1)*b_(2n+1) of the meniscus length series.

    a_1 = 1, a_(k+2) = a_k*k/(k+1);  b_1 = 1/32 and the odd-index ratio
    b_(k+2)/b_k = (k+2)(k+1)^2 / (16(3k+7)(3k+5)(3k+3)). The raw products
    decay like 432^-n and underflow doubles near n = 120, so the 432^n-scaled
    sequence (which tends to ~1/n) is what gets stored; consumers fold the
    scale into (lam^2/432)^n powers.
    """
    out = np.empty(n_pairs)
    s = 1.0 / 32.0
    k = 1.0
    for i in range(n_pairs):
        out[i] = s
        ratio = (k / (k + 1.0)) * (k + 2.0) * (k + 1.0) ** 2 / (
            16.0 * (3.0 * k + 7.0) * (3.0 * k + 5.0) * (3.0 * k + 3.0))
        s = s * ratio * 432.0
        k += 2.0
    return out


# ---------------------------------------------------------------------------
# gamma-ratio term sums for the explicit bubble coefficients


def cp_block_sum_numpy(p, m_lo, m_hi):
    """Sum of Gamma(m+1/2)Gamma(2m+2) / (Gamma(2m+2-p)Gamma(m+2+p)) over [m_lo, m_hi)."""
    total = 0.0
    block = 1 << 17
    for lo in range(m_lo, m_hi, block):
        m = np.arange(lo, min(lo + block, m_hi), dtype=np.float64)
        lg = gammaln(m + 0.5) + gammaln(2.0 * m + 2.0) - gammaln(2.0 * m + 2.0 - p) - gammaln(m + 2.0 + p)
        total += float(np.sum(np.exp(lg)))
    return total


def _cp_block_sum_loop(p, m_lo, m_hi):
    total = 0.0
    for m in range(m_lo, m_hi):
        lg = (
            math.lgamma(m + 0.5)
            + math.lgamma(2.0 * m + 2.0)
            - math.lgamma(2.0 * m + 2.0 - p)
            - math.lgamma(m + 2.0 + p)
        )
        total += math.exp(lg)
    return total


# ---------------------------------------------------------------------------
# backend binding

if USE_NUMBA:
    h_prime_grid = njit(cache=True)(h_prime_grid_numpy)
    endpoint_integrand = njit(cache=True)(endpoint_integrand_numpy)
    miller_tables = njit(cache=True)(_miller_tables_loop)
    series_products = njit(cache=True)(series_products_numpy)
    cp_block_sum = njit(cache=True)(_cp_block_sum_loop)
else:
    h_prime_grid = h_prime_grid_numpy
    endpoint_integrand = endpoint_integrand_numpy
    miller_tables = miller_tables_numpy
    series_products = series_products_numpy
    cp_block_sum = cp_block_sum_numpy

# loop variants kept importable for the benchmark regardless of backend
miller_tables_loop = _miller_tables_loop
cp_block_sum_loop = _cp_block_sum_loop
