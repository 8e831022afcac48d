"""Exact power series for the spinning-bubble axial length.

h'(r, lam) is expanded as sum c_n(r) lam^n with the c_n built from Miller's
recursion for the series of an inverse square root; term-by-term integration
gives H(lam) = sum C_n lam^n with C_n = 2 int_0^1 c_n dr, convergent for
lam < 4. The same C_n also follow from an explicit gamma-function sum, which
provides the independent second path.
"""
from __future__ import annotations

import math
import warnings
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import kernels
from .errors import (
    DivergenceWarning,
    DomainError,
    NonConvergenceError,
    QuadratureError,
    SingularPointError,
)
from .meniscus_series import SeriesEval

LAMBDA_C = 4.0

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 400


def _tables_at(r, n_max):
    if not 0.0 <= r < 1.0:
        raise SingularPointError(
            f"Miller coefficients need 0 <= r < 1 (diverge at r=1); got r={r}"
        )
    t = np.array([math.sqrt(1.0 - r)])
    b, c = kernels.miller_tables(t, n_max)
    return b[:, 0], c[:, 0]


def miller_b_coeffs(r, n_max):
    """Coefficients b_0(r)..b_n_max(r) of (1 - sin^2 theta)^(-1/2) in powers of lam.

    b_0 = 1/sqrt(1-r^2); the rest follow the two-term recursion. Consecutive
    ratios tend to (r^2 + r)/8, so the pointwise series converges for lam < 4.
    """
    return _tables_at(r, n_max)[0]


def c_coeffs(r, n_max):
    """Taylor coefficients c_0(r)..c_n_max(r) of the slope h'(r, lam) in lam."""
    return _tables_at(r, n_max)[1]


# cached (tol, coefficients) of the largest table computed so far
_C_TABLE = {"n_max": -1, "tol": math.inf, "C": np.empty(0)}


def bubble_C_coeffs(n_max, tol=DEFAULT_TOL):
    """Length-series coefficients C_0..C_n_max by singularity-aware quadrature.

    Each c_n inherits an integrable (1-r)^(-1/2) endpoint singularity; the
    substitution r = 1 - t^2 makes the integrand even and analytic in t, and
    Gauss-Legendre node counts are doubled until successive tables agree to
    tol in the relative sense.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    if _C_TABLE["n_max"] >= n_max and _C_TABLE["tol"] <= tol:
        return _C_TABLE["C"][: n_max + 1].copy()

    def table(nodes):
        x, w = leggauss(nodes)
        t = 0.5 * (x + 1.0)
        wt = 0.5 * w * 2.0 * t  # dr = -2t dt folded into the weights
        _, c = kernels.miller_tables(t, n_max)
        return 2.0 * (c @ wt)

    nodes = 256
    prev = table(nodes)
    while nodes <= 1024:
        nodes *= 2
        cur = table(nodes)
        scale = np.maximum(np.abs(cur), 1e-300)
        if float(np.max(np.abs(cur - prev) / scale)) < tol:
            _C_TABLE.update(n_max=n_max, tol=tol, C=cur.copy())
            return cur
        prev = cur
    raise QuadratureError(
        f"C_n quadrature did not reach tol={tol} within 2048 nodes"
    )


def bubble_H_series(lam, n_terms=None, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Partial sum of the bubble length series, H = sum C_n lam^n, with tail estimate.

    The geometric tail uses ratio lam/4. Emits DivergenceWarning for lam >= 4,
    where the tail ratio exceeds one and the flag is never set.
    """
    if lam < 0.0:
        raise DomainError(f"lam must be nonnegative, got {lam}")
    if n_terms is not None and n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    ratio = lam / LAMBDA_C
    if ratio >= 1.0:
        warnings.warn(
            f"series divergent for lam={lam} >= 4", DivergenceWarning, stacklevel=2
        )
        if n_terms is None:
            n_terms = 50
    cap = n_terms if n_terms is not None else max_terms
    C = bubble_C_coeffs(cap)
    total = 0.0
    pw = 1.0
    used = 0
    tail = math.inf
    converged = False
    for n in range(cap):
        total += C[n] * pw
        used = n + 1
        pw *= lam
        if ratio < 1.0:
            tail = abs(C[min(n + 1, cap)] * pw) / (1.0 - ratio)
            if n_terms is None and tail < tol:
                converged = True
                break
    if n_terms is not None:
        converged = ratio < 1.0 and tail < tol
    return SeriesEval(total, tail, used, converged)


@lru_cache(maxsize=64)
def explicit_Cp(p, tail_tolerance=1e-10, m_cap=1 << 20):
    """C_p from the explicit gamma-ratio sum, without the Miller recursion.

    C_p = (1/sqrt(pi)) 8^(-p) sum_{m >= m0} G(m+1/2)G(2m+2)/(G(2m+2-p)G(2+m+p))
    with m0 the smallest integer satisfying 2m+1 >= p. Terms are evaluated
    through log-gamma to avoid overflow. The terms only decay like m^(-3/2)
    (a plain sum to the 10^6 cap would stall near 1e-3), so checkpointed
    partial sums are Richardson-extrapolated in powers of m^(-1/2); the last
    two ladder stages must agree to tail_tolerance relative or
    NonConvergenceError is raised. That stage-difference bound is
    conservative; the final stage is typically another 1-2 orders tighter
    (p = 20 at the default cap: bound ~9e-11, actual error ~2e-12).
    """
    if p < 0:
        raise DomainError("p must be >= 0")
    m0 = max(0, math.ceil((p - 1) / 2.0))
    m_floor = max(256, 8 * p * p, m0 + 64)
    checkpoints = []
    m = int(m_cap)
    while m >= m_floor:
        checkpoints.append(m)
        m //= 4
    if len(checkpoints) < 3:
        raise NonConvergenceError(
            f"m_cap={m_cap} leaves too few extrapolation checkpoints for p={p}"
        )
    checkpoints.reverse()

    sums = []
    acc = kernels.cp_block_sum(p, m0, checkpoints[0])
    sums.append(acc)
    for lo, hi in zip(checkpoints, checkpoints[1:]):
        acc += kernels.cp_block_sum(p, lo, hi)
        sums.append(acc)

    # Richardson ladder: partial-sum error is sum beta_k x^(2k-1), x = M^(-1/2),
    # and x halves between checkpoints (M quadruples)
    arr = sums[::-1]  # index 0 = largest M
    stage_tops = [arr[0]]
    q = 1
    while len(arr) > 1:
        arr = [
            (2.0**q * arr[i] - arr[i + 1]) / (2.0**q - 1.0)
            for i in range(len(arr) - 1)
        ]
        stage_tops.append(arr[0])
        q += 2

    best = stage_tops[-1]
    if abs(best - stage_tops[-2]) > tail_tolerance * max(abs(best), 1e-300):
        raise NonConvergenceError(
            f"tail extrapolation for C_{p} did not stabilize below {tail_tolerance}"
        )
    prefactor = math.exp(-0.5 * math.log(math.pi) - p * math.log(8.0))
    return prefactor * best
