"""Log-singular asymptotic approximants for the axial length.

H_A(lam, N) = sum_{n=0}^{N} A_n (lambda_c - lam)^n + A_L + B_L ln(lambda_c - lam)

A_L and B_L come from the near-critical asymptotics (B_L stored signed:
-1/3 meniscus, -2/sqrt(3) bubble; figure-style quotes give the magnitudes).
The constant is pinned to the asymptotic one, A_0 = 0, and A_1..A_N are set
so the Taylor expansion of H_A about lam = 0 reproduces the first N series
coefficients H_0..H_{N-1}. That makes H_A exact at both ends of [0, lambda_c):
it interpolates the series at the origin and approaches the asymptotic law at
criticality, uniformly accurate in between.

The coefficient solve loses about N*log10(lambda_c) digits to cancellation,
so it runs in mpmath extended precision and is rounded to floats afterwards.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np

from . import asymptotics, bubble_series, meniscus_series, shape_core
from .errors import ConditioningWarning, DomainError

_FORMAT_HEADER = "rotameniscus-approximant 1"


@dataclass(frozen=True)
class Approximant:
    """Evaluable record {lambda_c, A_L, B_L, A_0..A_N}; immutable and shareable."""
    geometry: str
    lambda_c: float
    A_L: float
    B_L: float
    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __call__(self, lam):
        return eval_approximant(self, lam)


def recommended_dps(N, lambda_c):
    """Working precision that keeps the back-solve cancellation harmless."""
    return max(30, 20 + math.ceil(1.6 * N * math.log10(max(lambda_c, 2.0))))


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


def solve_coefficients_mp(series_coeffs, lambda_c, A_L, B_L, N, dps):
    """Solve for A_0..A_N in mpmath precision; returns a list of mpf.

    Matching conditions: the Taylor coefficients of H_A about lam = 0 equal
    series_coeffs[k] for k = 0..N-1, with A_0 = 0 pinned so the lam -> lambda_c
    limit reproduces the asymptotic law exactly.
    """
    if N < 1:
        raise DomainError("approximant order N must be >= 1")
    if len(series_coeffs) < N:
        raise DomainError(f"need series coefficients H_0..H_{N - 1}")
    with mp.workdps(dps):
        lc = _to_mpf(lambda_c)
        AL = _to_mpf(A_L)
        BL = _to_mpf(B_L)
        H = [_to_mpf(series_coeffs[k]) for k in range(N)]
        M = mp.matrix(N, N)
        rhs = mp.matrix(N, 1)
        for n in range(1, N + 1):
            M[0, n - 1] = lc**n
        rhs[0] = H[0] - AL - BL * mp.log(lc)
        for k in range(1, N):
            sgn = mp.mpf(-1) ** k
            for n in range(k, N + 1):
                M[k, n - 1] = sgn * mp.binomial(n, k) * lc ** (n - k)
            rhs[k] = H[k] + BL / (k * lc**k)
        sol = mp.lu_solve(M, rhs)
        return [mp.mpf(0)] + [sol[i] for i in range(N)]


def build_approximant(series_coeffs, lambda_c, A_L, B_L, N, precision=None,
                      geometry="custom"):
    """Construct an N-term approximant from series coefficients and asymptotics.

    ``precision`` overrides the mpmath working digits; when it falls short of
    the recommended value for this N and lambda_c, a ConditioningWarning is
    emitted and the solve proceeds at the requested precision anyway.
    """
    needed = recommended_dps(N, float(lambda_c))
    dps = precision if precision is not None else needed
    if dps < needed:
        warnings.warn(
            f"precision={dps} digits is below the ~{needed} recommended for "
            f"N={N}, lambda_c={float(lambda_c):.3f}; coefficients may lose accuracy",
            ConditioningWarning,
            stacklevel=2,
        )
    A = solve_coefficients_mp(series_coeffs, lambda_c, A_L, B_L, N, dps)
    return Approximant(
        geometry=geometry,
        lambda_c=float(lambda_c),
        A_L=float(A_L),
        B_L=float(B_L),
        coeffs=tuple(float(a) for a in A),
    )


@lru_cache(maxsize=8)
def meniscus_approximant(N=20, precision=None):
    """Approximant for the normal-contact meniscus, built from exact-rational
    series coefficients and the asymptotic constants (A_L = 1.218, B_L = -1/3)."""
    a = meniscus_series.a_coeffs_exact(N)
    b = meniscus_series.b_coeffs_exact(N)
    H = [a[k] * b[k] for k in range(N)]
    return build_approximant(
        H, shape_core.LAMBDA_C_NORMAL, asymptotics.MENISCUS_H0,
        Fraction(-1, 3), N, precision=precision, geometry="meniscus",
    )


@lru_cache(maxsize=8)
def bubble_approximant(N=15, precision=None):
    """Approximant for the spinning bubble (A_L = 3.2332, B_L = -2/sqrt(3))."""
    H = bubble_series.bubble_C_coeffs(max(N - 1, 0))
    return build_approximant(
        H[:N], shape_core.LAMBDA_C_BUBBLE, asymptotics.BUBBLE_CONST,
        asymptotics.BUBBLE_LOG_COEFF, N, precision=precision, geometry="bubble",
    )


def eval_approximant(appr, lam):
    """Evaluate H_A(lam); scalar in, scalar out, arrays pass through.

    Raises DomainError at or beyond lambda_c, where the logarithm leaves the
    real line.
    """
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(lam_arr >= appr.lambda_c) or np.any(lam_arr < 0.0):
        raise DomainError(
            f"approximant defined on [0, lambda_c={appr.lambda_c:.6f}) only"
        )
    d = appr.lambda_c - lam_arr
    poly = np.zeros_like(d)
    for a in reversed(appr.coeffs):
        poly = poly * d + a
    out = poly + appr.A_L + appr.B_L * np.log(d)
    return out if out.ndim else float(out)


def approximant_taylor(coeffs, lambda_c, A_L, B_L, k_max, dps=60):
    """Taylor coefficients of H_A about lam = 0 through order k_max (mpf list).

    Used to verify the construction: with the solver's unrounded coefficients
    the match to the source series is exact to working precision; with the
    stored floats it holds to ~1e-9 relative.
    """
    with mp.workdps(dps):
        lc = _to_mpf(lambda_c)
        AL = _to_mpf(A_L)
        BL = _to_mpf(B_L)
        A = [_to_mpf(a) for a in coeffs]
        out = []
        for k in range(k_max + 1):
            if k == 0:
                v = sum(A[n] * lc**n for n in range(len(A))) + AL + BL * mp.log(lc)
            else:
                v = sum(
                    A[n] * mp.binomial(n, k) * mp.mpf(-1) ** k * lc ** (n - k)
                    for n in range(k, len(A))
                )
                v -= BL / (k * lc**k)
            out.append(v)
        return out


@dataclass(frozen=True)
class ErrorScan:
    """Pointwise |H_A - H_oracle| over a grid, with its maximum."""
    lambdas: np.ndarray
    errors: np.ndarray
    max_error: float
    argmax_lambda: float


def error_scan(appr, oracle, lambda_grid):
    """Scan |H_A - oracle(lam)| over lambda_grid (must stay below lambda_c).

    The oracle is any callable lam -> H, typically the quadrature length.
    Convergence is non-uniform near lambda_c: the largest errors sit there.
    """
    grid = np.asarray(lambda_grid, dtype=float)
    if np.any(grid >= appr.lambda_c) or np.any(grid < 0.0):
        raise DomainError("grid must lie within [0, lambda_c)")
    errs = np.empty(grid.size)
    for i, lam in enumerate(grid):
        errs[i] = abs(eval_approximant(appr, float(lam)) - oracle(float(lam)))
    imax = int(np.argmax(errs))
    return ErrorScan(grid, errs, float(errs[imax]), float(grid[imax]))


# ---------------------------------------------------------------------------
# plain-text serialization


def to_text(appr):
    """Serialize to a plain-text record; floats round-trip via repr."""
    lines = [
        _FORMAT_HEADER,
        f"geometry {appr.geometry}",
        f"N {appr.order}",
        f"lambda_c {appr.lambda_c!r}",
        f"A_L {appr.A_L!r}",
        f"B_L {appr.B_L!r}",
    ]
    lines += [f"A{n} {a!r}" for n, a in enumerate(appr.coeffs)]
    return "\n".join(lines) + "\n"


def from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != _FORMAT_HEADER:
        raise DomainError(f"not an approximant record (expected {_FORMAT_HEADER!r})")
    fields = {}
    for ln in lines[1:]:
        key, _, val = ln.partition(" ")
        fields[key] = val
    order = int(fields["N"])
    coeffs = tuple(float(fields[f"A{n}"]) for n in range(order + 1))
    return Approximant(
        geometry=fields["geometry"],
        lambda_c=float(fields["lambda_c"]),
        A_L=float(fields["A_L"]),
        B_L=float(fields["B_L"]),
        coeffs=coeffs,
    )


def save(appr, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_text(appr))


def load(path):
    with open(path, encoding="ascii") as fh:
        return from_text(fh.read())
