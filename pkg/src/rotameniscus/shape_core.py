"""Interface slope equation, critical parameters, shape profiles, and the
quadrature oracle for the axial length.

Geometry conventions: a meniscus spans the container cross-section and meets
the wall at contact angle alpha (radians); a bubble is the alpha = 0 case with
equatorial symmetry, so its total length doubles the half-shape integral.
All lengths are scaled on the container radius (meniscus) or the maximum
bubble radius (bubble); ``lam`` is the rotational Bond number rho*omega^2*d^3/sigma.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad, simpson

from . import kernels
from .errors import (
    DomainError,
    QuadratureError,
    SingularPointError,
    SupercriticalError,
)

SQRT3 = math.sqrt(3.0)
LAMBDA_C_NORMAL = 12.0 * SQRT3  # critical rotation number at normal contact
LAMBDA_C_BUBBLE = 4.0

DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-12

# below this distance from critical, the analytic peak profile is subtracted
# and integrated in closed form so the oracle stays accurate to eps ~ 1e-6
_PEAK_SPLIT_EPS = 1.0

GEOMETRIES = ("meniscus", "bubble")


class CriticalPoint(NamedTuple):
    lambda_c: float
    r_c: float


def _check_alpha(alpha):
    if not 0.0 <= alpha <= math.pi:
        raise DomainError(f"contact angle must lie in [0, pi], got {alpha}")


def _check_geometry(geometry, alpha):
    if geometry not in GEOMETRIES:
        raise DomainError(f"geometry must be one of {GEOMETRIES}, got {geometry!r}")
    if geometry == "bubble" and alpha != 0.0:
        raise DomainError("bubble geometry requires alpha = 0")


def sin_theta(r, alpha, lam, strict=False):
    """Sine of the interface slope angle: r*cos(alpha) + (lam/8)*r*(1 - r^2).

    Accepts scalar or array r. With strict=True, raises SupercriticalError
    if the result exceeds 1 in magnitude anywhere, which happens only for
    lam beyond the critical value.
    """
    r = np.asarray(r, dtype=float)
    s = r * math.cos(alpha) + (lam / 8.0) * r * (1.0 - r * r)
    if strict and np.any(np.abs(s) > 1.0 + 1e-12):
        raise SupercriticalError(
            f"|sin(theta)| exceeds 1 (alpha={alpha}, lam={lam}); no steady shape"
        )
    return s if s.ndim else float(s)


def critical_params(alpha) -> CriticalPoint:
    """Critical rotation number and vertical-slope radius for a contact angle.

    r_c = 1/(2 cos((pi - alpha)/3)) and lambda_c = 4/r_c^3, so the product
    lambda_c * r_c^3 = 4 holds exactly.
    """
    _check_alpha(alpha)
    r_c = 1.0 / (2.0 * math.cos((math.pi - alpha) / 3.0))
    return CriticalPoint(4.0 / r_c**3, r_c)


def lambda_min(alpha):
    """Smallest rotation number with an interior slope maximum: 4*cos(alpha)."""
    _check_alpha(alpha)
    return 4.0 * math.cos(alpha)


def inflection_radius(alpha, lam):
    """Radius of the interior slope-angle maximum, sqrt((1 + (8/lam) cos(alpha))/3).

    Defined for lam >= lambda_min(alpha); at equality the maximum sits at the
    wall r = 1, and at lam = lambda_c it coincides with r_c.
    """
    _check_alpha(alpha)
    lmin = lambda_min(alpha)
    if lam < lmin:
        raise DomainError(
            f"no interior stationary slope for lam={lam} < lambda_min={lmin}"
        )
    return math.sqrt((1.0 + (8.0 / lam) * math.cos(alpha)) / 3.0)


def max_sin_theta(alpha, lam):
    """Maximum of sin(theta) over the radius, evaluated at the inflection radius.

    Direct evaluation of the slope equation at inflection_radius(alpha, lam);
    equals 1 exactly when lam reaches the critical value.
    """
    r0 = inflection_radius(alpha, lam)
    return float(sin_theta(r0, alpha, lam))


def h_prime(r, alpha, lam):
    """Interface slope dh/dr = s/sqrt(1 - s^2) at a single radius.

    At r = 1 with alpha = 0 the slope is vertical for every lam; returns +inf
    there. An interior point with s = 1 (which occurs only at lam = lambda_c)
    raises SingularPointError; |s| > 1 means a supercritical state.
    """
    s = float(sin_theta(r, alpha, lam))
    if abs(s) < 1.0 - 1e-15:
        return s / math.sqrt(1.0 - s * s)
    if abs(s) <= 1.0 + 1e-12:
        if r == 1.0 and alpha == 0.0:
            return math.inf
        raise SingularPointError(
            f"slope singular at r={r} (alpha={alpha}, lam={lam})"
        )
    raise SupercriticalError(
        f"|sin(theta)|={abs(s):.6f} > 1 at r={r}; lam={lam} is supercritical"
    )


def master_rescale(alpha):
    """Wall radius r_w on the normal-contact critical master shape, plus the
    rescaled critical curve.

    r_w = (2/sqrt(3)) cos((pi - alpha)/3) is where the master shape's slope
    angle equals pi/2 - alpha. Returns (r_w, f) with f(r_star) the critical
    sin(theta) profile for contact angle alpha, i.e. the master curve sampled
    at r = r_w * r_star.
    """
    _check_alpha(alpha)
    r_w = (2.0 / SQRT3) * math.cos((math.pi - alpha) / 3.0)

    def rescaled(r_star):
        return sin_theta(np.asarray(r_star) * r_w, math.pi / 2.0, LAMBDA_C_NORMAL)

    return r_w, rescaled


# ---------------------------------------------------------------------------
# quadrature oracle


def _quad(f, a, b, rel_tol, abs_tol, points=None, limit=300):
    res = quad(f, a, b, epsabs=abs_tol, epsrel=rel_tol, points=points,
               limit=limit, full_output=1)
    y, abserr = res[0], res[1]
    if len(res) > 3:
        # quadpack flagged a problem; tolerate it only if the reported error
        # is still tight (roundoff-limited convergence near machine precision)
        if abserr > max(1e3 * abs_tol, 1e3 * rel_tol * abs(y), 1e-9):
            msg = res[3].strip().splitlines()[0]
            raise QuadratureError(f"{msg} (abserr={abserr:.3e})")
    return y


def _peak_coefficients(alpha):
    """Local model 1 - sin^2(theta) ~ a*eps + b*(r - r_c)^2 near criticality."""
    lc, rc = critical_params(alpha)
    a = (rc - rc**3) / 4.0
    b = 3.0 / rc**2
    return lc, rc, a, b


def _meniscus_split(alpha, lam, rel_tol, abs_tol):
    """Axial length pieces for a meniscus with alpha > 0.

    Returns (closed, remainder): the closed-form integral of the near-critical
    peak profile 1/sqrt(a*eps + b*(r-r_c)^2) plus the quadrature of the
    bounded difference h' - peak. Valid for any subcritical lam; essential
    for eps = lambda_c - lam down to ~1e-6.
    """
    lc, rc, a, b = _peak_coefficients(alpha)
    eps = lc - lam
    c2 = a * eps / b
    c = math.sqrt(c2)
    sqrt_b = math.sqrt(b)
    closed = (math.asinh((1.0 - rc) / c) + math.asinh(rc / c)) / sqrt_b
    ca = math.cos(alpha)

    def remainder(r):
        s = r * ca + (lam / 8.0) * r * (1.0 - r * r)
        return s / math.sqrt(1.0 - s * s) - 1.0 / (sqrt_b * math.sqrt(c2 + (r - rc) ** 2))

    rem = _quad(remainder, 0.0, 1.0, rel_tol, abs_tol, points=[rc])
    return closed, rem


def _endpoint_split(lam, rel_tol, abs_tol):
    """Half-length pieces for the alpha = 0 geometry, integrated in t = sqrt(1-r).

    The substitution r = 1 - t^2 removes the (1-r)^(-1/2) endpoint singularity.
    Near lam = 4 the integrand develops a peak 2/sqrt(eps/2 + 3 t^2) at t = 0,
    which is subtracted and integrated in closed form.
    """
    eps = 4.0 - lam

    def f(t):
        return float(kernels.endpoint_integrand(t, lam))

    if eps <= _PEAK_SPLIT_EPS:
        closed = (2.0 / SQRT3) * math.asinh(math.sqrt(6.0 / eps))

        def remainder(t):
            return f(t) - 2.0 / math.sqrt(eps / 2.0 + 3.0 * t * t)

        rem = _quad(remainder, 0.0, 1.0, rel_tol, abs_tol,
                    points=[math.sqrt(eps / 6.0)])
        return closed, rem
    return 0.0, _quad(f, 0.0, 1.0, rel_tol, abs_tol)


def axial_length_quadrature(geometry, alpha, lam, *, rel_tol=DEFAULT_REL_TOL,
                            abs_tol=DEFAULT_ABS_TOL):
    """Axial interface length H by singularity-aware adaptive quadrature.

    H = int_0^1 h' dr for a meniscus and twice that for a bubble. This is the
    numerical oracle every series and approximant is validated against.
    """
    _check_geometry(geometry, alpha)
    _check_alpha(alpha)
    if lam < 0.0:
        raise DomainError(f"lam must be nonnegative, got {lam}")
    lc, _ = critical_params(alpha)
    # the margin absorbs the ulp mismatch between 4/r_c^3 and closed forms
    # like 12*sqrt(3), so the exact critical value is always rejected
    if lam >= lc - 1e-12:
        raise SupercriticalError(f"lam={lam} >= lambda_c={lc:.6f}")
    if geometry == "bubble":
        closed, rem = _endpoint_split(lam, rel_tol, abs_tol)
        return 2.0 * (closed + rem)
    if alpha == 0.0:
        closed, rem = _endpoint_split(lam, rel_tol, abs_tol)
        return closed + rem
    closed, rem = _meniscus_split(alpha, lam, rel_tol, abs_tol)
    return closed + rem


# ---------------------------------------------------------------------------
# sampled profiles


@dataclass(frozen=True)
class GridSpec:
    """Node count and clustering of a sampled profile."""
    n: int = 1001
    clustering: str = "cosine"  # "cosine" clusters nodes toward the ends

    def __post_init__(self):
        if self.n < 3:
            raise DomainError("grid needs at least 3 nodes")
        if self.clustering not in ("cosine", "uniform"):
            raise DomainError(f"unknown clustering {self.clustering!r}")

    def nodes(self):
        xi = np.linspace(0.0, 1.0, self.n)
        if self.clustering == "cosine":
            return 0.5 * (1.0 - np.cos(math.pi * xi))
        return xi


@dataclass(frozen=True)
class ShapeProfile:
    """Sampled interface curve (r, h, sin_theta) with its defining parameters.

    For a bubble only the lower half is stored (h(0) = 0 up to the equator);
    ``full_curve`` mirrors it about the equatorial plane. Arrays are read-only.
    """
    geometry: str
    alpha: float
    lam: float
    r: np.ndarray
    h: np.ndarray
    sin_theta: np.ndarray
    grid: GridSpec

    def __post_init__(self):
        for arr in (self.r, self.h, self.sin_theta):
            arr.setflags(write=False)

    @property
    def axial_length(self):
        if self.geometry == "bubble":
            return 2.0 * float(self.h[-1])
        return float(self.h[-1] - self.h[0])

    def volume_residual(self):
        """Discrete volume-constraint residual int h r dr over the samples."""
        return float(simpson(self.h * self.r, x=self.r))

    def full_curve(self):
        """(r, h, sin_theta) arrays; bubbles are closed by the mirrored half."""
        if self.geometry != "bubble":
            return self.r, self.h, self.sin_theta
        r = np.concatenate([self.r, self.r[-2::-1]])
        h = np.concatenate([self.h, (2.0 * self.h[-1] - self.h)[-2::-1]])
        st = np.concatenate([self.sin_theta, -self.sin_theta[-2::-1]])
        return r, h, st


_GL_ORDER = 16
_GL_X, _GL_W = leggauss(_GL_ORDER)


def _panel_cumulative(f, x):
    """Cumulative integral of f along sorted nodes x by per-panel Gauss-Legendre."""
    a = x[:-1]
    half = 0.5 * (x[1:] - a)
    mid = a + half
    pts = mid[:, None] + half[:, None] * _GL_X[None, :]
    vals = f(pts.ravel()).reshape(pts.shape)
    panels = half * (vals @ _GL_W)
    out = np.empty(x.size)
    out[0] = 0.0
    np.cumsum(panels, out=out[1:])
    return out, panels


def profile(geometry, alpha, lam, grid=None) -> ShapeProfile:
    """Sampled interface shape z = h(r).

    The meniscus height is shifted so the volume constraint int h r dr = 0
    holds; the bubble is anchored at h(0) = 0. Raises SupercriticalError for
    lam at or beyond the critical value.
    """
    _check_geometry(geometry, alpha)
    _check_alpha(alpha)
    grid = grid or GridSpec()
    lc, _ = critical_params(alpha)
    if not 0.0 <= lam < lc - 1e-12:
        raise SupercriticalError(f"lam={lam} outside [0, lambda_c={lc:.6f})")

    if geometry == "bubble" or alpha == 0.0:
        # vertical slope at the r=1 end: integrate in t = sqrt(1-r), where the
        # integrand F(t) = 2t h'(1-t^2) is bounded
        t = np.sqrt(1.0 - grid.nodes())  # descending 1 -> 0, r ascending
        r = 1.0 - t * t

        def f(tv):
            return kernels.endpoint_integrand(tv, lam)

        # h(r_i) = int_{t_i}^{1} F dt; cumulative along descending t is its negative
        cum, _ = _panel_cumulative(f, t)
        h = -cum
        if geometry == "meniscus":
            # volume shift c = int h' r^2 dr - h(1) makes int h r dr = 0
            t_asc = t[::-1]

            def f2(tv):
                rv = 1.0 - tv * tv
                return kernels.endpoint_integrand(tv, lam) * rv * rv

            int_r2 = float(np.sum(_panel_cumulative(f2, t_asc)[1]))
            h = h + (int_r2 - h[-1])
        st = np.asarray(sin_theta(r, 0.0, lam))
        return ShapeProfile(geometry, alpha, lam, r, h, st, grid)

    r = grid.nodes()
    ca = math.cos(alpha)

    def f(rv):
        return kernels.h_prime_grid(rv, ca, lam)

    h, _ = _panel_cumulative(f, r)

    # shift so int h r dr = 0, via int h r dr = h(1)/2 - (1/2) int h' r^2 dr
    def f2(rv):
        return kernels.h_prime_grid(rv, ca, lam) * rv * rv

    int_r2 = float(np.sum(_panel_cumulative(f2, r)[1]))
    h = h + (int_r2 - h[-1])
    st = np.asarray(sin_theta(r, alpha, lam))
    return ShapeProfile(geometry, alpha, lam, r, h, st, grid)
