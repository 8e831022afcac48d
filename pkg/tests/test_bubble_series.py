import math

import mpmath as mp
import numpy as np
import pytest

from rotameniscus import bubble_series as bs, shape_core as sc
from rotameniscus.errors import (
    DivergenceWarning,
    DomainError,
    NonConvergenceError,
    QuadratureError,
    SingularPointError,
)


def _closed_b0(r):
    return 1.0 / math.sqrt(1.0 - r * r)


def _closed_b1(r):
    B = (r - r**3) / 8.0
    return r * B / (1.0 - r * r) ** 1.5


class TestMillerCoeffs:
    @pytest.mark.parametrize("r", [0.2, 0.5, 0.8])
    def test_b0_b1_closed_forms(self, r):
        b = bs.miller_b_coeffs(r, 3)
        assert abs(b[0] - _closed_b0(r)) < 1e-14 * _closed_b0(r)
        # b1 from the recursion, A*B/(1-A^2)^(3/2); the bare printed base case
        # A*B/sqrt(1-A^2) is inconsistent with the recursion and the slope Taylor
        assert abs(b[1] - _closed_b1(r)) < 1e-14

    @pytest.mark.parametrize("r", [0.2, 0.5, 0.8])
    def test_c0_c1_closed_forms(self, r):
        c = bs.c_coeffs(r, 3)
        B = (r - r**3) / 8.0
        assert abs(c[0] - r / math.sqrt(1.0 - r * r)) < 1e-14
        assert abs(c[1] - B / (1.0 - r * r) ** 1.5) < 1e-14

    @pytest.mark.parametrize("r", [0.2, 0.5, 0.8])
    def test_cn_against_slope_taylor(self, r):
        # oracle: direct Taylor expansion of h'(r, lam) in lam at lam = 0
        with mp.workdps(40):
            def hp(lam):
                s = r + lam / 8 * (r - r**3)
                return s / mp.sqrt(1 - s * s)

            ref = mp.taylor(hp, 0, 6)
        c = bs.c_coeffs(r, 6)
        for n in range(7):
            assert abs(c[n] - float(ref[n])) < 1e-8 * max(1.0, abs(float(ref[n])))

    @pytest.mark.parametrize("r", [0.25, 0.5, 0.75, 0.9])
    def test_ratio_limit(self, r):
        b = bs.miller_b_coeffs(r, 200)
        q_inf = (r * r + r) / 8.0
        assert abs(b[200] / b[199] - q_inf) < 1e-3

    def test_wall_singularity(self):
        with pytest.raises(SingularPointError):
            bs.miller_b_coeffs(1.0, 5)


class TestCCoefficients:
    def test_c0_and_c1(self):
        C = bs.bubble_C_coeffs(1)
        assert abs(C[0] - 2.0) < 1e-12
        assert abs(C[1] - 0.25) < 1e-12

    def test_sign_and_decay(self):
        C = bs.bubble_C_coeffs(20)
        assert np.all(C > 0.0)
        assert C[20] < C[10] < C[1]

    def test_unreachable_tolerance_rejected(self):
        with pytest.raises(QuadratureError):
            bs.bubble_C_coeffs(5, tol=1e-18)

    def test_fixed_zero_terms_rejected(self):
        with pytest.raises(DomainError):
            bs.bubble_H_series(1.0, n_terms=0)


class TestBubbleSeries:
    def test_static_bubble(self):
        res = bs.bubble_H_series(0.0)
        assert abs(res.value - 2.0) < 1e-12
        assert res.converged

    def test_small_lambda_linear_term(self):
        res = bs.bubble_H_series(1e-5, tol=1e-14)
        assert abs(res.value - (2.0 + 0.25e-5)) < 1e-10

    @pytest.mark.parametrize("lam", [1.0, 2.0, 3.5])
    def test_matches_quadrature(self, lam):
        res = bs.bubble_H_series(lam, tol=1e-9)
        H = sc.axial_length_quadrature("bubble", 0.0, lam)
        assert res.converged
        assert abs(res.value - H) < 1e-6

    def test_slow_convergence_near_critical(self):
        s100 = bs.bubble_H_series(3.99, n_terms=100).value
        s200 = bs.bubble_H_series(3.99, n_terms=200).value
        s400 = bs.bubble_H_series(3.99, n_terms=400).value
        assert abs(s400 - s200) < abs(s200 - s100)

    def test_beyond_radius_warns_and_flags(self):
        with pytest.warns(DivergenceWarning):
            res = bs.bubble_H_series(4.01)
        assert not res.converged
        assert math.isinf(res.tail_estimate)

    def test_negative_lambda_rejected(self):
        with pytest.raises(DomainError):
            bs.bubble_H_series(-0.5)


class TestExplicitCp:
    def test_c0_closed_value(self):
        assert abs(bs.explicit_Cp(0) - 2.0) < 1e-12

    def test_c1(self):
        assert abs(bs.explicit_Cp(1) - 0.25) < 1e-12

    @pytest.mark.parametrize("p", [0, 3, 7, 12, 20])
    def test_dual_path_agreement(self, p):
        C = bs.bubble_C_coeffs(20)
        e = bs.explicit_Cp(p)
        assert abs(e - C[p]) < 1e-10 * abs(C[p])

    def test_negative_p_rejected(self):
        with pytest.raises(DomainError):
            bs.explicit_Cp(-1)

    def test_too_small_cap_rejected(self):
        # large p pushes the extrapolation floor past a tiny cap
        with pytest.raises(NonConvergenceError):
            bs.explicit_Cp(30, m_cap=1 << 14)

    def test_lowest_m_rule(self):
        # odd p: m0 = (p-1)/2; even p: smallest integer above (p-1)/2
        assert max(0, math.ceil((3 - 1) / 2.0)) == 1
        assert max(0, math.ceil((4 - 1) / 2.0)) == 2
        assert max(0, math.ceil((0 - 1) / 2.0)) == 0
