import math

import pytest

from rotameniscus import asymptotics as asy, shape_core as sc
from rotameniscus.errors import DomainError

PI = math.pi
SQRT3 = math.sqrt(3.0)
LC = sc.LAMBDA_C_NORMAL


class TestLawEvaluation:
    def test_meniscus_formula(self):
        # eps = 0.1: -(1/3) ln(0.1) + 1.218
        expect = -math.log(0.1) / 3.0 + 1.218
        assert abs(asy.meniscus_H_asymptotic(LC - 0.1) - expect) < 1e-12
        assert abs(expect - 1.98553) < 1e-4

    def test_bubble_formula(self):
        expect = -(2.0 / SQRT3) * math.log(0.1) + 3.2332
        assert abs(asy.bubble_H_asymptotic(3.9) - expect) < 1e-12
        assert abs(expect - 5.89198) < 1e-4

    def test_ten_radii_bubble(self):
        # lam = 4 - 2.8e-3 sits at H ~ 10
        assert abs(asy.bubble_H_asymptotic(4.0 - 2.8e-3) - 10.0) < 0.03

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            asy.meniscus_H_asymptotic(LC)
        with pytest.raises(DomainError):
            asy.bubble_H_asymptotic(4.5)

    def test_log_coefficients_negative(self):
        assert asy.MENISCUS_LAW.log_coefficient < 0.0
        assert asy.BUBBLE_LAW.log_coefficient < 0.0


class TestMeniscusConstant:
    def test_closed_form_piece(self):
        assert abs(asy.meniscus_H0_closed_form() - 1.5047) < 2e-4

    def test_correction_limit(self):
        # the eps -> 0 limit of the correction integral is about -0.2864
        assert abs(asy.meniscus_peak_correction(1e-6) - (-0.2864)) < 5e-4

    def test_total(self):
        h0 = asy.compute_meniscus_H0()
        assert abs(h0 - 1.218) < 2e-3
        assert abs(h0 - asy.MENISCUS_H0_PRECISE) < 1e-5


class TestBubbleConstant:
    def test_total(self):
        const = asy.compute_bubble_constant()
        assert abs(const - 3.2332) < 2e-3
        assert abs(const - asy.BUBBLE_CONST_PRECISE) < 1e-5

    def test_peak_scaling(self):
        # near criticality 1 - sin^2(theta) ~ 3 eps^2 eta^2 - eps^2 eta / 2
        eps = 1e-3
        lam = 4.0 - eps
        for eta in (-0.25, -0.5, -1.0):
            r = 1.0 + eps * eta
            s = sc.sin_theta(r, 0.0, lam)
            model = 3.0 * eps**2 * eta**2 - eps**2 * eta / 2.0
            assert abs((1.0 - s * s) - model) < 5e-3 * model

    def test_epsilon_sequence_stability(self):
        d4 = asy.bubble_const_closed_form() + asy.bubble_peak_correction(1e-4)
        d5 = asy.bubble_const_closed_form() + asy.bubble_peak_correction(1e-5)
        assert abs(d4 - d5) < 0.01


class TestDivergenceRates:
    @pytest.mark.parametrize("eps", [1e-3, 1e-4])
    def test_meniscus_rate(self, eps):
        h1 = sc.axial_length_quadrature("meniscus", PI / 2, LC - eps)
        h2 = sc.axial_length_quadrature("meniscus", PI / 2, LC - 10.0 * eps)
        rate = (h1 - h2) / math.log(10.0)
        assert abs(rate - 1.0 / 3.0) < 0.01 / 3.0

    @pytest.mark.parametrize("eps", [1e-3, 1e-4])
    def test_bubble_rate(self, eps):
        h1 = sc.axial_length_quadrature("bubble", 0.0, 4.0 - eps)
        h2 = sc.axial_length_quadrature("bubble", 0.0, 4.0 - 10.0 * eps)
        rate = (h1 - h2) / math.log(10.0)
        assert abs(rate - 2.0 / SQRT3) < 0.01 * 2.0 / SQRT3

    def test_asymptote_error_shrinks(self):
        # quoted-constant laws floor out at the constant's rounding (~2.6e-4),
        # so the vanishing-residual check uses the converged constant
        law = asy.AsymptoticLaw("meniscus", LC, asy.MENISCUS_LOG_COEFF,
                                asy.MENISCUS_H0_PRECISE)
        diffs = []
        for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5):
            hq = sc.axial_length_quadrature("meniscus", PI / 2, LC - eps)
            diffs.append(abs(hq - law(LC - eps)))
        assert all(b < a for a, b in zip(diffs, diffs[1:]))
        assert diffs[-1] < 1e-5

    def test_bubble_asymptote_error_shrinks(self):
        law = asy.AsymptoticLaw("bubble", 4.0, asy.BUBBLE_LOG_COEFF,
                                asy.BUBBLE_CONST_PRECISE)
        diffs = []
        for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5):
            hq = sc.axial_length_quadrature("bubble", 0.0, 4.0 - eps)
            diffs.append(abs(hq - law(4.0 - eps)))
        assert all(b < a for a, b in zip(diffs, diffs[1:]))
        assert diffs[-1] < 2e-5  # bubble remainder decays like eps*ln(1/eps)
