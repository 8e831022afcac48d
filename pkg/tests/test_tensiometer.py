import math

import numpy as np
import pytest

from rotameniscus import approximant as ap
from rotameniscus import shape_core as sc
from rotameniscus import tensiometer as tm
from rotameniscus.errors import DomainError

SQRT3 = math.sqrt(3.0)


class TestVolume:
    def test_sphere(self):
        assert abs(tm.bubble_volume(0.0) - 4.0 * math.pi / 3.0) < 1e-10

    def test_deficit_limit_is_4pi_over_3(self):
        # pi H - V tends to 4 pi / 3 = 4.18879... (quoted as 4.18)
        assert abs(tm.volume_deficit(4.0) - 4.0 * math.pi / 3.0) < 1e-9

    def test_near_critical_linear_law(self):
        lam = 3.99
        H = sc.axial_length_quadrature("bubble", 0.0, lam)
        V = tm.bubble_volume(lam)
        assert abs(V - (math.pi * H - 4.18)) < 0.05

    def test_profile_formula_equivalence(self):
        # V = 2[pi h(1) - 2 pi int h r dr] evaluated on a sampled profile
        lam = 3.0
        prof = sc.profile("bubble", 0.0, lam, sc.GridSpec(n=4001))
        from scipy.integrate import simpson

        v_prof = 2.0 * (math.pi * prof.h[-1]
                        - 2.0 * math.pi * simpson(prof.h * prof.r, x=prof.r))
        assert abs(v_prof - tm.bubble_volume(lam)) < 1e-5

    def test_supercritical_rejected(self):
        with pytest.raises(DomainError):
            tm.volume_deficit(4.5)

    def test_deficit_mean_over_long_bubbles(self):
        # V - pi H settles toward -4pi/3; averaged over H in [8, 12] it is
        # within 0.05 of the quoted -4.18 already
        Hs = np.linspace(8.0, 12.0, 5)
        lams = [tm.lambda_from_H(float(h)) for h in Hs]
        resid = [tm.bubble_volume(l) - math.pi * sc.axial_length_quadrature("bubble", 0.0, l)
                 for l in lams]
        assert abs(float(np.mean(resid)) + 4.18) < 0.05


class TestInversion:
    def test_spherical(self):
        assert tm.lambda_from_H(2.0) == 0.0

    def test_H4(self):
        # exact inversion of H(lam); the asymptotic inverse gives 3.485
        lam = tm.lambda_from_H(4.0)
        assert abs(lam - 3.4264) < 1e-3
        assert abs(tm.lambda_from_H_asymptotic(4.0) - 3.4852) < 1e-3

    def test_H10(self):
        lam = tm.lambda_from_H(10.0)
        assert abs((4.0 - lam) - 2.8e-3) < 0.2e-3

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            tm.lambda_from_H(1.0)

    @pytest.mark.parametrize("lam", [0.5, 2.0, 3.5, 3.99])
    def test_round_trip(self, lam):
        H = ap.eval_approximant(ap.bubble_approximant(15), lam)
        assert abs(tm.lambda_from_H(H) - lam) < 1e-8

    def test_monotone(self):
        Hs = np.linspace(2.0, 12.0, 21)
        lams = [tm.lambda_from_H(float(h)) for h in Hs]
        assert all(b > a for a, b in zip(lams, lams[1:]))

    def test_near_critical_refinement_path(self):
        # eps < 1e-4 goes through the quadrature refinement
        lam = tm.lambda_from_H(16.0)
        assert 0.0 < 4.0 - lam < 1e-4
        H_back = sc.axial_length_quadrature("bubble", 0.0, lam)
        assert abs(H_back - 16.0) < 1e-8


class TestSigma:
    def test_unit_reading(self):
        reading = tm.TensiometerReading(1.0, 1.0, 1.0, 4.0)
        assert tm.sigma_assuming_critical(reading) == 0.25

    def test_si_reading(self):
        reading = tm.TensiometerReading(100.0, 1e-3, 1e3, 6.0)
        assert abs(tm.sigma_assuming_critical(reading) - 2.5e-3) < 1e-18

    def test_ratio_identity(self):
        reading = tm.TensiometerReading(50.0, 2e-3, 900.0, 5.0)
        res = tm.analyze(reading)
        ratio = res.sigma_assumed_critical / res.sigma_corrected
        assert abs(ratio - res.lambda_inferred / 4.0) < 1e-12

    def test_flat_limit_guard(self):
        reading = tm.TensiometerReading(1.0, 1.0, 1.0, 2.0)
        with pytest.raises(DomainError):
            tm.sigma_corrected(reading)

    def test_reading_validation(self):
        with pytest.raises(DomainError):
            tm.TensiometerReading(0.0, 1.0, 1.0, 4.0)
        with pytest.raises(DomainError):
            tm.TensiometerReading(1.0, 1.0, 1.0, 1.5)


class TestDelta:
    def test_exact_values(self):
        assert abs(tm.delta_percent(4.0) - 14.34) < 0.05
        assert abs(tm.delta_percent(10.0) - 0.0713) < 1e-3

    def test_asymptotic_law(self):
        # 411.13 exp(-(sqrt3/2) H): 12.87 at H=4, 0.0713 at H=10
        assert abs(tm.delta_percent_asymptotic(4.0) - 12.87) < 0.01
        assert abs(tm.delta_percent_asymptotic(10.0) - 0.0713) < 1e-3

    def test_prefactor_rederivation(self):
        assert abs(tm.derived_delta_prefactor() - tm.DELTA_PREFACTOR) < 0.5

    def test_monotone_decreasing(self):
        ds = [tm.delta_percent(float(h)) for h in np.linspace(2.5, 12.0, 15)]
        assert all(b < a for a, b in zip(ds, ds[1:]))

    @pytest.mark.parametrize("H", [8.0, 10.0, 12.0])
    def test_asymptotic_matches_exact_for_long_bubbles(self, H):
        rel = abs(tm.delta_percent_asymptotic(H) - tm.delta_percent(H)) / tm.delta_percent(H)
        assert rel < 0.10

    def test_asymptotic_error_shrinks_with_H(self):
        rels = [
            abs(tm.delta_percent_asymptotic(H) - tm.delta_percent(H)) / tm.delta_percent(H)
            for H in (8.0, 10.0, 12.0)
        ]
        assert rels[2] < rels[1] < rels[0]
