"""Backend equivalence: the numba-compiled kernels must match the numpy path."""
import numpy as np

from rotameniscus import kernels
from rotameniscus._backend import USE_NUMBA, backend_name


def test_backend_reported():
    assert backend_name() in ("numba", "numpy")


def test_h_prime_grid_paths_agree():
    r = np.linspace(0.0, 0.99, 57)
    a = kernels.h_prime_grid(r, 0.5, 3.0)
    b = kernels.h_prime_grid_numpy(r, 0.5, 3.0)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=0.0)


def test_endpoint_integrand_paths_agree():
    t = np.linspace(1e-6, 1.0, 57)
    a = kernels.endpoint_integrand(t, 3.9)
    b = kernels.endpoint_integrand_numpy(t, 3.9)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=0.0)


def test_endpoint_integrand_limit_value():
    # F(0) = 2 / sqrt(2 (1 - lam/4)); at lam = 2 that is exactly 2
    assert abs(float(kernels.endpoint_integrand(np.array([0.0]), 2.0)[0]) - 2.0) < 1e-14


def test_miller_tables_paths_agree():
    t = np.linspace(1e-4, 1.0, 33)
    b1, c1 = kernels.miller_tables_loop(t, 40)
    b2, c2 = kernels.miller_tables_numpy(t, 40)
    np.testing.assert_allclose(b1, b2, rtol=1e-12)
    np.testing.assert_allclose(c1, c2, rtol=1e-12)
    if USE_NUMBA:
        b3, c3 = kernels.miller_tables(t, 40)
        np.testing.assert_allclose(b3, b2, rtol=1e-12)
        np.testing.assert_allclose(c3, c2, rtol=1e-12)


def test_series_products_matches_plain_python():
    out = kernels.series_products(50)
    ref = kernels.series_products_numpy(50)
    np.testing.assert_allclose(out, ref, rtol=1e-15)


def test_cp_block_sum_paths_agree():
    for p in (0, 5, 20):
        a = kernels.cp_block_sum(p, max(0, p // 2 + 1), 5000)
        b = kernels.cp_block_sum_numpy(p, max(0, p // 2 + 1), 5000)
        assert abs(a - b) < 1e-11 * abs(b)


def test_cp_block_sum_loop_variant_available():
    v = kernels.cp_block_sum_loop(0, 0, 100)
    w = kernels.cp_block_sum_numpy(0, 0, 100)
    assert abs(v - w) < 1e-12 * abs(w)
