import numpy as np
import pytest
from numpy.testing import assert_allclose

from pthermit import kernels
from pthermit._accel import BACKEND, HAS_NUMBA


def test_backend_reports_a_name():
    assert BACKEND in ("numba", "numpy")


def test_eig2_matches_roots():
    e1, e2 = kernels.eig2(-3 + 0j, 2 + 0j, 8 + 0j, 3 + 0j)
    assert sorted((e1, e2), key=lambda z: z.real) == [-5, 5]


def test_hessenberg_preserves_similarity():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = kernels.hessenberg(a)
    # lower triangle below the subdiagonal is annihilated
    assert np.max(np.abs(np.tril(h, -2))) <= 1e-13
    # similarity: same characteristic polynomial at a few probe points
    for lam in (0.0, 1.0 + 0.5j, -2.0):
        da = np.linalg.det(a - lam * np.eye(4))
        dh = np.linalg.det(h - lam * np.eye(4))
        assert abs(da - dh) <= 1e-9 * max(1.0, abs(da))


def test_batch_kernel_matches_numpy_fallback():
    rng = np.random.default_rng(1)
    n = 500
    p = rng.uniform(-100, 100, n)
    m1 = rng.uniform(0.1, 100, n)
    m2 = rng.uniform(0.0, 150, n)
    a = kernels.dirac2_eigvals_batch(p, m1, m2, 1.0, 1.0)
    b = kernels.dirac2_eigvals_batch_numpy(p, m1, m2, 1.0, 1.0)
    assert_allclose(a, b, rtol=1e-13, atol=1e-13)


def test_eigvals_batch_agrees_with_lapack():
    rng = np.random.default_rng(2)
    mats = rng.normal(size=(100, 4, 4)) + 1j * rng.normal(size=(100, 4, 4))
    out, bad = kernels.eigvals_batch(np.ascontiguousarray(mats), kernels.DEFLATION_SCALE, 160)
    assert bad == 0
    for i in range(100):
        assert_allclose(
            np.sort_complex(out[i]),
            np.sort_complex(np.linalg.eigvals(mats[i])),
            rtol=1e-9,
            atol=1e-9,
        )


@pytest.mark.skipif(not HAS_NUMBA, reason="numba backend not active")
def test_compiled_and_python_paths_agree():
    rng = np.random.default_rng(3)
    for _ in range(25):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        compiled, c_bad, _ = kernels.qr_eigvals(a, kernels.DEFLATION_SCALE, 160)
        plain, p_bad, _ = kernels.qr_eigvals.py_func(a, kernels.DEFLATION_SCALE, 160)
        assert c_bad == 0 and p_bad == 0
        assert_allclose(np.sort_complex(compiled), np.sort_complex(plain),
                        rtol=1e-12, atol=1e-12)
