"""Timings for the hot kernels: numba-compiled vs pure-Python/numpy paths.

Usage:
    python benchmarks/bench_kernels.py [N]

With numba installed the compiled dispatcher and its captured .py_func are
timed side by side; the vectorized numpy batch fallback is timed in both
cases.  Run with PTHERMIT_NO_NUMBA=1 to see the package as it behaves when
numba is absent.
"""

import sys
import time

import numpy as np

from pthermit import kernels
from pthermit._accel import BACKEND, HAS_NUMBA


def timeit(label, func, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    print(f"{label:<44} {best * 1e3:10.2f} ms")
    return result


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 20_000
    rng = np.random.default_rng(0)
    print(f"backend: {BACKEND}   batch size: {n}")
    print("-" * 60)

    # batched 2x2 spectra (the sweep behind the spectral-law checks)
    p = rng.uniform(-100.0, 100.0, n)
    m1 = rng.uniform(0.1, 100.0, n)
    m2 = rng.uniform(0.0, 150.0, n)
    if HAS_NUMBA:
        kernels.dirac2_eigvals_batch(p[:8], m1[:8], m2[:8], 1.0, 1.0)  # compile
        a = timeit("dirac2_eigvals_batch (numba)", kernels.dirac2_eigvals_batch,
                   p, m1, m2, 1.0, 1.0)
        b = timeit("dirac2_eigvals_batch (python loop)",
                   kernels.dirac2_eigvals_batch.py_func, p, m1, m2, 1.0, 1.0)
    else:
        a = timeit("dirac2_eigvals_batch (python loop)", kernels.dirac2_eigvals_batch,
                   p, m1, m2, 1.0, 1.0)
        b = a
    c = timeit("dirac2_eigvals_batch_numpy (vectorized)",
               kernels.dirac2_eigvals_batch_numpy, p, m1, m2, 1.0, 1.0)
    assert np.allclose(a, b) and np.allclose(a, c)

    # shifted-QR eigenvalues on a stack of 4x4 complex matrices
    m = max(n // 40, 50)
    mats = np.ascontiguousarray(
        rng.normal(size=(m, 4, 4)) + 1j * rng.normal(size=(m, 4, 4))
    )
    print(f"\nQR eigensolver on {m} complex 4x4 matrices")
    print("-" * 60)
    if HAS_NUMBA:
        kernels.eigvals_batch(mats[:2], kernels.DEFLATION_SCALE, 160)  # compile
        timeit("eigvals_batch (numba)", kernels.eigvals_batch,
               mats, kernels.DEFLATION_SCALE, 160)
        # the .py_func of the outer loop still dispatches to compiled
        # qr_eigvals; rerun under PTHERMIT_NO_NUMBA=1 for the pure path
    else:
        timeit("eigvals_batch (pure python)", kernels.eigvals_batch,
               mats, kernels.DEFLATION_SCALE, 160)
    ref = np.array([np.sort_complex(np.linalg.eigvals(x)) for x in mats[:8]])
    got, _ = kernels.eigvals_batch(mats[:8], kernels.DEFLATION_SCALE, 160)
    assert np.allclose(np.array([np.sort_complex(e) for e in got]), ref, atol=1e-9)
    timeit("numpy.linalg.eigvals loop (reference)",
           lambda: np.array([np.linalg.eigvals(x) for x in mats]))


if __name__ == "__main__":
    main()
