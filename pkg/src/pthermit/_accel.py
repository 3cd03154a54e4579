"""Kernel backend selection: numba JIT when available, pure numpy otherwise.

The environment variable ``PTHERMIT_NO_NUMBA`` (set to ``1``/``true``/``yes``)
forces the pure-numpy path even when numba is installed.  The active backend
is exposed as :data:`BACKEND` so benchmarks and bug reports can state which
path produced a number.
"""

import os


def _want_numba() -> bool:
    flag = os.environ.get("PTHERMIT_NO_NUMBA", "").strip().lower()
    return flag not in ("1", "true", "yes", "on")


HAS_NUMBA = False
if _want_numba():
    try:
        from numba import njit as _njit  # noqa: F401

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


def maybe_njit(func):
    """Compile ``func`` with numba when the numba backend is active.

    On the numpy backend the function is returned unchanged, so every kernel
    must be written to run identically as plain Python over numpy arrays.
    """
    if HAS_NUMBA:
        from numba import njit

        return njit(cache=True)(func)
    return func
