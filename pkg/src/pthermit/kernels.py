"""Hot numerical kernels shared by the matrix layer and the sweep suites.

Everything here is written in loop style so the exact same source runs either
numba-compiled (default when numba is importable) or as plain Python over
numpy scalars (``PTHERMIT_NO_NUMBA=1``).  See ``benchmarks/bench_kernels.py``
for a timing comparison of the two paths.

The eigenvalue solver is a shifted complex QR iteration on a Hessenberg
reduction.  Matrices in this package are 2x2 or 4x4 with paired +/- spectra,
for which an unshifted sweep stalls (equal-modulus eigenvalues), so a
Wilkinson shift plus an occasional exceptional shift is used instead; the
deflation threshold and the sweep budget are kept at 1e-13 * ||a||_F and
10 * n^2 respectively.
"""

import numpy as np

from ._accel import maybe_njit

DEFLATION_SCALE = 1e-13


@maybe_njit
def frob_norm(a):
    s = 0.0
    n = a.shape[0]
    for i in range(n):
        for j in range(n):
            v = a[i, j]
            s += v.real * v.real + v.imag * v.imag
    return np.sqrt(s)


@maybe_njit
def eig2(a00, a01, a10, a11):
    """Eigenvalues of a complex 2x2 from the quadratic on trace/determinant."""
    tr = a00 + a11
    det = a00 * a11 - a01 * a10
    disc = np.sqrt(tr * tr - 4.0 * det + 0j)
    return 0.5 * (tr - disc), 0.5 * (tr + disc)


@maybe_njit
def hessenberg(a):
    """Upper-Hessenberg form of ``a`` by complex Householder reflections."""
    n = a.shape[0]
    h = a.astype(np.complex128).copy()
    v = np.zeros(n, dtype=np.complex128)
    for k in range(n - 2):
        xnorm2 = 0.0
        for i in range(k + 1, n):
            x = h[i, k]
            xnorm2 += x.real * x.real + x.imag * x.imag
        xnorm = np.sqrt(xnorm2)
        if xnorm == 0.0:
            continue
        x0 = h[k + 1, k]
        ax0 = abs(x0)
        phase = x0 / ax0 if ax0 > 0.0 else 1.0 + 0j
        alpha = -phase * xnorm
        vnorm2 = 0.0
        for i in range(k + 1, n):
            v[i] = h[i, k]
        v[k + 1] -= alpha
        for i in range(k + 1, n):
            vnorm2 += v[i].real * v[i].real + v[i].imag * v[i].imag
        if vnorm2 == 0.0:
            continue
        inv = 1.0 / np.sqrt(vnorm2)
        for i in range(k + 1, n):
            v[i] *= inv
        # left: h <- (I - 2 v v^H) h on rows k+1..n-1
        for j in range(k, n):
            s = 0.0 + 0j
            for i in range(k + 1, n):
                s += np.conj(v[i]) * h[i, j]
            s *= 2.0
            for i in range(k + 1, n):
                h[i, j] -= s * v[i]
        # right: h <- h (I - 2 v v^H) on cols k+1..n-1
        for i in range(n):
            s = 0.0 + 0j
            for j in range(k + 1, n):
                s += h[i, j] * v[j]
            s *= 2.0
            for j in range(k + 1, n):
                h[i, j] -= s * np.conj(v[j])
        h[k + 1, k] = alpha
        for i in range(k + 2, n):
            h[i, k] = 0.0 + 0j
    return h


@maybe_njit
def qr_eigvals(a, deflation_scale, max_sweeps):
    """Eigenvalues of a small complex matrix by shifted QR on Hessenberg form.

    Returns ``(eigs, unconverged, residual)`` where ``unconverged`` counts
    eigenvalues that did not deflate within the sweep budget and ``residual``
    is the largest subdiagonal magnitude left in the active block.
    """
    n = a.shape[0]
    eigs = np.zeros(n, dtype=np.complex128)
    if n == 1:
        eigs[0] = a[0, 0]
        return eigs, 0, 0.0
    h = hessenberg(a)
    anorm = frob_norm(a)
    tol = deflation_scale * anorm
    eps = 2.220446049250313e-16
    cs = np.zeros(n, dtype=np.complex128)
    sn = np.zeros(n, dtype=np.complex128)
    hi = n
    sweeps = 0
    stagnation = 0
    while hi > 0:
        if hi == 1:
            eigs[0] = h[0, 0]
            hi = 0
            continue
        # deflate a converged trailing 1x1 or 2x2 block
        sub = abs(h[hi - 1, hi - 2])
        if sub <= tol or sub <= eps * (abs(h[hi - 2, hi - 2]) + abs(h[hi - 1, hi - 1])):
            eigs[hi - 1] = h[hi - 1, hi - 1]
            hi -= 1
            stagnation = 0
            continue
        if hi == 2 or abs(h[hi - 2, hi - 3]) <= tol or abs(h[hi - 2, hi - 3]) <= eps * (
            abs(h[hi - 3, hi - 3]) + abs(h[hi - 2, hi - 2])
        ):
            e1, e2 = eig2(h[hi - 2, hi - 2], h[hi - 2, hi - 1], h[hi - 1, hi - 2], h[hi - 1, hi - 1])
            eigs[hi - 2] = e1
            eigs[hi - 1] = e2
            hi -= 2
            stagnation = 0
            continue
        if sweeps >= max_sweeps:
            break
        # start of the active unreduced block
        lo = hi - 1
        while lo > 0:
            s = abs(h[lo, lo - 1])
            if s <= tol or s <= eps * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])):
                h[lo, lo - 1] = 0.0 + 0j
                break
            lo -= 1
        # Wilkinson shift: trailing 2x2 eigenvalue closest to the corner
        t00 = h[hi - 2, hi - 2]
        t01 = h[hi - 2, hi - 1]
        t10 = h[hi - 1, hi - 2]
        t11 = h[hi - 1, hi - 1]
        m1, m2 = eig2(t00, t01, t10, t11)
        shift = m1 if abs(m1 - t11) <= abs(m2 - t11) else m2
        stagnation += 1
        if stagnation % 12 == 0:
            # exceptional shift to break symmetric cycles
            shift = t11 + 0.75 * abs(h[hi - 1, hi - 2])
        # implicit single-shift QR step on h[lo:hi, lo:hi] via Givens rotations
        for i in range(lo, hi):
            h[i, i] -= shift
        for i in range(lo, hi - 1):
            x = h[i, i]
            y = h[i + 1, i]
            r = np.sqrt(x.real * x.real + x.imag * x.imag + y.real * y.real + y.imag * y.imag)
            if r == 0.0:
                cs[i] = 1.0 + 0j
                sn[i] = 0.0 + 0j
                continue
            c = x / r
            s = y / r
            cs[i] = c
            sn[i] = s
            for j in range(i, hi):
                hij = h[i, j]
                h1j = h[i + 1, j]
                h[i, j] = np.conj(c) * hij + np.conj(s) * h1j
                h[i + 1, j] = -s * hij + c * h1j
        for i in range(lo, hi - 1):
            c = cs[i]
            s = sn[i]
            jtop = i + 2 if i + 2 < hi else hi
            for j in range(lo, jtop):
                hji = h[j, i]
                hj1 = h[j, i + 1]
                h[j, i] = hji * c + hj1 * s
                h[j, i + 1] = -hji * np.conj(s) + hj1 * np.conj(c)
        for i in range(lo, hi):
            h[i, i] += shift
        sweeps += 1
    if hi == 0:
        return eigs, 0, 0.0
    # non-convergence: report what is left
    residual = 0.0
    for i in range(1, hi):
        s = abs(h[i, i - 1])
        if s > residual:
            residual = s
    for i in range(hi):
        eigs[i] = h[i, i]
    return eigs, hi, residual


@maybe_njit
def dirac2_eigvals_batch(p, m1, m2, s1, s2):
    """Spectra of N two-dimensional gamma5-mass Hamiltonians.

    Builds H = [[-p, s1*m1 - s2*m2], [s1*m1 + s2*m2, p]] for each sample and
    returns its eigenvalues from the 2x2 closed form, ordered ascending by
    (real, imag).
    """
    n = p.shape[0]
    out = np.zeros((n, 2), dtype=np.complex128)
    for i in range(n):
        a = s1 * m1[i]
        b = s2 * m2[i]
        e1, e2 = eig2(-p[i] + 0j, a - b + 0j, a + b + 0j, p[i] + 0j)
        if e1.real < e2.real or (e1.real == e2.real and e1.imag <= e2.imag):
            out[i, 0] = e1
            out[i, 1] = e2
        else:
            out[i, 0] = e2
            out[i, 1] = e1
    return out


def dirac2_eigvals_batch_numpy(p, m1, m2, s1, s2):
    """Vectorized numpy equivalent of :func:`dirac2_eigvals_batch`."""
    a = s1 * np.asarray(m1, dtype=float)
    b = s2 * np.asarray(m2, dtype=float)
    p = np.asarray(p, dtype=float)
    det = -p * p - (a - b) * (a + b)
    disc = np.sqrt(-4.0 * det + 0j)  # trace is zero by construction
    lam = 0.5 * disc
    return np.stack([-lam, lam], axis=1)


@maybe_njit
def eigvals_batch(mats, deflation_scale, max_sweeps):
    """QR eigenvalues for a stack of small matrices; returns (eigs, bad_count)."""
    n = mats.shape[0]
    d = mats.shape[1]
    out = np.zeros((n, d), dtype=np.complex128)
    bad = 0
    for i in range(n):
        e, unconverged, _res = qr_eigvals(mats[i], deflation_scale, max_sweeps)
        if unconverged > 0:
            bad += 1
        out[i] = e
    return out, bad
