"""Dense complex matrix helpers and the concrete Clifford representations.

Two representations are built here and reused everywhere else:

* (1+1)D: gamma0 = [[0,1],[1,0]], gamma1 = [[0,1],[-1,0]] and
  gamma5 = -gamma0 gamma1 = diag(1,-1).
* (3+1)D: the Dirac basis, gamma0 = diag(1,1,-1,-1), gamma_i built from the
  Pauli matrices as offdiag(sigma_i, -sigma_i), gamma5 = offdiag(I2, I2).
  This keeps beta diagonal, so exp(gamma5 * alpha) factors stay transparent.

Both satisfy {gamma^mu, gamma^nu} = 2 g^{mu nu} with signature (+,-,...,-)
and {gamma5, gamma^nu} = 0, which is checked at construction time.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .kernels import DEFLATION_SCALE

MAX_EIG_DIM = 8

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


class EigenvalueConvergenceError(RuntimeError):
    """QR iteration ran out of sweeps; carries the remaining subdiagonal size."""

    def __init__(self, residual: float):
        super().__init__(f"QR iteration did not converge (residual {residual:.3e})")
        self.residual = residual


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


def as_matrix(a) -> np.ndarray:
    """Validate a square finite complex matrix and return it as complex128."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains non-finite entries")
    return m


def mat_mul(a, b) -> np.ndarray:
    """Matrix product with an explicit dimension check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


@dataclass(frozen=True)
class GammaRep:
    """A named gamma-matrix set with its derived beta and alpha_i = gamma0 gamma_i."""

    dim_spacetime: int
    gammas: tuple  # (gamma0, gamma1[, gamma2, gamma3])
    gamma5: np.ndarray
    beta: np.ndarray = field(init=False)
    alphas: tuple = field(init=False)

    def __post_init__(self):
        g0 = self.gammas[0]
        object.__setattr__(self, "beta", _freeze(g0))
        object.__setattr__(
            self, "alphas", tuple(_freeze(g0 @ g) for g in self.gammas[1:])
        )

    @property
    def gamma0(self) -> np.ndarray:
        return self.gammas[0]

    @property
    def matrix_dim(self) -> int:
        return self.gammas[0].shape[0]

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.matrix_dim, dtype=np.complex128)

    def anticommutation_residual(self) -> float:
        """Largest entrywise deviation from the Clifford table, including gamma5."""
        n = self.matrix_dim
        eye = np.eye(n, dtype=np.complex128)
        metric = [1.0] + [-1.0] * (self.dim_spacetime - 1)
        worst = 0.0
        mats = list(self.gammas)
        for mu, gm in enumerate(mats):
            for nu, gn in enumerate(mats):
                target = 2.0 * (metric[mu] if mu == nu else 0.0) * eye
                worst = max(worst, np.max(np.abs(gm @ gn + gn @ gm - target)))
        for g in mats:
            worst = max(worst, np.max(np.abs(self.gamma5 @ g + g @ self.gamma5)))
        worst = max(worst, np.max(np.abs(self.gamma5 @ self.gamma5 - eye)))
        return float(worst)


def build_gamma_rep(dim_spacetime: int) -> GammaRep:
    """Gamma matrices for (1+1)- or (3+1)-dimensional spacetime."""
    if dim_spacetime == 2:
        g0 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
        g1 = np.array([[0, 1], [-1, 0]], dtype=np.complex128)
        g5 = -g0 @ g1  # diag(1, -1)
        rep = GammaRep(2, (_freeze(g0), _freeze(g1)), _freeze(g5))
    elif dim_spacetime == 4:
        z = np.zeros((2, 2), dtype=np.complex128)
        i2 = np.eye(2, dtype=np.complex128)
        g0 = np.block([[i2, z], [z, -i2]])
        gi = tuple(np.block([[z, s], [-s, z]]) for s in _SIGMA)
        g5 = np.block([[z, i2], [i2, z]])
        rep = GammaRep(4, (_freeze(g0),) + tuple(_freeze(g) for g in gi), _freeze(g5))
    else:
        raise ValueError(f"unsupported spacetime dimension {dim_spacetime}; use 2 or 4")
    resid = rep.anticommutation_residual()
    if resid > 1e-14:
        raise AssertionError(f"gamma representation failed its algebra check ({resid})")
    return rep


def mat_exp_gamma5(scale: float, rep: GammaRep) -> np.ndarray:
    """exp(scale * gamma5) in closed form, cosh(scale) I + sinh(scale) gamma5.

    Valid because gamma5 squares to the identity.  Evaluated through the
    chiral projectors (I +- gamma5)/2 as e^s P+ + e^-s P-, which keeps every
    entry accurate to machine precision (the cosh/sinh difference cancels
    badly for the e^-|s| entries); in the 2D representation the result is
    exactly diag(e^scale, e^-scale).
    """
    eye = np.eye(rep.matrix_dim, dtype=np.complex128)
    p_plus = 0.5 * (eye + rep.gamma5)
    p_minus = 0.5 * (eye - rep.gamma5)
    return np.exp(scale) * p_plus + np.exp(-scale) * p_minus


def eigenvalues(a) -> np.ndarray:
    """All eigenvalues of a small complex matrix, sorted by (real, imag).

    Dimension 2 uses the closed-form quadratic; larger matrices (up to 8) go
    through the Hessenberg + shifted-QR kernel.  Raises
    :class:`EigenvalueConvergenceError` if the sweep budget is exhausted.
    """
    m = as_matrix(a)
    n = m.shape[0]
    if n > MAX_EIG_DIM:
        raise ValueError(f"matrix dimension {n} exceeds supported maximum {MAX_EIG_DIM}")
    if n == 1:
        eigs = m.ravel().copy()
    elif n == 2:
        eigs = np.array(kernels.eig2(m[0, 0], m[0, 1], m[1, 0], m[1, 1]))
    else:
        eigs, unconverged, residual = kernels.qr_eigvals(m, DEFLATION_SCALE, 10 * n * n)
        if unconverged:
            raise EigenvalueConvergenceError(float(residual))
    order = np.lexsort((eigs.imag, eigs.real))
    return eigs[order]


def char_poly_at(a, lam: complex) -> complex:
    """det(a - lam I) by cofactor expansion; independent check on eigenvalues.

    Exact recursive expansion, practical only for the small dimensions used
    here (the eigenvalue tests run it for dim <= 4).
    """
    m = as_matrix(a) - lam * np.eye(a.shape[0], dtype=np.complex128)

    def det(sub: np.ndarray) -> complex:
        k = sub.shape[0]
        if k == 1:
            return complex(sub[0, 0])
        if k == 2:
            return complex(sub[0, 0] * sub[1, 1] - sub[0, 1] * sub[1, 0])
        total = 0.0 + 0j
        rest = sub[1:]
        for j in range(k):
            minor = np.delete(rest, j, axis=1)
            total += (-1) ** j * sub[0, j] * det(minor)
        return total

    return det(m)
