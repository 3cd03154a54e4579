"""The gamma5-mass Dirac Hamiltonian at fixed momentum.

H = alpha.p + beta (s1 m1 + s2 m2 gamma5) is non-Hermitian whenever m2 != 0
(the gamma5 term flips sign under conjugation because beta and gamma5
anticommute), yet H^2 = (p^2 + m1^2 - m2^2) I, so the spectrum is +-sqrt of
that and is real exactly while m1^2 >= m2^2.  Momentum is a fixed parameter
throughout: every identity of interest is finite-dimensional pointwise in p.
"""

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import algebra, kernels
from .algebra import GammaRep
from .massdomain import mass_angle, physical_mass

Phase = Literal["unbroken", "boundary", "broken"]

#: the four sign variants (s1, s2) of the mass term beta (s1 m1 + s2 m2 g5)
SIGN_VARIANTS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


class PhaseError(ValueError):
    """Raised when an operation needs the unbroken phase and does not have it."""


def classify_phase(m1: float, m2: float) -> Phase:
    d = m1 * m1 - m2 * m2
    if d > 0.0:
        return "unbroken"
    if d == 0.0:
        return "boundary"
    return "broken"


@dataclass(frozen=True)
class Gamma5Hamiltonian:
    rep: GammaRep
    momentum: tuple
    m1: float
    m2: float
    variant: tuple = (1, 1)
    matrix: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.variant not in SIGN_VARIANTS:
            raise ValueError(f"variant must be a sign pair from {SIGN_VARIANTS}")
        p = self.momentum
        if len(p) != self.rep.dim_spacetime - 1:
            raise ValueError(
                f"momentum has {len(p)} components, representation expects "
                f"{self.rep.dim_spacetime - 1}"
            )
        s1, s2 = self.variant
        n = self.rep.matrix_dim
        m = np.zeros((n, n), dtype=np.complex128)
        for pi, ai in zip(p, self.rep.alphas):
            m += pi * ai
        m += s1 * self.m1 * self.rep.beta + s2 * self.m2 * (self.rep.beta @ self.rep.gamma5)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def phase(self) -> Phase:
        return classify_phase(self.m1, self.m2)

    def at_momentum(self, p) -> "Gamma5Hamiltonian":
        """Same masses and variant at a different momentum."""
        return Gamma5Hamiltonian(self.rep, tuple(float(x) for x in p), self.m1, self.m2, self.variant)

    def with_m2_flipped(self) -> "Gamma5Hamiltonian":
        return Gamma5Hamiltonian(self.rep, self.momentum, self.m1, -self.m2, self.variant)


def build_hamiltonian(
    rep: GammaRep,
    p,
    m1: float,
    m2: float,
    variant: tuple = (1, 1),
) -> Gamma5Hamiltonian:
    """Construct H = sum_i alpha_i p_i + beta (s1 m1 + s2 m2 gamma5).

    ``p`` is a scalar in the (1+1)D representation or a 3-sequence in (3+1)D.
    With m2 = 0 the matrix is the ordinary Hermitian Dirac Hamiltonian.
    """
    if np.isscalar(p):
        mom = (float(p),)
    else:
        mom = tuple(float(x) for x in p)
    return Gamma5Hamiltonian(rep, mom, float(m1), float(m2), tuple(variant))


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: np.ndarray
    phase: Phase
    physical_mass: complex


def spectrum(h: Gamma5Hamiltonian) -> SpectralReport:
    """Eigenvalues of H (sorted by real, then imaginary part) plus the phase.

    In both representations the eigenvalues are +-sqrt(p^2 + m1^2 - m2^2)
    (multiplicity 2 in 4D); the phase is classified from the sign of
    m1^2 - m2^2, flipping exactly at m1 = m2.
    """
    eigs = algebra.eigenvalues(h.matrix)
    return SpectralReport(
        eigenvalues=eigs,
        phase=h.phase,
        physical_mass=physical_mass(h.m1, h.m2),
    )


def spectrum_sweep_2d(p, m1, m2, variant=(1, 1)) -> np.ndarray:
    """Batched 2D spectra for arrays of (p, m1, m2); the hot sweep kernel.

    Returns an (N, 2) complex array of eigenvalues ordered (ascending by
    real part, then imaginary part) per sample.  Used by the verification
    suites; equivalent to calling :func:`spectrum` in a loop.
    """
    p = np.ascontiguousarray(p, dtype=np.float64)
    m1 = np.ascontiguousarray(m1, dtype=np.float64)
    m2 = np.ascontiguousarray(m2, dtype=np.float64)
    s1, s2 = float(variant[0]), float(variant[1])
    return kernels.dirac2_eigvals_batch(p, m1, m2, s1, s2)


def _signed_angle(h: Gamma5Hamiltonian) -> float:
    # mass term is beta (a + b g5) = sign(a) beta m exp(g5 atanh(b/a))
    s1, s2 = h.variant
    a, b = s1 * h.m1, s2 * h.m2
    if h.phase != "unbroken" or h.m1 <= 0.0:
        raise PhaseError(f"phase is {h.phase}: no real similarity angle")
    return math.atanh(b / a)


def exp_form_residual(h: Gamma5Hamiltonian) -> float:
    """Deviation of the mass term from beta * m * exp(gamma5 alpha).

    With cosh(alpha) = m1/m and sinh(alpha) = m2/m the two forms agree
    identically; the returned Frobenius norm is pure roundoff (contract:
    <= 1e-12 * m1).  Raises :class:`PhaseError` when no real alpha exists.
    """
    if h.phase != "unbroken":
        raise PhaseError(f"phase is {h.phase}: exp form undefined (m = 0 or imaginary)")
    alpha = mass_angle(h.m1, h.m2)
    m = physical_mass(h.m1, h.m2)
    direct = h.rep.beta @ (
        h.m1 * np.eye(h.rep.matrix_dim) + h.m2 * h.rep.gamma5
    )
    closed = h.rep.beta @ (m * algebra.mat_exp_gamma5(alpha, h.rep))
    return float(np.linalg.norm(direct - closed))


def hermitian_partner(h: Gamma5Hamiltonian) -> np.ndarray:
    """The Hermitian similarity partner e^{g5 a/2} H e^{-g5 a/2}.

    Equals alpha.p + s1 beta m (so exactly alpha.p + beta m for the (+,+)
    variant) and shares the spectrum of H.
    """
    alpha = _signed_angle(h)
    left = algebra.mat_exp_gamma5(alpha / 2.0, h.rep)
    right = algebra.mat_exp_gamma5(-alpha / 2.0, h.rep)
    return left @ h.matrix @ right


def expected_eigenvalues(p_sq: float, m1: float, m2: float, dim: int) -> np.ndarray:
    """The closed-form spectrum +-sqrt(p^2 + m1^2 - m2^2), sorted like
    :func:`spectrum`; an independent oracle for the eigensolver route."""
    lam = np.sqrt(complex(p_sq + m1 * m1 - m2 * m2))
    pair = np.array([-lam, lam])
    return np.repeat(pair, dim // 2) if dim == 4 else pair
