"""Sesquilinear pairings on momentum-space spinors at fixed p.

The pairings are the fixed-momentum restriction of the spatial-integral
forms: the integral collapses to a finite sum over components, and integral
versions follow by summing over modes.

Three forms appear, all built from the same operators:

* PT pairing   <f|g>_PT  = (PT f)^T g  with PT = (gamma0, antilinear) here.
  Indefinite: the two eigenvectors of H carry opposite signs.
* CPT pairing  <f|g>_CPT = (C (PT f))^T g.  Its weight matrix is
  e^{-alpha gamma5}, giving the explicit non-negative diagonal form
  (m1-m2)/m |f1|^2 + (m1+m2)/m |f2|^2 in 2D.
* eta pairing  <f|g>_eta = f^dagger e^{alpha gamma5} g, the same two
  operators composed in the other order (PT after C).

Both weighted forms are positive definite for m1 > |m2|.  They are not the
same form: H is self-adjoint and has orthogonal eigenvectors under the eta
pairing, while the CPT-ordered weight e^{-alpha gamma5} plays that role for
H^dagger instead.  Diagnostics below report both so the distinction stays
visible.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import GammaRep, mat_exp_gamma5
from .dirac import Gamma5Hamiltonian, PhaseError
from .massdomain import mass_angle
from .symmetry import MomentumOperator


def as_spinor(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] not in (2, 4):
        raise ValueError(f"spinor must be a 2- or 4-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v.view(float))):
        raise ValueError("spinor has non-finite components")
    return v


def pt_pairing(rep: GammaRep) -> MomentumOperator:
    """The antilinear conjugation entering the pairings; matrix gamma0."""
    return MomentumOperator(rep.gamma0, flips_momentum=True, antilinear=True)


def pt_inner(f, g, pt: MomentumOperator) -> complex:
    """<f|g>_PT = (PT f)^T g; indefinite (negative norms exist)."""
    fv, gv = as_spinor(f), as_spinor(g)
    if fv.shape != gv.shape:
        raise ValueError("spinor dimensions differ")
    return complex(pt.apply_fixed_p(fv) @ gv)


def cpt_inner(f, g, c: MomentumOperator, pt: MomentumOperator) -> complex:
    """<f|g>_CPT = (CPT f)^T g with CPT = C composed after PT.

    For f = g = (x+iy, u+iv) in 2D this equals
    (m1-m2)/m (x^2+y^2) + (m1+m2)/m (u^2+v^2), which is positive for any
    nonzero spinor when m1 > m2 >= 0 and exactly semidefinite at m1 = m2.
    """
    fv, gv = as_spinor(f), as_spinor(g)
    if fv.shape != gv.shape:
        raise ValueError("spinor dimensions differ")
    return complex(c.compose(pt).apply_fixed_p(fv) @ gv)


def eta_inner(f, g, m1: float, m2: float, rep: GammaRep) -> complex:
    """<f|g>_eta = f^dagger e^{alpha gamma5} g, alpha = atanh(m2/m1).

    The positive-definite product under which H(m1, m2) is self-adjoint and
    its eigenvectors are orthogonal.  Identical to composing the pairing
    operators in the order PT after C.
    """
    fv, gv = as_spinor(f), as_spinor(g)
    if fv.shape != gv.shape:
        raise ValueError("spinor dimensions differ")
    alpha = mass_angle(m1, m2)
    return complex(fv.conj() @ mat_exp_gamma5(alpha, rep) @ gv)


def eta_selfadjointness_residual(h: Gamma5Hamiltonian, f, g) -> float:
    """| <H f | g>_eta - <f | H g>_eta |, zero up to roundoff when unbroken."""
    fv, gv = as_spinor(f), as_spinor(g)
    lhs = eta_inner(h.matrix @ fv, gv, h.m1, h.m2, h.rep)
    rhs = eta_inner(fv, h.matrix @ gv, h.m1, h.m2, h.rep)
    return abs(lhs - rhs)


@dataclass(frozen=True)
class EigenbasisDiagnostics:
    eigenvalues: tuple
    eigenvectors: tuple  # normalized so the largest component is 1 + 0i
    pt_norms: tuple
    cpt_norms: tuple
    eta_norms: tuple
    cpt_cross: complex  # literal CPT pairing of the two eigenvectors
    eta_cross: complex  # eta pairing of the two eigenvectors (vanishes)


def _eigenpairs_2d(matrix: np.ndarray):
    a, b = matrix[0, 0], matrix[0, 1]
    c, d = matrix[1, 0], matrix[1, 1]
    tr = a + d
    disc = np.sqrt(tr * tr - 4.0 * (a * d - b * c) + 0j)
    lams = sorted((0.5 * (tr - disc), 0.5 * (tr + disc)), key=lambda z: (z.real, z.imag))
    pairs = []
    for lam in lams:
        cand1 = np.array([b, lam - a])
        cand2 = np.array([lam - d, c])
        v = cand1 if np.linalg.norm(cand1) >= np.linalg.norm(cand2) else cand2
        v = v / v[np.argmax(np.abs(v))]
        pairs.append((lam, v))
    return pairs


def eigenbasis_diagnostics(
    h: Gamma5Hamiltonian, c: MomentumOperator, pt: MomentumOperator
) -> EigenbasisDiagnostics:
    """Norm pattern of the two eigenvectors of a 2D Hamiltonian.

    PT norms come out with opposite signs (positive for the positive-energy
    branch); the CPT norms and the eta norms are all positive; the eta
    pairing of the two distinct eigenvectors vanishes (the CPT-ordered
    pairing of them generally does not, and is reported as is).
    """
    if h.rep.matrix_dim != 2:
        raise ValueError("eigenbasis diagnostics are defined for the 2D representation")
    if h.phase != "unbroken":
        raise PhaseError(f"phase is {h.phase}: diagnostics need the unbroken phase")
    (l1, v1), (l2, v2) = _eigenpairs_2d(h.matrix)
    if abs(l1 - l2) <= 1e-12 * max(1.0, abs(l1), abs(l2)):
        raise ValueError("degenerate spectrum: eigenbasis diagnostics undefined")
    return EigenbasisDiagnostics(
        eigenvalues=(l1, l2),
        eigenvectors=(v1, v2),
        pt_norms=(pt_inner(v1, v1, pt).real, pt_inner(v2, v2, pt).real),
        cpt_norms=(cpt_inner(v1, v1, c, pt).real, cpt_inner(v2, v2, c, pt).real),
        eta_norms=(
            eta_inner(v1, v1, h.m1, h.m2, h.rep).real,
            eta_inner(v2, v2, h.m1, h.m2, h.rep).real,
        ),
        cpt_cross=cpt_inner(v1, v2, c, pt),
        eta_cross=eta_inner(v1, v2, h.m1, h.m2, h.rep),
    )
