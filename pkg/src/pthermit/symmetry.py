"""First-class momentum-space symmetry operators and their exact identities.

An operator is a triple (matrix, flips_momentum, antilinear) acting on a
momentum-space spinor as (O psi)(p) = matrix . K^antilinear psi(+-p), with K
complex conjugation and the sign flipped iff ``flips_momentum``.  Composition
multiplies matrices (conjugating the right factor when the left operator is
antilinear) and XORs both flags.

Fixed choices, unique up to phase in the 2D representation:

* P = (gamma0, flip, linear) and T = (gamma0, flip, antilinear).  Each one
  conjugates H(m1, m2) into H(m1, -m2) -- the gamma5 mass flips because beta
  and gamma5 anticommute -- while the composition PT = (identity, no flip,
  antilinear) leaves H invariant entry by entry (H is real in this basis).
* C = e^Q P with Q = -alpha gamma5 and alpha = atanh(m2/m1), i.e. the matrix
  e^{-alpha gamma5} gamma0, which in 2D is [[0, (m1-m2)/m], [(m1+m2)/m, 0]].
* eta = e^{alpha gamma5 / 2} (positive square root), eta0 = eta^2; then
  eta0 H eta0^{-1} = H^dagger and eta H eta^{-1} is Hermitian.

In the 4D Dirac basis the same matrices satisfy every identity above except
the time-reversal mass flip, which is specific to the 2D real structure (a
4D antilinear operator built on gamma0 mixes the sigma_y momentum component);
the sweep suites therefore exercise the operator algebra in 2D, where the
model lives.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import algebra
from .algebra import GammaRep, mat_exp_gamma5
from .dirac import Gamma5Hamiltonian, PhaseError, classify_phase
from .massdomain import mass_angle

#: momentum test grid for pointwise commutator checks, in units of m1
DEFAULT_P_GRID = (0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0, 10.0, -10.0, 100.0, -100.0)


@dataclass(frozen=True)
class MomentumOperator:
    matrix: np.ndarray
    flips_momentum: bool
    antilinear: bool

    def __post_init__(self):
        m = algebra.as_matrix(self.matrix)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def compose(self, other: "MomentumOperator") -> "MomentumOperator":
        """self after other: (self . other) psi = self(other(psi))."""
        right = other.matrix.conj() if self.antilinear else other.matrix
        return MomentumOperator(
            self.matrix @ right,
            self.flips_momentum ^ other.flips_momentum,
            self.antilinear ^ other.antilinear,
        )

    def __matmul__(self, other: "MomentumOperator") -> "MomentumOperator":
        return self.compose(other)

    def inverse(self) -> "MomentumOperator":
        inv = np.linalg.inv(self.matrix)
        return MomentumOperator(inv.conj() if self.antilinear else inv,
                                self.flips_momentum, self.antilinear)

    def apply_fixed_p(self, psi) -> np.ndarray:
        """Matrix and conjugation part of the action on a spinor at fixed p.

        The momentum flip is bookkeeping for operator composition; at a
        single momentum the caller tracks it.
        """
        v = np.asarray(psi, dtype=np.complex128)
        if v.shape != (self.matrix.shape[0],):
            raise ValueError(f"spinor shape {v.shape} does not match operator dim")
        return self.matrix @ (v.conj() if self.antilinear else v)

    def same_as(self, other: "MomentumOperator", tol: float = 1e-12) -> bool:
        return (
            self.flips_momentum == other.flips_momentum
            and self.antilinear == other.antilinear
            and self.matrix.shape == other.matrix.shape
            and float(np.max(np.abs(self.matrix - other.matrix))) <= tol
        )


@dataclass(frozen=True)
class OperatorCheckReport:
    name: str
    residual: float
    tolerance: float
    passed: bool = field(init=False)
    parameters: Optional[dict] = None

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.residual <= self.tolerance))


def parity(rep: GammaRep) -> MomentumOperator:
    """P = (gamma0, flip p, linear); conjugation sends m2 -> -m2."""
    return MomentumOperator(rep.gamma0, flips_momentum=True, antilinear=False)


def time_reversal(rep: GammaRep) -> MomentumOperator:
    """T = (gamma0, flip p, antilinear); T^2 is the identity operator."""
    return MomentumOperator(rep.gamma0, flips_momentum=True, antilinear=True)


def pt_operator(rep: GammaRep) -> MomentumOperator:
    """The composition P T = (identity matrix, no flip, antilinear)."""
    return parity(rep).compose(time_reversal(rep))


def _require_unbroken(m1: float, m2: float, what: str) -> float:
    phase = classify_phase(m1, m2)
    if phase != "unbroken" or m1 <= 0.0:
        raise PhaseError(f"{what} undefined: PT {'broken' if phase == 'broken' else 'at boundary'}")
    return mass_angle(m1, m2)


def q_operator(m1: float, m2: float, rep: GammaRep) -> MomentumOperator:
    """Q = -alpha gamma5, the Hermitian exponent with C = e^Q P."""
    alpha = _require_unbroken(m1, m2, "Q")
    return MomentumOperator(-alpha * rep.gamma5, flips_momentum=False, antilinear=False)


def c_operator(m1: float, m2: float, rep: GammaRep) -> MomentumOperator:
    """C = e^{-alpha gamma5} gamma0, inheriting the momentum flip from P.

    In the 2D representation this is [[0, (m1-m2)/m], [(m1+m2)/m, 0]].
    """
    alpha = _require_unbroken(m1, m2, "C")
    return MomentumOperator(
        mat_exp_gamma5(-alpha, rep) @ rep.gamma0, flips_momentum=True, antilinear=False
    )


def eta_operator(m1: float, m2: float, rep: GammaRep) -> MomentumOperator:
    """The positive root eta = e^{alpha gamma5 / 2}; eta H eta^-1 is Hermitian."""
    alpha = _require_unbroken(m1, m2, "eta")
    return MomentumOperator(mat_exp_gamma5(alpha / 2.0, rep), False, False)


def eta0_operator(m1: float, m2: float, rep: GammaRep) -> MomentumOperator:
    """eta0 = eta^2 = e^{alpha gamma5}, the weight with eta0 H eta0^-1 = H+."""
    alpha = _require_unbroken(m1, m2, "eta0")
    return MomentumOperator(mat_exp_gamma5(alpha, rep), False, False)


def conjugated_hamiltonian_matrix(op: MomentumOperator, h: Gamma5Hamiltonian) -> np.ndarray:
    """(op . H . op^-1) evaluated at h's momentum.

    Equals M . K[H(-p)] . M^-1 where the momentum flip and the conjugation K
    apply iff the corresponding flag is set on ``op``.
    """
    p = tuple(-x for x in h.momentum) if op.flips_momentum else h.momentum
    x = h.at_momentum(p).matrix
    if op.antilinear:
        x = x.conj()
    return op.matrix @ x @ np.linalg.inv(op.matrix)


def pseudo_hermiticity_check(h: Gamma5Hamiltonian) -> OperatorCheckReport:
    """Residual of eta0 H eta0^-1 = H^dagger with eta0 = e^{alpha gamma5}."""
    alpha = _require_unbroken(h.m1, h.m2, "eta0")
    eta0 = mat_exp_gamma5(alpha, h.rep)
    eta0_inv = mat_exp_gamma5(-alpha, h.rep)
    residual = float(np.linalg.norm(eta0 @ h.matrix @ eta0_inv - h.matrix.conj().T))
    hnorm = float(np.linalg.norm(h.matrix))
    return OperatorCheckReport(
        name="pseudo_hermiticity",
        residual=residual,
        tolerance=1e-12 * max(hnorm, 1.0),
        parameters={"p": list(h.momentum), "m1": h.m1, "m2": h.m2},
    )


def verify_c_conditions(
    c: MomentumOperator,
    h: Gamma5Hamiltonian,
    pt: MomentumOperator,
    p_grid=DEFAULT_P_GRID,
) -> list:
    """The three algebraic conditions on C: C^2 = 1, [C, PT] = 0, [C, H] = 0.

    The commutator with H respects C's momentum flip: condition (iii) is
    M_C H(-p) = H(p) M_C pointwise over ``p_grid`` (scaled by m1) plus h's
    own momentum.  Failures are reported, not raised.
    """
    params = {"p": list(h.momentum), "m1": h.m1, "m2": h.m2}
    reports = []

    c2 = c.compose(c)
    flag_penalty = 0.0 if (not c2.flips_momentum and not c2.antilinear) else 1.0
    eye = np.eye(c.matrix.shape[0])
    reports.append(
        OperatorCheckReport(
            name="c_squared",
            residual=float(np.max(np.abs(c2.matrix - eye))) + flag_penalty,
            tolerance=1e-12,
            parameters=params,
        )
    )

    ab = c.compose(pt)
    ba = pt.compose(c)
    flag_penalty = 0.0 if (
        ab.flips_momentum == ba.flips_momentum and ab.antilinear == ba.antilinear
    ) else 1.0
    scale = max(1.0, float(np.max(np.abs(c.matrix))))
    reports.append(
        OperatorCheckReport(
            name="c_pt_commutator",
            residual=float(np.max(np.abs(ab.matrix - ba.matrix))) / scale + flag_penalty,
            tolerance=1e-12,
            parameters=params,
        )
    )

    worst = 0.0
    momenta = [tuple(v * max(h.m1, 1.0) for _ in h.momentum) for v in p_grid]
    momenta.append(h.momentum)
    for p in momenta:
        hp = h.at_momentum(p).matrix
        hm = h.at_momentum(tuple(-x for x in p)).matrix if c.flips_momentum else hp
        lhs = c.matrix @ (hm.conj() if c.antilinear else hm)
        rhs = hp @ c.matrix
        scale = max(1.0, float(np.max(np.abs(hp))))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))) / scale)
    reports.append(
        OperatorCheckReport(
            name="c_hamiltonian_commutator",
            residual=worst,
            tolerance=1e-12,
            parameters=params,
        )
    )
    return reports
