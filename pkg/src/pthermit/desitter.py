"""Curved momentum-space geometry on the 5-hyperboloid
p0^2 - |p|^2 + p5^2 = M^2 and the wave-operator factorizations living on it.

On a mass shell p0^2 - |p|^2 = m^2 the fifth component is fixed up to sign,
|p5| = sqrt(M^2 - m^2), so m <= M holds structurally: no point with a larger
shell mass can sit on the hyperboloid.  The shell angle mu in [0, pi/2] is
defined by cos(mu) = sqrt(1 - m^2/M^2) = |p5|/M.

The scalar wave operator factorizes as 2M(p5 - M cos mu) (annihilating the
physical component) times 2M(p5 + M cos mu) (bounded away from zero for
m < M, forcing the mirror component to vanish).  The matrix factorizations
reproduce those scalars as 4x4 products; the ordinary first-order operator
has a flat limit (M -> infinity) while the exotic one grows linearly in M.
"""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .algebra import GammaRep, char_poly_at
from .symmetry import OperatorCheckReport

Family = Literal["ordinary", "exotic"]
Factorization = Literal["eq1", "eq2", "eqK2", "eqK4"]

HYPERBOLOID_RTOL = 1e-10

K4_NOTE = "sign discrepancy vs printed form, magnitude verified"


@dataclass(frozen=True)
class AdSPoint:
    """A timelike point of the hyperboloid with curvature mass M."""

    p0: float
    p_vec: tuple
    p5: float
    M: float

    def __post_init__(self):
        object.__setattr__(self, "p_vec", tuple(float(x) for x in self.p_vec))
        m2 = self.M * self.M
        gap = self.p0**2 - self._psq() + self.p5**2 - m2
        if abs(gap) > HYPERBOLOID_RTOL * m2:
            raise ValueError(f"point is off the hyperboloid by {gap:.3e}")
        if self.p0**2 - self._psq() < -HYPERBOLOID_RTOL * m2:
            raise ValueError("point is spacelike: no mass shell through it")

    def _psq(self) -> float:
        return sum(x * x for x in self.p_vec)

    @property
    def mass(self) -> float:
        """Shell mass sqrt(p0^2 - |p|^2); always <= M on the hyperboloid."""
        return math.sqrt(max(self.p0**2 - self._psq(), 0.0))

    @property
    def cos_mu(self) -> float:
        return math.sqrt(max(1.0 - (self.mass / self.M) ** 2, 0.0))

    @property
    def mu(self) -> float:
        # atan2(sin, cos) keeps the angle accurate at both ends of [0, pi/2]
        return math.atan2(self.mass / self.M, self.cos_mu)


@dataclass(frozen=True)
class TwoComponentField:
    """Amplitudes attached to the two signs of p5 at fixed 4-momentum."""

    phi1: complex  # p5 = +|p5|
    phi2: complex  # p5 = -|p5|


@dataclass(frozen=True)
class ScalarProjection:
    """The two scalar factors acting on the field components at one point."""

    phi1_factor: float  # 2M(|p5| - M cos mu); vanishes on shell
    phi2_factor: float  # 2M(|p5| + M cos mu); equals 4 M^2 cos mu on shell
    degenerate: bool  # both factors vanish (m = M shell)
    phi2_forced_zero: bool


def on_shell_point(M: float, m: float, p_vec=(0.0, 0.0, 0.0), sign_p0: int = 1,
                   sign_p5: int = 1) -> AdSPoint:
    """Point with p0 = +-sqrt(m^2 + |p|^2) and p5 = +-sqrt(M^2 - m^2)."""
    if m > M:
        raise ValueError("mass exceeds curvature radius")
    p_vec = tuple(float(x) for x in p_vec)
    psq = sum(x * x for x in p_vec)
    p0 = sign_p0 * math.sqrt(m * m + psq)
    p5 = sign_p5 * math.sqrt(M * M - m * m)
    return AdSPoint(p0=p0, p_vec=p_vec, p5=p5, M=M)


def sample_hyperboloid(M: float, m: float, count: int, seed: int) -> list:
    """Deterministic on-shell sample: p uniform in a ball of radius
    3m + M/10, with all four (sign p0, sign p5) combinations cycled through.
    """
    if m > M:
        raise ValueError("mass exceeds curvature radius")
    if count <= 0:
        raise ValueError("count must be positive")
    rng = np.random.default_rng(seed)
    radius = 3.0 * m + M / 10.0
    signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    points = []
    for i in range(count):
        direction = rng.normal(size=3)
        norm = np.linalg.norm(direction)
        if norm == 0.0:
            direction = np.array([1.0, 0.0, 0.0])
            norm = 1.0
        r = radius * rng.uniform() ** (1.0 / 3.0)
        p_vec = tuple(float(x) for x in direction / norm * r)
        s0, s5 = signs[i % 4]
        points.append(on_shell_point(M, m, p_vec, s0, s5))
    return points


def _check_on_shell(pt: AdSPoint, m: float):
    # compare mass squares: p0^2 - |p|^2 is the well-conditioned quantity
    if abs(pt.mass**2 - m * m) > 1e-9 * pt.M**2:
        raise ValueError(f"point is off the m = {m} shell (shell mass {pt.mass})")


def _shell_angle(M: float, m: float):
    """(mu, cos mu) for the m-shell, computed from the exact shell mass.

    The point's own ``cos_mu`` reconstructs the mass from p0^2 - |p|^2,
    which cancels catastrophically near m = M; the explicit m avoids that.
    """
    sin_mu = min(m / M, 1.0)
    cos_mu = math.sqrt(max(1.0 - sin_mu * sin_mu, 0.0))
    return math.atan2(sin_mu, cos_mu), cos_mu


def scalar_component_support(pt: AdSPoint, m: float) -> ScalarProjection:
    """Evaluate the two factors 2M(|p5| -+ M cos mu) at an on-shell point.

    The phi1 factor vanishes while the phi2 factor equals 4 M^2 cos mu, so
    for m < M the mirror component cannot propagate.  At m = M both factors
    vanish and the shell is reported as degenerate rather than as two
    propagating components.
    """
    _check_on_shell(pt, m)
    M = pt.M
    _, cos_mu = _shell_angle(M, m)
    abs_p5 = abs(pt.p5)
    f1 = 2.0 * M * (abs_p5 - M * cos_mu)
    f2 = 2.0 * M * (abs_p5 + M * cos_mu)
    degenerate = f2 <= 1e-9 * M * M
    return ScalarProjection(
        phi1_factor=f1,
        phi2_factor=f2,
        degenerate=degenerate,
        phi2_forced_zero=not degenerate,
    )


def _p_slash(pt: AdSPoint, rep: GammaRep) -> np.ndarray:
    out = pt.p0 * rep.gammas[0].astype(np.complex128)
    for pi, gi in zip(pt.p_vec, rep.gammas[1:]):
        out = out - pi * gi
    return out


def _require_4d(rep: GammaRep):
    if rep.dim_spacetime != 4:
        raise ValueError("the curved momentum-space construction is (3+1)-dimensional")


def dirac_operator(pt: AdSPoint, m: float, rep: GammaRep,
                   family: Family = "ordinary") -> np.ndarray:
    """First-order wave operator at an on-shell point.

    ordinary: p.gamma + (p5 - M) gamma5 + 2M sin(mu/2)
    exotic:   p.gamma + (p5 + M) gamma5 - 2M cos(mu/2)

    The ordinary operator tends to p.gamma + m as M grows; the exotic one
    has no flat limit (its norm grows linearly in M).
    """
    _require_4d(rep)
    _check_on_shell(pt, m)
    eye = np.eye(4, dtype=np.complex128)
    ps = _p_slash(pt, rep)
    M = pt.M
    mu, _ = _shell_angle(M, m)
    if family == "ordinary":
        return ps + (pt.p5 - M) * rep.gamma5 + 2.0 * M * math.sin(mu / 2.0) * eye
    if family == "exotic":
        return ps + (pt.p5 + M) * rep.gamma5 - 2.0 * M * math.cos(mu / 2.0) * eye
    raise ValueError(f"unknown family {family!r}")


def ordinary_determinant(pt: AdSPoint, m: float, rep: GammaRep) -> complex:
    """det of the ordinary operator by cofactor expansion; vanishes on the
    physical branch p5 = +sqrt(M^2 - m^2)."""
    return char_poly_at(dirac_operator(pt, m, rep, "ordinary"), 0.0)


def verify_factorization(pt: AdSPoint, m: float, rep: GammaRep,
                         which: Factorization) -> OperatorCheckReport:
    """Check one factorization identity at an on-shell point.

    eq1:  2M(p5 + M cos mu) = [p.g - g5(p5+M) - 2M sin(mu/2)] [same + 2M sin(mu/2)]
    eq2:  2M(p5 - M cos mu) = [p.g - g5(p5-M) + 2M sin(mu/2)] [-p.g + g5(p5-M) + 2M sin(mu/2)]
    eqK2: (p.g + m)(p.g - m) = (p^2 - m^2) I  (valid at any p)
    eqK4: as eq2 built on (p5+M) and 2M cos(mu/2); the product equals
          MINUS 2M(p5 - M cos mu) I, and the second bracket needs the
          + sign on the scalar term for the product to be scalar at all.
          The magnitude is verified and the flip is annotated in the report.
    """
    _require_4d(rep)
    _check_on_shell(pt, m)
    M, p5 = pt.M, pt.p5
    mu, cos_mu = _shell_angle(M, m)
    eye = np.eye(4, dtype=np.complex128)
    ps = _p_slash(pt, rep)
    params = {"M": M, "m": m, "p5": p5, "p_vec": list(pt.p_vec)}
    tol = 1e-9 * M * M
    if which == "eq1":
        s = 2.0 * M * math.sin(mu / 2.0)
        a = ps - (p5 + M) * rep.gamma5
        rhs = (a - s * eye) @ (a + s * eye)
        lhs = 2.0 * M * (p5 + M * cos_mu)
        residual = float(np.max(np.abs(rhs - lhs * eye)))
    elif which == "eq2":
        s = 2.0 * M * math.sin(mu / 2.0)
        b = ps - (p5 - M) * rep.gamma5
        rhs = (b + s * eye) @ (-b + s * eye)
        lhs = 2.0 * M * (p5 - M * cos_mu)
        residual = float(np.max(np.abs(rhs - lhs * eye)))
    elif which == "eqK2":
        psq = pt.p0**2 - sum(x * x for x in pt.p_vec)
        rhs = (ps + m * eye) @ (ps - m * eye)
        residual = float(np.max(np.abs(rhs - (psq - m * m) * eye)))
    elif which == "eqK4":
        c = 2.0 * M * math.cos(mu / 2.0)
        b = ps - (p5 + M) * rep.gamma5
        rhs = (b + c * eye) @ (-b + c * eye)
        lhs = 2.0 * M * (p5 - M * cos_mu)
        residual = float(np.max(np.abs(rhs + lhs * eye)))
        params = dict(params, note=K4_NOTE)
    else:
        raise ValueError(f"unknown factorization {which!r}")
    return OperatorCheckReport(
        name=f"factorization_{which}", residual=residual, tolerance=tol, parameters=params
    )


def klein_gordon_factorization_residual(p4, m: float, rep: GammaRep) -> float:
    """|(p.g + m)(p.g - m) - (p^2 - m^2) I| at an arbitrary 4-momentum."""
    _require_4d(rep)
    p0, p1, p2, p3 = (float(x) for x in p4)
    ps = p0 * rep.gammas[0] - p1 * rep.gammas[1] - p2 * rep.gammas[2] - p3 * rep.gammas[3]
    eye = np.eye(4, dtype=np.complex128)
    psq = p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3
    rhs = (ps + m * eye) @ (ps - m * eye)
    return float(np.max(np.abs(rhs - (psq - m * m) * eye)))


def flat_limit_residual(m: float, p_vec, M: float, rep: GammaRep) -> float:
    """Deviation of the ordinary operator from the flat one p.gamma + m.

    Evaluated on the physical branch p5 = +sqrt(M^2 - m^2): the gamma5 term
    contributes |p5 - M| (spectral norm; leading m^2/2M) and the scalar term
    |2M sin(mu/2) - m| (order 1/M^2), so the total falls off as 1/M.
    Requires the flat regime m, |p| <= M/10; exactly zero for m = 0.
    """
    _require_4d(rep)
    p_vec = tuple(float(x) for x in p_vec)
    pnorm = math.sqrt(sum(x * x for x in p_vec))
    if m > M / 10.0 or pnorm > M / 10.0:
        raise ValueError("outside the flat regime: need m, |p| <= M/10")
    p5 = math.sqrt(M * M - m * m)
    mu = math.atan2(m / M, p5 / M)
    gamma5_term = float(np.linalg.norm((p5 - M) * rep.gamma5, 2))
    scalar_term = abs(2.0 * M * math.sin(mu / 2.0) - m)
    return gamma5_term + scalar_term


def exotic_norm(m: float, p_vec, M: float, rep: GammaRep) -> float:
    """Frobenius norm of the exotic operator at rest-frame-shifted momentum;
    grows linearly in M at fixed (m, p)."""
    pt = on_shell_point(M, m, p_vec)
    return float(np.linalg.norm(dirac_operator(pt, m, rep, "exotic")))


def flat_limit_order(m: float, p_vec, m_grid, rep: GammaRep) -> float:
    """Empirical power of 1/M in the flat-limit residual over a grid of M."""
    ms = sorted(float(x) for x in m_grid)
    res = [flat_limit_residual(m, p_vec, M, rep) for M in ms]
    slopes = []
    for (m_a, r_a), (m_b, r_b) in zip(zip(ms, res), zip(ms[1:], res[1:])):
        slopes.append(math.log(r_a / r_b) / math.log(m_b / m_a))
    return min(slopes)
