"""Scalar mass arithmetic: the physical-mass relation m^2 = m1^2 - m2^2, the
bound m <= m1^2/(2 m2), and the three parametrizations (hyperbolic alpha
chart, dual branches in m, trigonometric theta chart) that realize it.

All masses are plain floats in GeV; no unit handling beyond documentation.
Every function is pure and thread-safe.
"""

import math
from dataclasses import dataclass
from typing import Literal

Branch = Literal["lower", "upper"]
Family = Literal["ordinary", "exotic"]

SQRT2 = math.sqrt(2.0)

#: alpha at which the alpha chart reaches the mass bound (sinh(alpha) = 1).
ALPHA_PEAK = math.asinh(1.0)


def physical_mass(m1: float, m2: float):
    """sqrt(m1^2 - m2^2): a float in the unbroken regime, else pure imaginary.

    The principal branch is used: non-negative real part first, then
    non-negative imaginary part, so the broken regime returns ``yj`` with
    y > 0.
    """
    d = m1 * m1 - m2 * m2
    if d >= 0.0:
        return math.sqrt(d)
    return 1j * math.sqrt(-d)


def max_mass(m1: float, m2: float) -> float:
    """The mass bound m1^2 / (2 m2); undefined in the Hermitian limit m2 <= 0."""
    if m2 <= 0.0:
        raise ValueError("mass bound undefined for m2 <= 0 (no-bound regime)")
    return m1 * m1 / (2.0 * m2)


def mass_angle(m1: float, m2: float) -> float:
    """Hyperbolic angle alpha with m1 = m cosh(alpha), m2 = m sinh(alpha).

    Requires m1 > |m2| (real positive physical mass).
    """
    if m1 <= 0.0 or abs(m2) >= m1:
        raise ValueError(f"no real mass angle for (m1, m2) = ({m1}, {m2})")
    return math.atanh(m2 / m1)


@dataclass(frozen=True)
class MassParams:
    """The (m1, m2) pair with its derived physical mass and bound."""

    m1: float
    m2: float

    @property
    def m(self):
        return physical_mass(self.m1, self.m2)

    @property
    def m_max(self) -> float:
        return max_mass(self.m1, self.m2)

    @property
    def unbroken(self) -> bool:
        return self.m1 * self.m1 >= self.m2 * self.m2


@dataclass(frozen=True)
class BranchPoint:
    """One point of the mass-parametrization curves at a fixed bound.

    (m1, m2) is the lower-branch pair and (m3, m4) the upper-branch pair,
    except for :func:`from_theta` where they are the ordinary and exotic
    family pairs at the given angle.  ``branch`` records which pair the
    construction selected; ``alpha`` and ``theta`` are the chart parameters
    of that pair (``alpha`` is ``inf`` at the chart edge tanh(alpha) -> 1).
    """

    m: float
    m_max: float
    branch: Branch
    m1: float
    m2: float
    m3: float
    m4: float
    alpha: float
    theta: float


def _atanh_safe(t: float) -> float:
    if t >= 1.0:
        return math.inf
    return math.atanh(t)


def _pair(m_max: float, x: float) -> tuple:
    # closed-form branch pair (sqrt(2) M sqrt(x), M x) with x = 1 -+ s
    return SQRT2 * m_max * math.sqrt(x), m_max * x


def from_alpha(alpha: float, m_max: float) -> BranchPoint:
    """Point of the hyperbolic chart m = 2 m_max sinh(a)/cosh(a)^2,
    m1 = 2 m_max tanh(a), m2 = 2 m_max tanh(a)^2.

    The chart pair lands on the lower branch for tanh(a) <= 1/sqrt(2) and on
    the upper branch beyond; the dual pair is filled in from the closed
    forms so the returned point always carries both.
    """
    if alpha < 0.0:
        raise ValueError("alpha must be non-negative")
    if m_max <= 0.0:
        raise ValueError("m_max must be positive")
    t = math.tanh(alpha)
    m = 2.0 * m_max * math.sinh(alpha) / math.cosh(alpha) ** 2
    chart = (2.0 * m_max * t, 2.0 * m_max * t * t)
    s = math.sqrt(max(1.0 - (m / m_max) ** 2, 0.0))
    if t <= 1.0 / SQRT2:
        branch: Branch = "lower"
        lower, upper = chart, _pair(m_max, 1.0 + s)
    else:
        branch = "upper"
        lower, upper = _pair(m_max, 1.0 - s), chart
    return BranchPoint(
        m=m,
        m_max=m_max,
        branch=branch,
        m1=lower[0],
        m2=lower[1],
        m3=upper[0],
        m4=upper[1],
        alpha=alpha,
        theta=math.asin(min(t, 1.0)),
    )


def branch_masses(m: float, m_max: float, branch: Branch) -> BranchPoint:
    """Dual-branch masses at physical mass m: with s = sqrt(1 - m^2/m_max^2),
    the lower pair is (sqrt(2) m_max sqrt(1-s), m_max (1-s)) and the upper
    pair replaces 1-s by 1+s.  Both coincide exactly at m = m_max.
    """
    if branch not in ("lower", "upper"):
        raise ValueError(f"unknown branch {branch!r}")
    if m < 0.0:
        raise ValueError("m must be non-negative")
    if m > m_max:
        raise ValueError("PT symmetry broken: no real parametrization")
    s = math.sqrt(max(1.0 - (m / m_max) ** 2, 0.0))
    x = 1.0 - s if branch == "lower" else 1.0 + s
    tanh_a = math.sqrt(x / 2.0)
    lower = _pair(m_max, 1.0 - s)
    upper = _pair(m_max, 1.0 + s)
    return BranchPoint(
        m=m,
        m_max=m_max,
        branch=branch,
        m1=lower[0],
        m2=lower[1],
        m3=upper[0],
        m4=upper[1],
        alpha=_atanh_safe(tanh_a),
        theta=math.asin(min(tanh_a, 1.0)),
    )


def from_theta(theta: float, m_max: float, family: Family = "ordinary") -> BranchPoint:
    """Trigonometric chart m = m_max sin(2 theta) with the ordinary pair
    (2 m_max sin t, 2 m_max sin^2 t) stored as (m1, m2) and the exotic pair
    (2 m_max cos t, 2 m_max cos^2 t) as (m3, m4).

    Both pairs satisfy (first)^2 - (second)^2 = m^2 on the whole chart.  The
    selected family determines which pair the branch tag and the hyperbolic
    parameter refer to.
    """
    if not 0.0 <= theta <= math.pi / 2.0:
        raise ValueError("theta must lie in [0, pi/2]")
    if m_max <= 0.0:
        raise ValueError("m_max must be positive")
    if family not in ("ordinary", "exotic"):
        raise ValueError(f"unknown family {family!r}")
    st, ct = math.sin(theta), math.cos(theta)
    m = m_max * math.sin(2.0 * theta)
    ordinary = (2.0 * m_max * st, 2.0 * m_max * st * st)
    exotic = (2.0 * m_max * ct, 2.0 * m_max * ct * ct)
    if family == "ordinary":
        tanh_a = st
        branch: Branch = "lower" if theta <= math.pi / 4.0 else "upper"
    else:
        tanh_a = ct
        branch = "upper" if theta <= math.pi / 4.0 else "lower"
    return BranchPoint(
        m=m,
        m_max=m_max,
        branch=branch,
        m1=ordinary[0],
        m2=ordinary[1],
        m3=exotic[0],
        m4=exotic[1],
        alpha=_atanh_safe(tanh_a),
        theta=theta,
    )
