import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pthermit import algebra, desitter as ds

REP4 = algebra.build_gamma_rep(4)
REP2 = algebra.build_gamma_rep(2)


def test_on_shell_point_345():
    pt = ds.on_shell_point(125.0, 100.0)
    assert (pt.p0, pt.p5) == (100.0, 75.0)
    assert pt.cos_mu == pytest.approx(0.6, rel=1e-14)
    neg = ds.on_shell_point(125.0, 100.0, sign_p0=-1, sign_p5=-1)
    assert (neg.p0, neg.p5) == (-100.0, -75.0)


def test_massless_shell():
    pt = ds.on_shell_point(125.0, 0.0, (3.0, -4.0, 0.0))
    assert abs(pt.p5) == 125.0
    assert pt.cos_mu == pytest.approx(1.0)
    assert pt.mu == pytest.approx(0.0, abs=1e-7)


def test_maximal_mass_shell():
    pt = ds.on_shell_point(125.0, 125.0)
    assert pt.p5 == 0.0
    assert pt.cos_mu == pytest.approx(0.0, abs=1e-12)
    assert pt.mu == pytest.approx(math.pi / 2.0)


def test_overmass_rejected():
    with pytest.raises(ValueError, match="mass exceeds curvature radius"):
        ds.on_shell_point(125.0, 125.5)
    with pytest.raises(ValueError, match="mass exceeds curvature radius"):
        ds.sample_hyperboloid(125.0, 126.0, 8, 0)


def test_off_hyperboloid_rejected():
    with pytest.raises(ValueError, match="off the hyperboloid"):
        ds.AdSPoint(p0=1.0, p_vec=(0.0, 0.0, 0.0), p5=1.0, M=125.0)


def test_spacelike_rejected():
    # p0^2 - |p|^2 < 0 while still on the hyperboloid
    with pytest.raises(ValueError, match="spacelike"):
        ds.AdSPoint(p0=0.0, p_vec=(10.0, 0.0, 0.0), p5=math.sqrt(125.0**2 + 100.0), M=125.0)


def test_sampling_deterministic_and_on_shell():
    a = ds.sample_hyperboloid(125.0, 100.0, 32, seed=3)
    b = ds.sample_hyperboloid(125.0, 100.0, 32, seed=3)
    assert [(p.p0, p.p_vec, p.p5) for p in a] == [(p.p0, p.p_vec, p.p5) for p in b]
    signs = {(p.p0 > 0, p.p5 > 0) for p in a}
    assert len(signs) == 4  # all four sign combinations represented
    radius = 3.0 * 100.0 + 12.5
    for pt in a:
        assert abs(pt.p0**2 - sum(x * x for x in pt.p_vec) + pt.p5**2 - 125.0**2) <= 1e-10 * 125.0**2
        assert math.sqrt(sum(x * x for x in pt.p_vec)) <= radius
        assert abs(pt.mass**2 - 100.0**2) <= 1e-9 * 125.0**2


def test_sampling_rejects_bad_count():
    with pytest.raises(ValueError):
        ds.sample_hyperboloid(125.0, 0.0, 0, 1)


def test_scalar_support_frozen():
    pt = ds.on_shell_point(125.0, 100.0)
    proj = ds.scalar_component_support(pt, 100.0)
    assert abs(proj.phi1_factor) <= 1e-9 * 125.0**2
    assert proj.phi2_factor == pytest.approx(37500.0, rel=1e-12)  # 2 M (75 + 75)
    assert proj.phi2_factor == pytest.approx(4.0 * 125.0**2 * 0.6, rel=1e-12)
    assert proj.phi2_forced_zero and not proj.degenerate


def test_scalar_support_massless():
    pt = ds.on_shell_point(125.0, 0.0)
    proj = ds.scalar_component_support(pt, 0.0)
    assert proj.phi1_factor == pytest.approx(0.0, abs=1e-9)
    assert proj.phi2_factor == pytest.approx(4.0 * 125.0**2, rel=1e-12)


def test_scalar_support_degenerate_at_maximal_mass():
    pt = ds.on_shell_point(125.0, 125.0)
    proj = ds.scalar_component_support(pt, 125.0)
    assert proj.phi1_factor == pytest.approx(0.0, abs=1e-9)
    assert proj.phi2_factor == pytest.approx(0.0, abs=1e-9)
    assert proj.degenerate and not proj.phi2_forced_zero


def test_scalar_support_rejects_off_shell():
    pt = ds.on_shell_point(125.0, 100.0)
    with pytest.raises(ValueError, match="off the"):
        ds.scalar_component_support(pt, 90.0)


def test_factorization_lhs_values():
    # 2M(p5 + M cos mu) = 37500 and 2M(p5 - M cos mu) = 0 at the 3-4-5 point
    pt = ds.on_shell_point(125.0, 100.0)
    assert 2 * 125.0 * (pt.p5 + 125.0 * 0.6) == pytest.approx(37500.0)
    assert 2 * 125.0 * (pt.p5 - 125.0 * 0.6) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("which", ["eq1", "eq2", "eqK2", "eqK4"])
@pytest.mark.parametrize("shell", [(125.0, 0.0), (125.0, 100.0), (125.0, 125.0), (1e6, 1.0)])
def test_factorizations_on_sampled_points(which, shell):
    M, m = shell
    for pt in ds.sample_hyperboloid(M, m, 24, seed=5):
        report = ds.verify_factorization(pt, m, REP4, which)
        assert report.passed, (which, shell, report.residual)
        assert report.residual <= 1e-9 * M * M


def test_eqk4_sign_flip_and_note():
    pt = ds.on_shell_point(125.0, 100.0, sign_p5=-1)
    report = ds.verify_factorization(pt, 100.0, REP4, "eqK4")
    assert report.passed
    assert report.parameters["note"] == ds.K4_NOTE
    # the product really is MINUS the scalar: build it explicitly
    mu, cos_mu = math.asin(100.0 / 125.0), 0.6
    c = 2.0 * 125.0 * math.cos(mu / 2.0)
    eye = np.eye(4)
    ps = pt.p0 * REP4.gammas[0] - sum(
        pi * g for pi, g in zip(pt.p_vec, REP4.gammas[1:])
    )
    b = ps - (pt.p5 + 125.0) * REP4.gamma5
    product = (b + c * eye) @ (-b + c * eye)
    lhs = 2.0 * 125.0 * (pt.p5 - 125.0 * cos_mu)
    assert_allclose(product, -lhs * eye, atol=1e-9)
    assert abs(lhs) > 1e4  # the magnitude being matched is far from zero


def test_klein_gordon_frozen_point():
    # p = (5, 3, 0, 0), m = 4: p^2 - m^2 = 0
    assert ds.klein_gordon_factorization_residual((5.0, 3.0, 0.0, 0.0), 4.0, REP4) <= 1e-12


def test_klein_gordon_random_offshell():
    rng = np.random.default_rng(2)
    for _ in range(100):
        p4 = rng.uniform(-100.0, 100.0, 4)
        m = rng.uniform(0.0, 100.0)
        scale = float(np.sum(p4 * p4) + m * m)
        assert ds.klein_gordon_factorization_residual(p4, m, REP4) <= 1e-12 * max(scale, 1.0)


def test_dirac_operator_flat_regime():
    M = 1e6
    pt = ds.on_shell_point(M, 1.0)
    d = ds.dirac_operator(pt, 1.0, REP4, "ordinary")
    flat = 1.0 * REP4.gammas[0] + 1.0 * np.eye(4)  # p gamma + m at rest
    assert np.max(np.abs(d - flat)) <= 1e-5
    # gamma5 coefficient is p5 - M = -m^2/2M + O(M^-3)
    g5_coeff = d[0, 2]
    assert g5_coeff == pytest.approx(-0.5e-6, rel=1e-5)


def test_dirac_operator_maximal_mass_shell():
    # p5 = 0 and mu = pi/2, so the scalar terms become +-sqrt(2) M
    M = 125.0
    pt = ds.on_shell_point(M, M)
    s = math.sqrt(2.0)
    d_ord = ds.dirac_operator(pt, M, REP4, "ordinary")
    assert_allclose(d_ord, pt.p0 * REP4.gammas[0] - M * REP4.gamma5 + s * M * np.eye(4),
                    atol=1e-9)
    d_exo = ds.dirac_operator(pt, M, REP4, "exotic")
    assert_allclose(d_exo, pt.p0 * REP4.gammas[0] + M * REP4.gamma5 - s * M * np.eye(4), atol=1e-9)


def test_dirac_operator_rejects_2d():
    pt = ds.on_shell_point(125.0, 100.0)
    with pytest.raises(ValueError, match="3\\+1"):
        ds.dirac_operator(pt, 100.0, REP2)


def test_ordinary_determinant_vanishes_on_physical_branch():
    for m in (0.0, 50.0, 100.0):
        pt = ds.on_shell_point(125.0, m, (7.0, -2.0, 1.0))
        assert abs(ds.ordinary_determinant(pt, m, REP4)) <= 1e-8 * 125.0**4


def test_ordinary_determinant_nonzero_on_mirror_branch():
    pt = ds.on_shell_point(125.0, 100.0, sign_p5=-1)
    det = ds.ordinary_determinant(pt, 100.0, REP4)
    # (s^2 - x^2)^2 = (4 M^2 cos mu)^2 = 16 M^4 cos^2 mu
    assert abs(det) == pytest.approx(16.0 * 125.0**4 * 0.36, rel=1e-9)


def test_flat_limit_residual_zero_for_massless():
    assert ds.flat_limit_residual(0.0, (0.0, 0.0, 0.0), 1e4, REP4) == 0.0


def test_flat_limit_scaling():
    r1k = ds.flat_limit_residual(1.0, (0.0, 0.0, 0.0), 1e3, REP4)
    r2k = ds.flat_limit_residual(1.0, (0.0, 0.0, 0.0), 2e3, REP4)
    r1m = ds.flat_limit_residual(1.0, (0.0, 0.0, 0.0), 1e6, REP4)
    assert r1k / r2k == pytest.approx(2.0, rel=0.1)  # halving within 10%
    assert r1k / r1m == pytest.approx(1e3, rel=0.05)
    assert ds.flat_limit_order(1.0, (0.0, 0.0, 0.0), (1e3, 1e4, 1e5, 1e6), REP4) >= 0.9


def test_flat_limit_monotone_in_m():
    grid = [1e3 * 2**k for k in range(8)]
    res = [ds.flat_limit_residual(1.0, (0.1, 0.0, 0.0), M, REP4) for M in grid]
    assert all(b < a for a, b in zip(res, res[1:]))


def test_flat_limit_regime_enforced():
    with pytest.raises(ValueError, match="flat regime"):
        ds.flat_limit_residual(200.0, (0.0, 0.0, 0.0), 1e3, REP4)
    with pytest.raises(ValueError, match="flat regime"):
        ds.flat_limit_residual(1.0, (200.0, 0.0, 0.0), 1e3, REP4)


def test_exotic_norm_grows_linearly():
    norms = [ds.exotic_norm(1.0, (0.5, 0.0, 0.0), M, REP4) for M in (1e3, 1e4, 1e5, 1e6)]
    for a, b in zip(norms, norms[1:]):
        assert b / a == pytest.approx(10.0, rel=0.05)


def test_point_immutable():
    pt = ds.on_shell_point(125.0, 100.0)
    with pytest.raises(AttributeError):
        pt.p0 = 5.0
