import numpy as np
import pytest
from numpy.testing import assert_allclose

from pthermit import algebra, dirac, symmetry as sym
from pthermit.dirac import PhaseError

REP2 = algebra.build_gamma_rep(2)
REP4 = algebra.build_gamma_rep(4)
H533 = dirac.build_hamiltonian(REP2, 3.0, 5.0, 3.0)


def _random_unbroken(rng):
    m1 = rng.uniform(0.1, 500.0)
    m2 = m1 * rng.uniform(0.0, 0.999)
    p = rng.uniform(-500.0, 500.0)
    return p, m1, m2


def test_parity_squares_to_identity():
    p = sym.parity(REP2)
    p2 = p.compose(p)
    assert_allclose(p2.matrix, np.eye(2))
    assert not p2.flips_momentum and not p2.antilinear


def test_parity_flips_m2():
    p = sym.parity(REP2)
    got = sym.conjugated_hamiltonian_matrix(p, H533)
    assert_allclose(got, [[-3, 8], [2, 3]])
    assert_allclose(got, H533.with_m2_flipped().matrix)


def test_parity_preserves_hermitian_hamiltonian():
    h0 = dirac.build_hamiltonian(REP2, 3.0, 5.0, 0.0)
    got = sym.conjugated_hamiltonian_matrix(sym.parity(REP2), h0)
    assert_allclose(got, h0.matrix)


def test_parity_flips_m2_in_4d():
    h = dirac.build_hamiltonian(REP4, (1.0, -2.0, 0.7), 5.0, 3.0)
    got = sym.conjugated_hamiltonian_matrix(sym.parity(REP4), h)
    assert_allclose(got, h.with_m2_flipped().matrix, atol=1e-13)


def test_time_reversal_squares_to_identity():
    t = sym.time_reversal(REP2)
    t2 = t.compose(t)
    assert_allclose(t2.matrix, np.eye(2))
    assert not t2.flips_momentum and not t2.antilinear


def test_time_reversal_flips_m2():
    t = sym.time_reversal(REP2)
    assert_allclose(sym.conjugated_hamiltonian_matrix(t, H533), [[-3, 8], [2, 3]])


def test_time_reversal_preserves_hermitian_hamiltonian():
    h0 = dirac.build_hamiltonian(REP2, 3.0, 5.0, 0.0)
    got = sym.conjugated_hamiltonian_matrix(sym.time_reversal(REP2), h0)
    assert_allclose(got, h0.matrix)


def test_pt_invariance():
    pt = sym.pt_operator(REP2)
    assert pt.antilinear and not pt.flips_momentum
    assert_allclose(pt.matrix, np.eye(2))
    for variant in dirac.SIGN_VARIANTS:
        h = dirac.build_hamiltonian(REP2, 3.0, 5.0, 3.0, variant)
        got = sym.conjugated_hamiltonian_matrix(pt, h)
        assert np.max(np.abs(got - h.matrix)) <= 1e-12 * np.max(np.abs(h.matrix))


def test_c_matrix_frozen():
    c = sym.c_operator(5.0, 3.0, REP2)
    assert_allclose(c.matrix, [[0.0, 0.5], [2.0, 0.0]], atol=1e-15)
    assert c.flips_momentum and not c.antilinear


def test_c_reduces_to_parity_in_hermitian_limit():
    c = sym.c_operator(5.0, 0.0, REP2)
    assert_allclose(c.matrix, REP2.gamma0)


def test_c_equals_exp_q_times_parity():
    rng = np.random.default_rng(2)
    for _ in range(100):
        _, m1, m2 = _random_unbroken(rng)
        c = sym.c_operator(m1, m2, REP2)
        q = sym.q_operator(m1, m2, REP2)
        alpha = float(-q.matrix[0, 0].real)
        closed = algebra.mat_exp_gamma5(-alpha, REP2) @ REP2.gamma0
        assert np.max(np.abs(c.matrix - closed)) <= 1e-13


def test_c_rejects_broken_and_boundary():
    with pytest.raises(PhaseError, match="C undefined"):
        sym.c_operator(3.0, 5.0, REP2)
    with pytest.raises(PhaseError):
        sym.c_operator(3.0, 3.0, REP2)
    with pytest.raises(PhaseError):
        sym.eta_operator(3.0, 5.0, REP2)


def test_eta_frozen():
    eta = sym.eta_operator(5.0, 3.0, REP2)
    s = np.sqrt(2.0)
    assert_allclose(eta.matrix, np.diag([s, 1.0 / s]), rtol=1e-15)
    assert not eta.flips_momentum and not eta.antilinear


def test_eta_identity_in_hermitian_limit():
    assert_allclose(sym.eta_operator(5.0, 0.0, REP2).matrix, np.eye(2))


def test_eta_squared_is_eta0():
    eta = sym.eta_operator(5.0, 3.0, REP2)
    eta0 = sym.eta0_operator(5.0, 3.0, REP2)
    assert_allclose(eta.compose(eta).matrix, eta0.matrix, rtol=1e-15)
    assert_allclose(eta0.matrix, np.diag([2.0, 0.5]), rtol=1e-15)


def test_pseudo_hermiticity_frozen():
    report = sym.pseudo_hermiticity_check(H533)
    assert report.passed
    assert report.residual <= 1e-13
    assert report.parameters == {"p": [3.0], "m1": 5.0, "m2": 3.0}
    # the conjugation lands exactly on the adjoint
    eta0 = algebra.mat_exp_gamma5(np.arctanh(3.0 / 5.0), REP2)
    got = eta0 @ H533.matrix @ algebra.mat_exp_gamma5(-np.arctanh(3.0 / 5.0), REP2)
    assert_allclose(got, [[-3, 8], [2, 3]], rtol=1e-14, atol=1e-13)


def test_pseudo_hermiticity_trivial_when_hermitian():
    h = dirac.build_hamiltonian(REP2, 3.0, 5.0, 0.0)
    assert sym.pseudo_hermiticity_check(h).residual == 0.0


def test_pseudo_hermiticity_sweep():
    rng = np.random.default_rng(9)
    for _ in range(300):
        p, m1, m2 = _random_unbroken(rng)
        h = dirac.build_hamiltonian(REP2, p, m1, m2)
        assert sym.pseudo_hermiticity_check(h).passed


def test_pseudo_hermiticity_rejects_broken():
    with pytest.raises(PhaseError):
        sym.pseudo_hermiticity_check(dirac.build_hamiltonian(REP2, 1.0, 3.0, 5.0))


def test_pseudo_hermiticity_4d():
    h = dirac.build_hamiltonian(REP4, (0.4, 1.0, -2.0), 5.0, 3.0)
    assert sym.pseudo_hermiticity_check(h).passed


def test_verify_c_conditions_frozen_product():
    c = sym.c_operator(5.0, 3.0, REP2)
    frozen = np.array([[4.0, -1.5], [6.0, 4.0]])
    hm = dirac.build_hamiltonian(REP2, -3.0, 5.0, 3.0).matrix
    assert_allclose(c.matrix @ hm, frozen, atol=1e-14)
    assert_allclose(H533.matrix @ c.matrix, frozen, atol=1e-14)


def test_verify_c_conditions_reports():
    c = sym.c_operator(5.0, 3.0, REP2)
    pt = sym.pt_operator(REP2)
    reports = sym.verify_c_conditions(c, H533, pt)
    names = [r.name for r in reports]
    assert names == ["c_squared", "c_pt_commutator", "c_hamiltonian_commutator"]
    assert all(r.passed for r in reports)


def test_verify_c_conditions_sweep():
    rng = np.random.default_rng(14)
    pt = sym.pt_operator(REP2)
    for _ in range(200):
        p, m1, m2 = _random_unbroken(rng)
        h = dirac.build_hamiltonian(REP2, p, m1, m2)
        c = sym.c_operator(m1, m2, REP2)
        assert all(r.passed for r in sym.verify_c_conditions(c, h, pt))


def test_q_conjugation_gives_adjoint():
    rng = np.random.default_rng(17)
    for _ in range(100):
        p, m1, m2 = _random_unbroken(rng)
        h = dirac.build_hamiltonian(REP2, p, m1, m2)
        q = sym.q_operator(m1, m2, REP2)
        alpha = float(-q.matrix[0, 0].real)
        e_q = algebra.mat_exp_gamma5(-alpha, REP2)
        e_mq = algebra.mat_exp_gamma5(alpha, REP2)
        adj = e_mq @ h.matrix @ e_q
        assert np.max(np.abs(adj - h.matrix.conj().T)) <= 1e-12 * np.max(np.abs(h.matrix))


def test_compose_flag_algebra():
    p = sym.parity(REP2)
    t = sym.time_reversal(REP2)
    pt = p.compose(t)
    assert (pt.flips_momentum, pt.antilinear) == (False, True)
    tp = t.compose(p)
    assert pt.same_as(tp)


def test_compose_conjugates_right_matrix_when_left_antilinear():
    a = sym.MomentumOperator(np.array([[1j, 0], [0, 1]]), False, True)
    b = sym.MomentumOperator(np.array([[2j, 0], [0, 1]]), False, False)
    ab = a.compose(b)
    assert_allclose(ab.matrix, np.array([[1j * (-2j), 0], [0, 1]]))


def test_inverse_roundtrip():
    for op in (sym.parity(REP2), sym.time_reversal(REP2), sym.c_operator(5.0, 3.0, REP2)):
        ident = op.compose(op.inverse())
        assert_allclose(ident.matrix, np.eye(2), atol=1e-14)
        assert not ident.flips_momentum and not ident.antilinear


def test_apply_fixed_p_shape_check():
    with pytest.raises(ValueError):
        sym.parity(REP2).apply_fixed_p([1.0, 2.0, 3.0])


def test_apply_fixed_p_antilinear_conjugates():
    t = sym.time_reversal(REP2)
    out = t.apply_fixed_p([1j, 0.0])
    assert_allclose(out, [0.0, -1j])
