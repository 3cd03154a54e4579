"""Randomized verification suites behind ``pthermit verify``.

Each suite aggregates the identity checks of one module family into
:class:`~pthermit.symmetry.OperatorCheckReport` rows with pinned tolerances.
Suites are deterministic given (samples, seed) and independent of each
other; checks are sorted by name before serialization so report files are
stable.
"""

import math
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from . import algebra, desitter, dirac, innerproduct, massdomain, symmetry
from .dirac import PhaseError
from .symmetry import OperatorCheckReport

DESITTER_SHELLS = ((125.0, 0.0), (125.0, 100.0), (125.0, 125.0), (1e6, 1.0))
FLAT_M_GRID = (1e3, 1e4, 1e5, 1e6)


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple
    passed: bool
    seed: int
    timestamp: str

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                    "parameters": c.parameters or {},
                }
                for c in self.checks
            ],
            "passed": self.passed,
            "seed": self.seed,
            "timestamp": self.timestamp,
        }


def _report(checks, suite, seed) -> VerifyReport:
    checks = tuple(sorted(checks, key=lambda c: c.name))
    return VerifyReport(
        suite=suite,
        checks=checks,
        passed=all(c.passed for c in checks),
        seed=seed,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def _sample_masses(rng, samples):
    m1 = rng.uniform(0.1, 1000.0, samples)
    m2 = m1 * rng.uniform(1e-4, 0.999, samples)
    p = rng.uniform(-1000.0, 1000.0, samples)
    return p, m1, m2


def operator_suite(samples: int = 1000, seed: int = 7) -> VerifyReport:
    """Symmetry-operator identities plus the spectral law, in the 2D basis."""
    rng = np.random.default_rng(seed)
    rep = algebra.build_gamma_rep(2)
    p, m1, m2 = _sample_masses(rng, samples)
    pair = innerproduct.pt_pairing(rep)
    pt = symmetry.pt_operator(rep)

    worst = {
        "c_squared": 0.0,
        "c_pt_commutator": 0.0,
        "c_hamiltonian_commutator": 0.0,
        "c_closed_form": 0.0,
        "c_exp_q_parity": 0.0,
        "q_conjugation": 0.0,
        "pseudo_hermiticity": 0.0,
        "eta_hermitization": 0.0,
        "similarity_isospectral": 0.0,
        "parity_mass_flip": 0.0,
        "time_reversal_mass_flip": 0.0,
        "pt_invariance": 0.0,
        "exp_form": 0.0,
        "cpt_norm_closed_form": 0.0,
        "eta_selfadjointness": 0.0,
    }

    for i in range(samples):
        h = dirac.build_hamiltonian(rep, p[i], m1[i], m2[i])
        hnorm = max(1.0, float(np.max(np.abs(h.matrix))))
        m = massdomain.physical_mass(m1[i], m2[i])
        alpha = massdomain.mass_angle(m1[i], m2[i])
        c = symmetry.c_operator(m1[i], m2[i], rep)

        for rep_check in symmetry.verify_c_conditions(c, h, pt):
            key = rep_check.name
            worst[key] = max(worst[key], rep_check.residual)

        c1 = np.array([[0.0, (m1[i] - m2[i]) / m], [(m1[i] + m2[i]) / m, 0.0]])
        worst["c_closed_form"] = max(
            worst["c_closed_form"],
            float(np.max(np.abs(c.matrix - c1))) / max(1.0, float(np.max(np.abs(c1)))),
        )

        q = symmetry.q_operator(m1[i], m2[i], rep)
        alpha_q = float(-q.matrix[0, 0].real)  # Q = -alpha gamma5 in this basis
        exp_q = algebra.mat_exp_gamma5(-alpha_q, rep)  # e^{Q}
        worst["c_exp_q_parity"] = max(
            worst["c_exp_q_parity"],
            float(np.max(np.abs(c.matrix - exp_q @ rep.gamma0))),
        )
        exp_mq = algebra.mat_exp_gamma5(alpha_q, rep)  # e^{-Q}
        worst["q_conjugation"] = max(
            worst["q_conjugation"],
            float(np.max(np.abs(exp_mq @ h.matrix @ exp_q - h.matrix.conj().T))) / hnorm,
        )

        worst["pseudo_hermiticity"] = max(
            worst["pseudo_hermiticity"],
            symmetry.pseudo_hermiticity_check(h).residual / hnorm,
        )

        h0 = dirac.hermitian_partner(h)
        worst["eta_hermitization"] = max(
            worst["eta_hermitization"],
            float(np.max(np.abs(h0 - h0.conj().T))) / hnorm,
        )
        e_h = algebra.eigenvalues(h.matrix)
        e_h0 = algebra.eigenvalues(h0)
        escale = max(1.0, float(np.max(np.abs(e_h))))
        worst["similarity_isospectral"] = max(
            worst["similarity_isospectral"], float(np.max(np.abs(e_h - e_h0))) / escale
        )

        flipped = h.with_m2_flipped().matrix
        for name, op in (("parity_mass_flip", symmetry.parity(rep)),
                         ("time_reversal_mass_flip", symmetry.time_reversal(rep))):
            conj = symmetry.conjugated_hamiltonian_matrix(op, h)
            worst[name] = max(worst[name], float(np.max(np.abs(conj - flipped))) / hnorm)
        ptconj = symmetry.conjugated_hamiltonian_matrix(pt, h)
        worst["pt_invariance"] = max(
            worst["pt_invariance"], float(np.max(np.abs(ptconj - h.matrix))) / hnorm
        )

        worst["exp_form"] = max(worst["exp_form"], dirac.exp_form_residual(h) / m1[i])

        psi = rng.normal(size=2) + 1j * rng.normal(size=2)
        phi = rng.normal(size=2) + 1j * rng.normal(size=2)
        x, y = psi[0].real, psi[0].imag
        u, v = psi[1].real, psi[1].imag
        closed = (m1[i] - m2[i]) / m * (x * x + y * y) + (m1[i] + m2[i]) / m * (u * u + v * v)
        got = innerproduct.cpt_inner(psi, psi, c, pair)
        worst["cpt_norm_closed_form"] = max(
            worst["cpt_norm_closed_form"], abs(got - closed) / max(abs(closed), 1e-300)
        )
        scale = max(1.0, float(np.max(np.abs(h.matrix))) * float(np.linalg.norm(psi)) *
                    float(np.linalg.norm(phi)) * math.exp(abs(alpha)))
        worst["eta_selfadjointness"] = max(
            worst["eta_selfadjointness"],
            innerproduct.eta_selfadjointness_residual(h, psi, phi) / scale,
        )

    checks = [
        OperatorCheckReport("c_squared", worst["c_squared"], 1e-12),
        OperatorCheckReport("c_pt_commutator", worst["c_pt_commutator"], 1e-12),
        OperatorCheckReport("c_hamiltonian_commutator", worst["c_hamiltonian_commutator"], 1e-12),
        OperatorCheckReport("c_closed_form", worst["c_closed_form"], 1e-13),
        OperatorCheckReport("c_exp_q_parity", worst["c_exp_q_parity"], 1e-13),
        OperatorCheckReport("q_conjugation", worst["q_conjugation"], 1e-12),
        OperatorCheckReport("pseudo_hermiticity", worst["pseudo_hermiticity"], 1e-12),
        OperatorCheckReport("eta_hermitization", worst["eta_hermitization"], 1e-12),
        OperatorCheckReport("similarity_isospectral", worst["similarity_isospectral"], 1e-10),
        OperatorCheckReport("parity_mass_flip", worst["parity_mass_flip"], 1e-12),
        OperatorCheckReport("time_reversal_mass_flip", worst["time_reversal_mass_flip"], 1e-12),
        OperatorCheckReport("pt_invariance", worst["pt_invariance"], 1e-12),
        OperatorCheckReport("exp_form", worst["exp_form"], 1e-12),
        OperatorCheckReport("cpt_norm_closed_form", worst["cpt_norm_closed_form"], 1e-12),
        OperatorCheckReport("eta_selfadjointness", worst["eta_selfadjointness"], 1e-11),
    ]

    # spectral law over the batched sweep, all four variants
    spec_worst = 0.0
    for variant in dirac.SIGN_VARIANTS:
        eigs = dirac.spectrum_sweep_2d(p, m1, m2, variant)
        lam = np.sqrt(p * p + m1 * m1 - m2 * m2 + 0j)
        expected = np.stack([-lam, lam], axis=1)
        scale = np.maximum(np.abs(lam), 1.0)
        spec_worst = max(
            spec_worst, float(np.max(np.abs(eigs - expected) / scale[:, None]))
        )
    checks.append(OperatorCheckReport("spectral_law", spec_worst, 1e-10))

    # broken and boundary phases must be rejected by the operator builders
    bad = 0
    for i in range(min(samples, 64)):
        mm2 = m1[i] * (1.0 + 0.5 * (i % 3))  # m2 >= m1
        for builder in (symmetry.c_operator, symmetry.eta_operator):
            try:
                builder(m1[i], mm2, rep)
                bad += 1
            except PhaseError:
                pass
    checks.append(OperatorCheckReport("broken_phase_rejection", float(bad), 0.0))

    return _report(checks, "operators", seed)


def massdomain_suite(samples: int = 1000, seed: int = 7) -> VerifyReport:
    """Parametrization identities on dense grids plus random round trips."""
    rng = np.random.default_rng(seed)
    m_max = 125.0
    checks = []

    alphas = np.linspace(0.0, 10.0, max(samples, 100))
    pts = [massdomain.from_alpha(a, m_max) for a in alphas]
    bound = max((pt.m - m_max) / m_max for pt in pts)
    checks.append(OperatorCheckReport("alpha_mass_bound", bound, 1e-14))
    ident = max(abs((pt.m1**2 - pt.m2**2 - pt.m**2) / m_max**2) for pt in pts)
    checks.append(OperatorCheckReport("alpha_mass_identity", ident, 1e-12))
    ident_up = max(abs((pt.m3**2 - pt.m4**2 - pt.m**2) / m_max**2) for pt in pts)
    checks.append(OperatorCheckReport("alpha_dual_identity", ident_up, 1e-12))

    fine = np.arange(0.86, 0.90, 1e-5)
    peak = fine[int(np.argmax([massdomain.from_alpha(a, m_max).m for a in fine]))]
    checks.append(
        OperatorCheckReport(
            "alpha_peak_location",
            abs(peak - massdomain.ALPHA_PEAK),
            1e-3,
            parameters={"alpha_peak": float(peak)},
        )
    )

    rt = 0.0
    for m in rng.uniform(0.0, m_max, samples):
        for branch in ("lower", "upper"):
            bp = massdomain.branch_masses(m, m_max, branch)
            back = massdomain.from_alpha(min(bp.alpha, 30.0), m_max)
            sel = (bp.m1, bp.m2) if branch == "lower" else (bp.m3, bp.m4)
            chart = (back.m1, back.m2) if branch == "lower" else (back.m3, back.m4)
            rt = max(rt, abs(sel[0] - chart[0]) / m_max, abs(sel[1] - chart[1]) / m_max)
    checks.append(OperatorCheckReport("branch_roundtrip", rt, 1e-10))

    thetas = np.linspace(0.0, math.pi / 2.0, max(samples, 100))
    tid, order = 0.0, 0.0
    for t in thetas:
        bp = massdomain.from_theta(t, m_max)
        tid = max(
            tid,
            abs(bp.m1**2 - bp.m2**2 - bp.m**2) / m_max**2,
            abs(bp.m3**2 - bp.m4**2 - bp.m**2) / m_max**2,
        )
        order = max(order, bp.m4 - bp.m3)
    checks.append(OperatorCheckReport("theta_identities", tid, 1e-12))
    checks.append(OperatorCheckReport("theta_ordering", order, 0.0))

    at_max = massdomain.branch_masses(m_max, m_max, "lower")
    dual_gap = max(abs(at_max.m1 - at_max.m3), abs(at_max.m2 - at_max.m4))
    checks.append(OperatorCheckReport("branch_duality_at_mmax", dual_gap / m_max, 1e-14))
    interior = [massdomain.branch_masses(m, m_max, "lower")
                for m in np.linspace(0.05 * m_max, 0.95 * m_max, 64)]
    sep = min(pt.m3 - pt.m1 for pt in interior)
    checks.append(OperatorCheckReport("branch_separation_interior", -sep, 0.0))

    ms = np.linspace(0.0, m_max, 256)
    m1s = [massdomain.branch_masses(m, m_max, "lower").m1 for m in ms]
    m2s = [massdomain.branch_masses(m, m_max, "lower").m2 for m in ms]
    mono = 0.0 if all(b > a for a, b in zip(m1s, m1s[1:])) and all(
        b > a for a, b in zip(m2s, m2s[1:])
    ) else 1.0
    checks.append(OperatorCheckReport("branch_monotonicity", mono, 0.0))

    broken = 0.0
    try:
        massdomain.branch_masses(1.0001 * m_max, m_max, "lower")
        broken = 1.0
    except ValueError:
        pass
    checks.append(OperatorCheckReport("broken_chart_rejection", broken, 0.0))

    return _report(checks, "massdomain", seed)


def desitter_suite(samples: int = 1000, seed: int = 7) -> VerifyReport:
    """Factorizations, scalar projection and limit behavior on seeded shells."""
    rng = np.random.default_rng(seed)
    rep = algebra.build_gamma_rep(4)
    checks = []

    fact_worst = {"eq1": 0.0, "eq2": 0.0, "eqK2": 0.0, "eqK4": 0.0}
    phi1_worst = 0.0
    phi2_worst = 0.0
    det_worst = 0.0
    per_shell = max(4, samples // len(DESITTER_SHELLS))
    for M, m in DESITTER_SHELLS:
        for pt in desitter.sample_hyperboloid(M, m, per_shell, seed):
            for which in ("eq1", "eq2", "eqK2", "eqK4"):
                r = desitter.verify_factorization(pt, m, rep, which)
                fact_worst[which] = max(fact_worst[which], r.residual / (M * M))
            proj = desitter.scalar_component_support(pt, m)
            phi1_worst = max(phi1_worst, abs(proj.phi1_factor) / (M * M))
            if m < M:
                target = 4.0 * M * M * pt.cos_mu
                phi2_worst = max(phi2_worst, abs(proj.phi2_factor - target) / target)
            if pt.p5 > 0.0:
                det_worst = max(
                    det_worst, abs(desitter.ordinary_determinant(pt, m, rep)) / M**4
                )
    for which in ("eq1", "eq2", "eqK2", "eqK4"):
        params = {"shells": [list(s) for s in DESITTER_SHELLS]}
        if which == "eqK4":
            params["note"] = desitter.K4_NOTE
        checks.append(
            OperatorCheckReport(
                f"factorization_{which}", fact_worst[which], 1e-9, parameters=params
            )
        )
    checks.append(OperatorCheckReport("scalar_projection_phi1", phi1_worst, 1e-9))
    checks.append(OperatorCheckReport("scalar_projection_phi2", phi2_worst, 1e-10))
    checks.append(OperatorCheckReport("ordinary_det_onshell", det_worst, 1e-8))

    offshell = 0.0
    for _ in range(min(samples, 256)):
        p4 = rng.uniform(-1000.0, 1000.0, 4)
        m = rng.uniform(0.0, 1000.0)
        scale = max(1.0, float(np.sum(p4 * p4) + m * m))
        offshell = max(
            offshell, desitter.klein_gordon_factorization_residual(p4, m, rep) / scale
        )
    checks.append(OperatorCheckReport("factorization_eqK2_offshell", offshell, 1e-12))

    order = desitter.flat_limit_order(1.0, (0.0, 0.0, 0.0), FLAT_M_GRID, rep)
    checks.append(
        OperatorCheckReport(
            "flat_limit_order", 0.9 - order, 0.0, parameters={"order": order}
        )
    )
    halving = abs(
        desitter.flat_limit_residual(1.0, (0.0, 0.0, 0.0), 1e3, rep)
        / desitter.flat_limit_residual(1.0, (0.0, 0.0, 0.0), 2e3, rep)
        - 2.0
    )
    checks.append(OperatorCheckReport("flat_limit_halving", halving, 0.2))

    growth = 0.0
    norms = [desitter.exotic_norm(1.0, (0.5, 0.0, 0.0), M, rep) for M in FLAT_M_GRID]
    for n_a, n_b in zip(norms, norms[1:]):
        growth = max(growth, abs(n_b / n_a - 10.0) / 10.0)
    checks.append(OperatorCheckReport("exotic_linear_growth", growth, 0.05))

    closure = 0.0
    for M, m in DESITTER_SHELLS:
        for pt in desitter.sample_hyperboloid(M, m, 16, seed + 1):
            gap = pt.p0**2 - sum(x * x for x in pt.p_vec) + pt.p5**2 - M * M
            closure = max(closure, abs(gap) / (M * M))
    checks.append(OperatorCheckReport("hyperboloid_closure", closure, 1e-10))

    overmass = 0.0
    try:
        desitter.sample_hyperboloid(125.0, 126.0, 4, seed)
        overmass = 1.0
    except ValueError:
        pass
    checks.append(OperatorCheckReport("overmass_rejection", overmass, 0.0))

    return _report(checks, "desitter", seed)


SUITES = {
    "operators": operator_suite,
    "massdomain": massdomain_suite,
    "desitter": desitter_suite,
}


def run_suite(name: str, samples: int = 1000, seed: int = 7) -> VerifyReport:
    """Run one named suite, or the union of all of them under name 'all'."""
    if name == "all":
        reports = [fn(samples, seed) for fn in SUITES.values()]
        checks = []
        for rep in reports:
            for c in rep.checks:
                checks.append(
                    OperatorCheckReport(
                        f"{rep.suite}.{c.name}", c.residual, c.tolerance, c.parameters
                    )
                )
        return _report(checks, "all", seed)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](samples, seed)
