"""pthermit: a verification-grade toolkit for the gamma5-mass Dirac model.

The Hamiltonian H = alpha.p + beta(m1 + m2 gamma5) is non-Hermitian but has
a real spectrum while m1 >= m2, with physical mass m = sqrt(m1^2 - m2^2)
bounded by m_max = m1^2/(2 m2).  The package provides the exact symmetry
operators (P, T, PT, C, Q, eta), the inner products they induce, the mass
parametrizations realizing the bound, and the curved momentum-space wave
operators whose factorizations reproduce it geometrically -- all with
numerical identity checks at pinned tolerances.
"""

from ._accel import BACKEND, HAS_NUMBA
from .algebra import (
    EigenvalueConvergenceError,
    GammaRep,
    build_gamma_rep,
    char_poly_at,
    eigenvalues,
    mat_exp_gamma5,
    mat_mul,
)
from .dirac import (
    Gamma5Hamiltonian,
    PhaseError,
    SIGN_VARIANTS,
    SpectralReport,
    build_hamiltonian,
    classify_phase,
    exp_form_residual,
    hermitian_partner,
    spectrum,
    spectrum_sweep_2d,
)
from .desitter import (
    AdSPoint,
    ScalarProjection,
    TwoComponentField,
    dirac_operator,
    flat_limit_order,
    flat_limit_residual,
    klein_gordon_factorization_residual,
    on_shell_point,
    sample_hyperboloid,
    scalar_component_support,
    verify_factorization,
)
from .innerproduct import (
    EigenbasisDiagnostics,
    cpt_inner,
    eigenbasis_diagnostics,
    eta_inner,
    eta_selfadjointness_residual,
    pt_inner,
    pt_pairing,
)
from .massdomain import (
    ALPHA_PEAK,
    BranchPoint,
    MassParams,
    branch_masses,
    from_alpha,
    from_theta,
    mass_angle,
    max_mass,
    physical_mass,
)
from .symmetry import (
    MomentumOperator,
    OperatorCheckReport,
    c_operator,
    eta0_operator,
    eta_operator,
    parity,
    pseudo_hermiticity_check,
    pt_operator,
    q_operator,
    time_reversal,
    verify_c_conditions,
)
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "ALPHA_PEAK",
    "AdSPoint",
    "BACKEND",
    "BranchPoint",
    "EigenbasisDiagnostics",
    "EigenvalueConvergenceError",
    "Gamma5Hamiltonian",
    "GammaRep",
    "HAS_NUMBA",
    "MassParams",
    "MomentumOperator",
    "OperatorCheckReport",
    "PhaseError",
    "SIGN_VARIANTS",
    "ScalarProjection",
    "SpectralReport",
    "TwoComponentField",
    "VerifyReport",
    "branch_masses",
    "build_gamma_rep",
    "build_hamiltonian",
    "c_operator",
    "char_poly_at",
    "classify_phase",
    "cpt_inner",
    "dirac_operator",
    "eigenbasis_diagnostics",
    "eigenvalues",
    "eta0_operator",
    "eta_inner",
    "eta_operator",
    "eta_selfadjointness_residual",
    "exp_form_residual",
    "flat_limit_order",
    "flat_limit_residual",
    "from_alpha",
    "from_theta",
    "hermitian_partner",
    "klein_gordon_factorization_residual",
    "mass_angle",
    "mat_exp_gamma5",
    "mat_mul",
    "max_mass",
    "on_shell_point",
    "parity",
    "physical_mass",
    "pseudo_hermiticity_check",
    "pt_inner",
    "pt_operator",
    "pt_pairing",
    "q_operator",
    "run_suite",
    "sample_hyperboloid",
    "scalar_component_support",
    "spectrum",
    "spectrum_sweep_2d",
    "time_reversal",
    "verify_c_conditions",
    "verify_factorization",
]
