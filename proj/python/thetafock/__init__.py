"""Automorphic reproducing kernels on lattices: python bindings.

Thin wrapper around the C++ core; see the package README for the
mathematical conventions (lattice orientation, character extension,
truncation policies).
"""

from ._core import (  # noqa: F401
    CoeffRequest,
    CriterionResult,
    FundamentalCell,
    Lattice,
    LatticePoint,
    LocatedZero,
    MuInvariant,
    ParityReport,
    ParityRow,
    PseudoCharacter,
    SumResult,
    ThetaFockSpace,
    ThetaIdentityReport,
    ThetafockError,
    WeierstrassData,
    XiProbeResult,
    ZeroCountResult,
    ZeroList,
    bi_invariance_residual,
    coeff,
    conj_symmetry_residual,
    gaussian_char_sum,
    genfun1_residual,
    genfun2_residual,
    hermite_eval,
    kernel_eval,
    kernel_eval_series,
    kernel_via_poincare,
    modified_sigma,
    mu_invariant,
    parity_report,
    poincare_monomial,
    recurrence_residuals,
    reproducing_residual,
    run_acceptance,
    scaling_residual,
    sigma_factor_default_samples,
    sigma_factor_residual,
    theta2,
    theta3,
    theta_identity_report,
    theta_identity_residual,
    xi_probe,
    zero_count,
    zero_locate,
)

__version__ = "0.1.0"
