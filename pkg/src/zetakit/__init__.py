"""High-precision Stieltjes constants, Hurwitz/Lerch zeta machinery,
Li/Keiper sequences, tanh-sinh quadrature, and an identity-verification
harness, built on forward-difference (binomial transform) series."""

from .precision import (
    DomainError,
    ExtReal,
    NonConvergedError,
    StirlingRow,
    atan_ext,
    bernoulli_numbers,
    binomial,
    exp_ext,
    ln_ext,
    pi_const,
    pow_int,
    sqrt_ext,
    stirling1_row,
)
from .hasse import (
    HASSE,
    SONDOW,
    PowLog,
    SeriesResult,
    Weight,
    diff_row,
    hasse_sum,
    hasse_sum_direct,
    precision_plan,
    row_cancellation,
    set_term_budget,
    term_budget,
)
from .stieltjes import (
    EmPlan,
    StieltjesValue,
    em_plan,
    closed_form,
    digamma,
    log_gamma,
    reflection_sum,
    stieltjes_all_hasse,
    stieltjes_em,
    stieltjes_hasse,
)
from .zeta import (
    PoleError,
    alt_zeta,
    alt_zeta_deriv,
    bernoulli_poly_hasse,
    hurwitz_zeta,
    hurwitz_zeta_em,
    lerch_phi,
    riemann_zeta,
    riemann_zeta_deriv,
    zeta3_binomial,
    zeta_deriv,
    zeta_deriv_at_0,
    zeta_neg_deriv,
    zeta_neg_deriv_odd,
    zeta_odd_binomial,
    zs_function,
)
from .quadrature import (
    Adamchik,
    Bose,
    BoseSquared,
    Fermi,
    LogLogRatio,
    QuadResult,
    TailLogLog,
    bose_anchor_checks,
    gamma1_via_integral,
    integrate,
)
from .likeiper import (
    LiKeiperState,
    xi_log_expansion,
    eta_coeffs,
    lambda_list,
    lambda_split,
    lambda_val,
    li_keiper_state,
    s1_sum,
    sigma_coeffs,
)
from .harness import (
    IdentityRecord,
    Report,
    UnknownIdentityError,
    registry_ids,
    run_all,
    run_identity,
)

__version__ = "0.1.0"
