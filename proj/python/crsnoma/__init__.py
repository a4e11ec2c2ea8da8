"""CRS-NOMA receive-diversity rate and outage analysis.

Thin python surface over the C++ core: closed-form average rates and
outage probabilities for the NOMA cooperative relaying system with SC and
MRC reception, plus the quadrature and Monte Carlo oracles.
"""

from ._core import (  # noqa: F401
    Combiner,
    DerivedConstants,
    DiversityAsymptote,
    FeasibilityReport,
    McEstimate,
    McOutage,
    McRate,
    Method,
    OmaCombiner,
    OutageValue,
    Quantity,
    RateKind,
    RateResult,
    Scheme,
    SweepOptions,
    SystemConfig,
    cdf_mrc_gain,
    cdf_sc_gain,
    db_to_linear,
    derive_constants,
    diversity_asymptote_s1,
    diversity_asymptote_s2,
    exp_scaled_upper_gamma_neg_int,
    exp_scaled_upper_gamma_zero,
    linear_to_db,
    mc_outage,
    mc_rate,
    oma_second_hop_cdf,
    outage_s1,
    outage_s2,
    quad_rate,
    rate_s1_mrc,
    rate_s1_sc,
    rate_s2_mrc,
    rate_s2_sc,
    rate_sum_mrc,
    rate_sum_sc,
    regularized_lower_gamma,
    sweep_csv,
    upper_gamma_neg_int,
    upper_gamma_zero,
    validate_noma_feasibility,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"


def paper_default_config() -> SystemConfig:
    """The experiment section's channel profile and power split."""
    cfg = SystemConfig()
    cfg.omega_sd = 1.0
    cfg.omega_sr = 10.0
    cfg.omega_rd = 2.5
    cfg.a1 = 0.9
    cfg.a2 = 0.1
    cfg.r1 = 1.0
    cfg.r2 = 1.0
    return cfg
