"""Schwarzian and pre-Schwarzian norms for the Robertson class S_alpha."""

from ._core import (  # noqa: F401
    CertReport,
    DomainError,
    Error,
    DieudonneReport,
    GridConfig,
    NormResult,
    ParseError,
    Regime,
    RobertsonFunction,
    SchwarzFunction,
    SpiralAlpha,
    TaylorSeries,
    __version__,
    cmd_bound,
    cmd_extremal,
    cmd_norm,
    cmd_sweep,
    delta,
    dieudonne_report,
    extremal_attaining,
    extremal_b,
    extremal_f0,
    extremal_fz0p,
    extremal_p,
    extremal_value,
    g_profile,
    h_poly,
    make_blaschke2,
    make_blaschke_fix0,
    make_rotation,
    membership_min,
    norm_pre_schwarzian,
    norm_schwarzian,
    parse_spec,
    pointwise_bound,
    pre_schwarzian_norm_bound,
    robertson_from_omega,
    s0,
    schwarz_certify,
    schwarzian_norm_bound,
    schwarzian_via_omega,
    series_compose,
    series_derivative,
    series_div,
    series_exp,
    series_integrate,
    series_mul,
    verify,
)
