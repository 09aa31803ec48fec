//! Active information over maximum-entropy baselines.
//!
//! This crate measures how much a search or sampling process tilts
//! probability toward a target, relative to a maximum-entropy baseline
//! that encodes "no added knowledge". The central quantity is active
//! information, the log-ratio of target probabilities under an
//! alternative distribution versus the baseline; it decomposes exactly
//! into endogenous information (target difficulty under the baseline)
//! minus exogenous information (difficulty under the alternative).
//!
//! What lives where:
//!
//! * [`distributions`]: baseline families (equiprobable, uniform,
//!   geometric, exponential, normal), target-event descriptions, and
//!   the [`Distribution`] wrapper that also admits finite pmfs;
//! * [`info`]: endogenous/exogenous/active information, KL divergence,
//!   and disequilibrium measures;
//! * [`maxent`]: finite pmfs and a Newton solver for maximum-entropy
//!   pmfs under moment constraints;
//! * [`dominance`]: stochastic-dominance checks and their
//!   active-information cross-validation;
//! * [`physics`]: barometric and Maxwell-Boltzmann checkpoints tying
//!   the baselines to physical formulas;
//! * [`units`]: bits/nats/hartleys plumbing;
//! * [`special`]: the error-function kernel behind normal CDFs.

pub mod distributions;
pub mod dominance;
pub mod error;
pub mod info;
pub mod maxent;
pub mod physics;
pub mod special;
pub mod units;

pub use distributions::{BaselineSpec, Distribution, Target};
pub use dominance::{is_dominated, verify_dominance_lemma, DominanceReport, Grid, GRID_TIE};
pub use error::{Error, Result};
pub use info::{
    active_information, active_information_from_probabilities, disequilibrium_euclidean,
    disequilibrium_wootters, endogenous_information, kl_divergence, InfoReport,
};
pub use maxent::{
    pmf_entropy, solve_maxent, Feature, MaxentSolution, MomentConstraint, Pmf,
    DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, MASS_SUM_TOLERANCE,
};
pub use physics::{
    barometric_pressure_ratio, barometric_pressure_ratio_with, maxwell_boltzmann_density,
    maxwell_boltzmann_density_with, BOLTZMANN_J_PER_K, GAS_CONSTANT_J_PER_MOL_K,
    MOLAR_MASS_DRY_AIR_KG_PER_MOL, STANDARD_GRAVITY_M_PER_S2,
};
pub use units::InfoUnit;
