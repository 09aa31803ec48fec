use thiserror::Error;

/// Errors produced by the library.
///
/// Domain violations are reported eagerly by constructors; evaluation
/// errors (support mismatches, undefined baselines, solver failures) are
/// reported by the operation that hits them. Infinite information values
/// are *not* errors: they travel as `f64::INFINITY` / `f64::NEG_INFINITY`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A distribution, constraint, or grid parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A target set fails validation.
    #[error("invalid target: {0}")]
    InvalidTarget(String),

    /// Parts of a union target are not pairwise disjoint.
    #[error("overlapping union parts: {0}")]
    OverlappingUnion(String),

    /// The target kind cannot be measured by the given distribution.
    #[error("support mismatch: {0}")]
    SupportMismatch(String),

    /// The support carries no ordering, so no CDF (or density) exists.
    #[error("unorderable support: {0}")]
    UnorderableSupport(String),

    /// The baseline assigns zero probability to the target, so active
    /// information is undefined (the endogenous term diverges).
    #[error("baseline probability of the target is zero: active information is undefined")]
    UndefinedBaseline,

    /// A moment constraint cannot be met by any distribution on the support.
    #[error("infeasible constraint: {0}")]
    Infeasible(String),

    /// The maxent solver exhausted its iteration budget. Residuals and the
    /// last multipliers are carried for diagnosis.
    #[error("no convergence after {iterations} iterations (max residual {max_residual:e})")]
    NoConvergence {
        iterations: usize,
        max_residual: f64,
        residuals: Vec<f64>,
        multipliers: Vec<f64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
