//! Moment-matching fits of baseline families to observed data.
//!
//! Each family's sufficient statistics come straight from its
//! maximum-entropy characterization: sample mean for exponential and
//! geometric, mean and population variance for normal, observed range
//! (or explicit bounds) for uniform, and the count of distinct values
//! for equiprobable.

use std::str::FromStr;

use activeinfo::BaselineSpec;

use crate::dataset::{Dataset, DatasetKind};
use crate::errors::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitFamily {
    Equiprobable,
    Uniform,
    Geometric,
    Exponential,
    Normal,
}

impl FromStr for FitFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "equiprobable" => Ok(FitFamily::Equiprobable),
            "uniform" => Ok(FitFamily::Uniform),
            "geometric" => Ok(FitFamily::Geometric),
            "exponential" => Ok(FitFamily::Exponential),
            "normal" => Ok(FitFamily::Normal),
            other => Err(format!(
                "unknown family '{other}' (expected equiprobable, uniform, geometric, exponential, or normal)"
            )),
        }
    }
}

impl FitFamily {
    pub fn name(self) -> &'static str {
        match self {
            FitFamily::Equiprobable => "equiprobable",
            FitFamily::Uniform => "uniform",
            FitFamily::Geometric => "geometric",
            FitFamily::Exponential => "exponential",
            FitFamily::Normal => "normal",
        }
    }
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Fit `family` to `data`. `bound_a`/`bound_b` override the observed
/// range for the uniform family only.
pub fn fit_baseline(
    family: FitFamily,
    data: &Dataset,
    bound_a: Option<f64>,
    bound_b: Option<f64>,
) -> Result<BaselineSpec, CliError> {
    if !matches!(family, FitFamily::Uniform) && (bound_a.is_some() || bound_b.is_some()) {
        return Err(CliError::Usage(format!(
            "--a/--b only apply to the uniform family, not {}",
            family.name()
        )));
    }
    if matches!(family, FitFamily::Equiprobable) {
        let n = match &data.kind {
            DatasetKind::Labeled(rows) => rows.len(),
            DatasetKind::Numeric(values) => {
                let mut sorted = values.clone();
                sorted.sort_by(f64::total_cmp);
                sorted.dedup_by(|a, b| a.to_bits() == b.to_bits());
                sorted.len()
            }
        };
        return Ok(BaselineSpec::equiprobable(n)?);
    }

    let values = data.numeric()?;
    let m = mean(values);
    let spec = match family {
        FitFamily::Equiprobable => unreachable!("handled above"),
        FitFamily::Uniform => {
            let lo = bound_a.unwrap_or_else(|| values.iter().copied().fold(f64::INFINITY, f64::min));
            let hi = bound_b
                .unwrap_or_else(|| values.iter().copied().fold(f64::NEG_INFINITY, f64::max));
            if let Some(bad) = values.iter().find(|v| **v < lo || **v > hi) {
                return Err(CliError::Domain(format!(
                    "observation {bad} lies outside the uniform bounds [{lo}, {hi}]"
                )));
            }
            BaselineSpec::uniform(lo, hi).map_err(|_| {
                CliError::Domain(format!(
                    "uniform fit needs a nondegenerate range, got [{lo}, {hi}]"
                ))
            })?
        }
        FitFamily::Geometric => {
            if let Some(bad) = values.iter().find(|v| v.fract() != 0.0 || **v < 1.0) {
                return Err(CliError::Domain(format!(
                    "geometric data must be integers >= 1, found {bad}"
                )));
            }
            BaselineSpec::geometric(m)?
        }
        FitFamily::Exponential => {
            if let Some(bad) = values.iter().find(|v| **v < 0.0) {
                return Err(CliError::Domain(format!(
                    "exponential data must be nonnegative, found {bad}"
                )));
            }
            if !(m > 0.0) {
                return Err(CliError::Domain(
                    "exponential fit needs a positive mean".to_string(),
                ));
            }
            BaselineSpec::exponential(m)?
        }
        FitFamily::Normal => {
            let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / values.len() as f64;
            if !(var > 0.0) {
                return Err(CliError::Domain(
                    "normal fit needs dispersed data (population variance is zero)".to_string(),
                ));
            }
            BaselineSpec::normal(m, var)?
        }
    };
    Ok(spec)
}
