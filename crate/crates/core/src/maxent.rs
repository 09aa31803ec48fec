//! Maximum-entropy distributions on finite supports under moment
//! constraints.
//!
//! The solver maximizes Shannon entropy subject to `E[f_k(X)] = c_k` by
//! minimizing the Lagrange dual (the log-partition function minus the
//! constrained linear term), which is smooth and convex in the multipliers.
//! Solutions have exponential-family form `p_i proportional to
//! exp(sum_k lambda_k f_k(x_i))`.
//!
//! Numerics: features are affinely standardized to zero mean and unit
//! spread over the support before solving (multipliers are mapped back to
//! the original scale afterward), log-sum-exp is evaluated with max
//! subtraction, and the Newton step is damped by halving whenever the dual
//! objective fails to decrease. Feasibility demands each constraint value
//! strictly inside the hull `[min f, max f]` of its feature values; a
//! boundary or exterior value is an `Infeasible` error. A set of
//! constraints that are individually feasible but jointly contradictory
//! (say, the same feature constrained to two values) drives the multipliers
//! to infinity and surfaces as `NoConvergence`, with residuals and the last
//! multipliers attached for diagnosis.

use std::fmt;

use crate::error::{Error, Result};
use crate::distributions::Target;
use crate::units::InfoUnit;

/// Tolerance on `|sum of masses - 1|` accepted by [`Pmf`] construction.
pub const MASS_SUM_TOLERANCE: f64 = 1e-12;

/// Default residual tolerance for [`solve_maxent`].
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Default iteration budget for [`solve_maxent`].
pub const DEFAULT_MAX_ITERATIONS: usize = 200;

/// A probability mass function on strictly increasing real points.
///
/// Masses are nonnegative and sum to 1 within [`MASS_SUM_TOLERANCE`]; the
/// slack is construction tolerance, not subnormalization, so the CDF is
/// pinned to exactly 1 at and beyond the last point.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    points: Vec<f64>,
    masses: Vec<f64>,
}

impl Pmf {
    pub fn new(points: Vec<f64>, masses: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter(
                "pmf needs at least one support point".into(),
            ));
        }
        if points.len() != masses.len() {
            return Err(Error::InvalidParameter(format!(
                "pmf has {} points but {} masses",
                points.len(),
                masses.len()
            )));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter(
                "pmf support points must be finite".into(),
            ));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "pmf support points must be strictly increasing".into(),
            ));
        }
        if masses.iter().any(|m| !m.is_finite() || *m < 0.0) {
            return Err(Error::InvalidParameter(
                "pmf masses must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = masses.iter().sum();
        if (total - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(Error::InvalidParameter(format!(
                "pmf masses sum to {total}, not 1 (tolerance {MASS_SUM_TOLERANCE:e})"
            )));
        }
        Ok(Pmf { points, masses })
    }

    /// Equal mass `1/n` on each point.
    pub fn equiprobable(points: Vec<f64>) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "pmf needs at least one support point".into(),
            ));
        }
        Self::new(points, vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    /// Mass at a single point (zero off the support).
    pub fn mass_at(&self, x: f64) -> f64 {
        match self.points.binary_search_by(|p| p.total_cmp(&x)) {
            Ok(i) => self.masses[i],
            Err(_) => 0.0,
        }
    }

    /// Right-continuous CDF. Prefix sums are clamped at 1, and any `x` at
    /// or beyond the last point returns exactly 1.
    pub fn cdf(&self, x: f64) -> f64 {
        if x >= *self.points.last().expect("pmf is nonempty") {
            return 1.0;
        }
        let mut acc = 0.0;
        for (p, m) in self.points.iter().zip(&self.masses) {
            if *p > x {
                break;
            }
            acc += m;
        }
        acc.min(1.0)
    }

    /// Probability of a target set: the sum of masses of member points.
    pub fn probability(&self, target: &Target) -> Result<f64> {
        target.validate()?;
        match target {
            Target::FiniteSubset { atoms } => {
                Ok(atoms.iter().map(|&a| self.mass_at(a)).sum())
            }
            Target::UnionOf { parts } => {
                let mut total = 0.0;
                for part in parts {
                    total += self.probability(part)?;
                }
                Ok(total)
            }
            primitive => Ok(self
                .points
                .iter()
                .zip(&self.masses)
                .filter(|(p, _)| primitive.contains(**p))
                .map(|(_, m)| m)
                .sum()),
        }
    }
}

impl fmt::Display for Pmf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pmf(n={}, support [{}, {}])",
            self.len(),
            self.points[0],
            self.points[self.len() - 1]
        )
    }
}

/// Shannon entropy of a pmf in the requested unit, with `0 log 0 = 0`.
///
/// Clamped below at zero: the mass-sum tolerance admits pmfs whose literal
/// sum exceeds 1 by up to 1e-12, which could otherwise push the result a
/// few ulps negative.
pub fn pmf_entropy(pmf: &Pmf, unit: InfoUnit) -> f64 {
    let h: f64 = pmf
        .masses()
        .iter()
        .filter(|m| **m > 0.0)
        .map(|&m| -m * unit.log(m))
        .sum();
    h.max(0.0)
}

/// A feature whose expectation is constrained.
#[derive(Debug, Clone, PartialEq)]
pub enum Feature {
    /// `f(x) = x`
    Identity,
    /// `f(x) = x^2`
    Square,
    /// `f(x) = (x - center)^2`
    CenteredSquare { center: f64 },
    /// Arbitrary tabulated values, one per support point.
    Tabulated { values: Vec<f64> },
}

impl Feature {
    fn eval(&self, support: &[f64]) -> Result<Vec<f64>> {
        match self {
            Feature::Identity => Ok(support.to_vec()),
            Feature::Square => Ok(support.iter().map(|x| x * x).collect()),
            Feature::CenteredSquare { center } => {
                if !center.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "centered-square center must be finite, got {center}"
                    )));
                }
                Ok(support.iter().map(|x| (x - center) * (x - center)).collect())
            }
            Feature::Tabulated { values } => {
                if values.len() != support.len() {
                    return Err(Error::InvalidParameter(format!(
                        "tabulated feature has {} values for {} support points",
                        values.len(),
                        support.len()
                    )));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidParameter(
                        "tabulated feature values must be finite".into(),
                    ));
                }
                Ok(values.clone())
            }
        }
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Feature::Identity => write!(f, "identity"),
            Feature::Square => write!(f, "square"),
            Feature::CenteredSquare { center } => write!(f, "centered_square(c={center})"),
            Feature::Tabulated { values } => write!(f, "tabulated({} values)", values.len()),
        }
    }
}

/// One moment constraint `E[feature(X)] = value`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentConstraint {
    pub feature: Feature,
    pub value: f64,
}

impl MomentConstraint {
    pub fn new(feature: Feature, value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "constraint value must be finite, got {value}"
            )));
        }
        Ok(MomentConstraint { feature, value })
    }

    /// `E[X] = mean`
    pub fn mean(value: f64) -> Result<Self> {
        Self::new(Feature::Identity, value)
    }

    /// `E[X^2] = value`
    pub fn second_moment(value: f64) -> Result<Self> {
        Self::new(Feature::Square, value)
    }
}

/// Solver output: the maxent pmf plus convergence diagnostics.
#[derive(Debug, Clone)]
pub struct MaxentSolution {
    pub pmf: Pmf,
    /// Multipliers on the original feature scale, one per constraint
    /// (zero for vacuous constant-feature constraints).
    pub multipliers: Vec<f64>,
    pub iterations: usize,
    /// `E_p[f_k] - value_k` at the solution.
    pub residuals: Vec<f64>,
}

/// Maximize entropy on `support` subject to `constraints`.
///
/// Convergence means every residual `|E_p[f_k] - c_k|` is at most
/// `tolerance`. With no constraints the equiprobable pmf is returned
/// directly, with bitwise-equal masses.
pub fn solve_maxent(
    support: &[f64],
    constraints: &[MomentConstraint],
    tolerance: f64,
    max_iterations: usize,
) -> Result<MaxentSolution> {
    let n = support.len();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "maxent support must hold at least one point".into(),
        ));
    }
    if support.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter(
            "maxent support points must be finite".into(),
        ));
    }
    if support.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "maxent support points must be strictly increasing".into(),
        ));
    }
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be finite and positive, got {tolerance}"
        )));
    }

    // Evaluate and vet each constraint; standardize the non-vacuous ones.
    let mut raw: Vec<Vec<f64>> = Vec::with_capacity(constraints.len());
    let mut active: Vec<usize> = Vec::new();
    let mut std_features: Vec<Vec<f64>> = Vec::new();
    let mut std_values: Vec<f64> = Vec::new();
    let mut spreads: Vec<f64> = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        if !c.value.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "constraint {k} value must be finite, got {}",
                c.value
            )));
        }
        let f = c.feature.eval(support)?;
        let (fmin, fmax) = f
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        if fmin == fmax {
            // Constant feature: only its own value is achievable, and the
            // constraint carries no information beyond that.
            if (c.value - fmin).abs() > 1e-9 * fmin.abs().max(1.0) {
                return Err(Error::Infeasible(format!(
                    "constraint {k} ({}) pins a constant feature {fmin} to {}",
                    c.feature, c.value
                )));
            }
        } else {
            if !(c.value > fmin && c.value < fmax) {
                return Err(Error::Infeasible(format!(
                    "constraint {k} ({}) value {} lies outside the open feature hull ({fmin}, {fmax})",
                    c.feature, c.value
                )));
            }
            let mean = f.iter().sum::<f64>() / n as f64;
            let var = f.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
            let spread = var.sqrt();
            std_features.push(f.iter().map(|v| (v - mean) / spread).collect());
            std_values.push((c.value - mean) / spread);
            spreads.push(spread);
            active.push(k);
        }
        raw.push(f);
    }

    let kk = active.len();
    if kk == 0 {
        let pmf = Pmf::equiprobable(support.to_vec())?;
        let residuals = residuals_of(&pmf, &raw, constraints);
        return Ok(MaxentSolution {
            pmf,
            multipliers: vec![0.0; constraints.len()],
            iterations: 0,
            residuals,
        });
    }

    let mut eta = vec![0.0f64; kk];
    let mut scores = vec![0.0f64; n];
    let mut p = vec![0.0f64; n];

    for iter in 0..max_iterations {
        compute_scores(&std_features, &eta, &mut scores);
        let log_z = log_sum_exp(&scores);
        for i in 0..n {
            p[i] = (scores[i] - log_z).exp();
        }

        // Convergence is judged on the original feature scale.
        let resid: Vec<f64> = active
            .iter()
            .map(|&k| dot(&p, &raw[k]) - constraints[k].value)
            .collect();
        if resid.iter().all(|r| r.abs() <= tolerance) {
            return Ok(finish(
                support,
                constraints,
                &raw,
                &active,
                &eta,
                &spreads,
                &p,
                iter,
            ));
        }

        // Newton direction on the standardized dual.
        let moments: Vec<f64> = std_features.iter().map(|f| dot(&p, f)).collect();
        let grad: Vec<f64> = moments
            .iter()
            .zip(&std_values)
            .map(|(m, c)| m - c)
            .collect();
        let mut hess = vec![0.0f64; kk * kk];
        for a in 0..kk {
            for b in a..kk {
                let mut e = 0.0;
                for i in 0..n {
                    e += p[i] * std_features[a][i] * std_features[b][i];
                }
                let cov = e - moments[a] * moments[b];
                hess[a * kk + b] = cov;
                hess[b * kk + a] = cov;
            }
        }
        let direction = solve_spd(&mut hess, &grad, kk).ok_or_else(|| Error::NoConvergence {
            iterations: iter,
            max_residual: resid.iter().fold(0.0f64, |m, r| m.max(r.abs())),
            residuals: resid.clone(),
            multipliers: unscale(&eta, &spreads, &active, constraints.len()),
        })?;

        // Damped step: halve until the dual objective stops increasing.
        // Acceptance allows an epsilon of slack so that full Newton steps
        // near the optimum, whose true decrease sits below the rounding
        // noise of the dual, still go through (rejecting them stalls the
        // final digits of the residual). A non-finite dual at the step
        // floor means the multipliers are diverging and no usable step
        // exists.
        let dual_now = log_z - dot(&eta, &std_values);
        let slack = 1e-15 * (1.0 + dual_now.abs());
        let mut alpha = 1.0;
        let mut trial = vec![0.0f64; kk];
        loop {
            for a in 0..kk {
                trial[a] = eta[a] - alpha * direction[a];
            }
            compute_scores(&std_features, &trial, &mut scores);
            let dual_trial = log_sum_exp(&scores) - dot(&trial, &std_values);
            if dual_trial.is_finite() && dual_trial <= dual_now + slack {
                break;
            }
            if alpha < 1e-14 {
                if !dual_trial.is_finite() {
                    return Err(Error::NoConvergence {
                        iterations: iter,
                        max_residual: resid.iter().fold(0.0f64, |m, r| m.max(r.abs())),
                        residuals: resid,
                        multipliers: unscale(&eta, &spreads, &active, constraints.len()),
                    });
                }
                break;
            }
            alpha *= 0.5;
        }
        eta.copy_from_slice(&trial);
    }

    compute_scores(&std_features, &eta, &mut scores);
    let log_z = log_sum_exp(&scores);
    for i in 0..n {
        p[i] = (scores[i] - log_z).exp();
    }
    let resid: Vec<f64> = active
        .iter()
        .map(|&k| dot(&p, &raw[k]) - constraints[k].value)
        .collect();
    Err(Error::NoConvergence {
        iterations: max_iterations,
        max_residual: resid.iter().fold(0.0f64, |m, r| m.max(r.abs())),
        residuals: resid,
        multipliers: unscale(&eta, &spreads, &active, constraints.len()),
    })
}

#[allow(clippy::too_many_arguments)]
fn finish(
    support: &[f64],
    constraints: &[MomentConstraint],
    raw: &[Vec<f64>],
    active: &[usize],
    eta: &[f64],
    spreads: &[f64],
    p: &[f64],
    iterations: usize,
) -> MaxentSolution {
    let total: f64 = p.iter().sum();
    let masses: Vec<f64> = p.iter().map(|v| v / total).collect();
    let pmf = Pmf::new(support.to_vec(), masses).expect("solver masses are a valid pmf");
    let residuals = residuals_of(&pmf, raw, constraints);
    MaxentSolution {
        pmf,
        multipliers: unscale(eta, spreads, active, constraints.len()),
        iterations,
        residuals,
    }
}

fn residuals_of(pmf: &Pmf, raw: &[Vec<f64>], constraints: &[MomentConstraint]) -> Vec<f64> {
    raw.iter()
        .zip(constraints)
        .map(|(f, c)| dot(pmf.masses(), f) - c.value)
        .collect()
}

fn unscale(eta: &[f64], spreads: &[f64], active: &[usize], total: usize) -> Vec<f64> {
    let mut lambdas = vec![0.0f64; total];
    for (j, &k) in active.iter().enumerate() {
        lambdas[k] = eta[j] / spreads[j];
    }
    lambdas
}

fn compute_scores(features: &[Vec<f64>], eta: &[f64], scores: &mut [f64]) {
    scores.fill(0.0);
    for (f, &e) in features.iter().zip(eta) {
        for (s, v) in scores.iter_mut().zip(f) {
            *s += e * v;
        }
    }
}

fn log_sum_exp(scores: &[f64]) -> f64 {
    let m = scores.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let sum: f64 = scores.iter().map(|s| (s - m).exp()).sum();
    m + sum.ln()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// Solve (A + ridge I) x = b for symmetric positive-definite A via Cholesky,
// escalating the ridge if factorization stalls. K is tiny (one per
// constraint), so dense O(K^3) is fine.
fn solve_spd(a: &mut [f64], b: &[f64], k: usize) -> Option<Vec<f64>> {
    let base: f64 = (0..k).map(|i| a[i * k + i]).fold(0.0f64, f64::max);
    let mut ridge = 0.0;
    for _ in 0..8 {
        let mut m = a.to_vec();
        for i in 0..k {
            m[i * k + i] += ridge;
        }
        if let Some(l) = cholesky(&mut m, k) {
            return Some(chol_solve(&l, b, k));
        }
        ridge = if ridge == 0.0 {
            base.max(1e-300) * 1e-12
        } else {
            ridge * 100.0
        };
    }
    None
}

fn cholesky(a: &mut Vec<f64>, k: usize) -> Option<Vec<f64>> {
    for j in 0..k {
        let mut d = a[j * k + j];
        for l in 0..j {
            d -= a[j * k + l] * a[j * k + l];
        }
        if !(d > 0.0) || !d.is_finite() {
            return None;
        }
        let d = d.sqrt();
        a[j * k + j] = d;
        for i in (j + 1)..k {
            let mut v = a[i * k + j];
            for l in 0..j {
                v -= a[i * k + l] * a[j * k + l];
            }
            a[i * k + j] = v / d;
        }
    }
    Some(a.clone())
}

fn chol_solve(l: &[f64], b: &[f64], k: usize) -> Vec<f64> {
    let mut y = vec![0.0f64; k];
    for i in 0..k {
        let mut v = b[i];
        for j in 0..i {
            v -= l[i * k + j] * y[j];
        }
        y[i] = v / l[i * k + i];
    }
    let mut x = vec![0.0f64; k];
    for i in (0..k).rev() {
        let mut v = y[i];
        for j in (i + 1)..k {
            v -= l[j * k + i] * x[j];
        }
        x[i] = v / l[i * k + i];
    }
    x
}
