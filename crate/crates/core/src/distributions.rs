//! Baseline distribution families and measurable target sets.
//!
//! Each family is the maximum-entropy distribution for its support and
//! constraint signature:
//!
//! | family            | support        | constraint                  |
//! |-------------------|----------------|-----------------------------|
//! | `Equiprobable`    | n opaque atoms | none                        |
//! | `UniformInterval` | `[a, b]`       | none                        |
//! | `Geometric`       | `{1, 2, ...}`  | mean `mu`                   |
//! | `Exponential`     | `[0, inf)`     | mean `mu`                   |
//! | `Normal`          | the real line  | mean `mu`, variance `sigma2`|
//!
//! Probabilities of targets, CDFs, densities/masses, and entropies are all
//! evaluated in closed form; countable and continuous tails carry no
//! truncation error beyond floating point.
//!
//! Equiprobable atoms are opaque labels with no metric structure, so the
//! family answers only finite-subset queries; asking it for a CDF or a
//! density is an `UnorderableSupport` error. When atoms gain an ordering
//! (equally spaced readings, say), model them as a [`Pmf`] over real points
//! instead.

use std::fmt;

use crate::error::{Error, Result};
use crate::maxent::Pmf;
use crate::special;
use crate::units::InfoUnit;

/// A closed-form baseline distribution.
#[derive(Debug, Clone, PartialEq)]
pub enum BaselineSpec {
    /// Equal mass on `n` opaque atoms.
    Equiprobable { n: usize },
    /// Uniform density on `[a, b]`, `b > a`.
    UniformInterval { a: f64, b: f64 },
    /// Geometric on `{1, 2, ...}` with mean `mu >= 1`; success probability `1/mu`.
    Geometric { mu: f64 },
    /// Exponential on `[0, inf)` with mean `mu > 0`; rate `1/mu`.
    Exponential { mu: f64 },
    /// Normal with mean `mu` and variance `sigma2 > 0`.
    Normal { mu: f64, sigma2: f64 },
}

impl BaselineSpec {
    pub fn equiprobable(n: usize) -> Result<Self> {
        let spec = BaselineSpec::Equiprobable { n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        let spec = BaselineSpec::UniformInterval { a, b };
        spec.validate()?;
        Ok(spec)
    }

    pub fn geometric(mu: f64) -> Result<Self> {
        let spec = BaselineSpec::Geometric { mu };
        spec.validate()?;
        Ok(spec)
    }

    pub fn exponential(mu: f64) -> Result<Self> {
        let spec = BaselineSpec::Exponential { mu };
        spec.validate()?;
        Ok(spec)
    }

    /// Exponential given its rate instead of its mean.
    pub fn exponential_rate(rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "exponential rate must be finite and positive, got {rate}"
            )));
        }
        Self::exponential(1.0 / rate)
    }

    pub fn normal(mu: f64, sigma2: f64) -> Result<Self> {
        let spec = BaselineSpec::Normal { mu, sigma2 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            BaselineSpec::Equiprobable { n } => {
                if n == 0 {
                    return Err(Error::InvalidParameter(
                        "equiprobable needs at least one atom".into(),
                    ));
                }
            }
            BaselineSpec::UniformInterval { a, b } => {
                if !(a.is_finite() && b.is_finite() && b > a) {
                    return Err(Error::InvalidParameter(format!(
                        "uniform interval needs finite a < b, got [{a}, {b}]"
                    )));
                }
            }
            BaselineSpec::Geometric { mu } => {
                if !(mu.is_finite() && mu >= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "geometric mean must be finite and >= 1, got {mu}"
                    )));
                }
            }
            BaselineSpec::Exponential { mu } => {
                if !(mu.is_finite() && mu > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "exponential mean must be finite and positive, got {mu}"
                    )));
                }
            }
            BaselineSpec::Normal { sigma2, mu } => {
                if !(mu.is_finite() && sigma2.is_finite() && sigma2 > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "normal needs finite mu and positive finite sigma2, got mu={mu}, sigma2={sigma2}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            BaselineSpec::Equiprobable { .. } => "equiprobable",
            BaselineSpec::UniformInterval { .. } => "uniform_interval",
            BaselineSpec::Geometric { .. } => "geometric",
            BaselineSpec::Exponential { .. } => "exponential",
            BaselineSpec::Normal { .. } => "normal",
        }
    }

    /// Probability assigned to `target`.
    ///
    /// Finite-subset targets are valid only against `Equiprobable` (where
    /// the answer is `|T| / n`); interval, half-line, and union targets are
    /// valid only against the four numeric families.
    pub fn probability(&self, target: &Target) -> Result<f64> {
        self.validate()?;
        target.validate()?;
        match *self {
            BaselineSpec::Equiprobable { n } => {
                let count = equiprobable_atom_count(target)?;
                if count > n {
                    return Err(Error::InvalidTarget(format!(
                        "target holds {count} atoms but the space has only {n}"
                    )));
                }
                Ok(count as f64 / n as f64)
            }
            _ => self.numeric_probability(target),
        }
    }

    fn numeric_probability(&self, target: &Target) -> Result<f64> {
        match target {
            Target::FiniteSubset { .. } => Err(Error::SupportMismatch(format!(
                "finite-subset targets apply to equiprobable baselines or finite pmfs, not {self}"
            ))),
            Target::HalfLineLeq { x } => self.cdf(*x),
            Target::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => match *self {
                BaselineSpec::Geometric { mu } => {
                    Ok(geometric_interval(1.0 / mu, *lo, *hi, *lo_closed, *hi_closed))
                }
                // Continuous families: exactly cdf(hi) - cdf(lo); endpoint
                // closedness carries no mass.
                _ => Ok(self.cdf(*hi)? - self.cdf(*lo)?),
            },
            Target::UnionOf { parts } => {
                let mut total = 0.0;
                for part in parts {
                    total += self.numeric_probability(part)?;
                }
                Ok(total)
            }
        }
    }

    /// CDF at `x`. Errors for `Equiprobable`, whose atoms are unordered.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.validate()?;
        if x.is_nan() {
            return Err(Error::InvalidParameter("cdf argument is NaN".into()));
        }
        match *self {
            BaselineSpec::Equiprobable { .. } => Err(Error::UnorderableSupport(
                "equiprobable atoms are opaque labels; model ordered atoms as a pmf over real points"
                    .into(),
            )),
            BaselineSpec::UniformInterval { a, b } => {
                Ok(((x - a) / (b - a)).clamp(0.0, 1.0))
            }
            BaselineSpec::Geometric { mu } => {
                if x < 1.0 {
                    Ok(0.0)
                } else {
                    Ok(1.0 - geometric_sf(1.0 / mu, x.floor()))
                }
            }
            BaselineSpec::Exponential { mu } => {
                if x <= 0.0 {
                    Ok(0.0)
                } else {
                    Ok(-(-x / mu).exp_m1())
                }
            }
            BaselineSpec::Normal { mu, sigma2 } => {
                Ok(special::std_normal_cdf((x - mu) / sigma2.sqrt()))
            }
        }
    }

    /// Density for continuous families, probability mass for `Geometric`
    /// (zero off the atoms). Errors for `Equiprobable`.
    pub fn density(&self, x: f64) -> Result<f64> {
        self.validate()?;
        if x.is_nan() {
            return Err(Error::InvalidParameter("density argument is NaN".into()));
        }
        match *self {
            BaselineSpec::Equiprobable { .. } => Err(Error::UnorderableSupport(
                "equiprobable atoms carry no density".into(),
            )),
            BaselineSpec::UniformInterval { a, b } => {
                Ok(if (a..=b).contains(&x) { 1.0 / (b - a) } else { 0.0 })
            }
            BaselineSpec::Geometric { mu } => {
                let p = 1.0 / mu;
                if x >= 1.0 && x.fract() == 0.0 {
                    Ok(geometric_sf(p, x - 1.0) * p)
                } else {
                    Ok(0.0)
                }
            }
            BaselineSpec::Exponential { mu } => {
                Ok(if x < 0.0 { 0.0 } else { (-x / mu).exp() / mu })
            }
            BaselineSpec::Normal { mu, sigma2 } => {
                let z = x - mu;
                Ok((-z * z / (2.0 * sigma2)).exp()
                    / (2.0 * std::f64::consts::PI * sigma2).sqrt())
            }
        }
    }

    /// Differential (continuous families) or Shannon (discrete families)
    /// entropy, in the requested unit.
    pub fn entropy(&self, unit: InfoUnit) -> Result<f64> {
        self.validate()?;
        Ok(match *self {
            BaselineSpec::Equiprobable { n } => unit.log(n as f64),
            BaselineSpec::UniformInterval { a, b } => unit.log(b - a),
            BaselineSpec::Geometric { mu } => {
                let p = 1.0 / mu;
                let q = 1.0 - p;
                let h_nats = if q == 0.0 {
                    0.0
                } else {
                    (-p * p.ln() - q * q.ln()) / p
                };
                unit.from_nats(h_nats)
            }
            BaselineSpec::Exponential { mu } => unit.from_nats(1.0 + mu.ln()),
            BaselineSpec::Normal { sigma2, .. } => {
                let nats = 0.5 * (2.0 * std::f64::consts::PI * std::f64::consts::E * sigma2).ln();
                unit.from_nats(nats)
            }
        })
    }
}

impl fmt::Display for BaselineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BaselineSpec::Equiprobable { n } => write!(f, "equiprobable(n={n})"),
            BaselineSpec::UniformInterval { a, b } => write!(f, "uniform[{a}, {b}]"),
            BaselineSpec::Geometric { mu } => write!(f, "geometric(mu={mu})"),
            BaselineSpec::Exponential { mu } => {
                write!(f, "exponential(mu={mu}, rate={})", 1.0 / mu)
            }
            BaselineSpec::Normal { mu, sigma2 } => write!(f, "normal(mu={mu}, sigma2={sigma2})"),
        }
    }
}

// Survival q^k of the geometric at integer k >= 0, with q = 1 - p.
// powi keeps small cases exact; the log route avoids i32 overflow and stays
// accurate when k is astronomically large but q is close to 1.
fn geometric_sf(p: f64, k: f64) -> f64 {
    if k <= 0.0 {
        return 1.0;
    }
    let q = 1.0 - p;
    if q == 0.0 {
        return 0.0;
    }
    if k <= i32::MAX as f64 {
        q.powi(k as i32)
    } else {
        (k * (-p).ln_1p()).exp()
    }
}

// P(X in [lo, hi] cap {1, 2, ...}) for the geometric; endpoint closedness
// matters exactly when an endpoint is an atom.
fn geometric_interval(p: f64, lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> f64 {
    let mut k_lo = lo.ceil();
    if k_lo == lo && !lo_closed {
        k_lo += 1.0;
    }
    let mut k_hi = hi.floor();
    if k_hi == hi && !hi_closed {
        k_hi -= 1.0;
    }
    if k_lo < 1.0 {
        k_lo = 1.0;
    }
    if k_hi < k_lo {
        return 0.0;
    }
    geometric_sf(p, k_lo - 1.0) - geometric_sf(p, k_hi)
}

fn equiprobable_atom_count(target: &Target) -> Result<usize> {
    match target {
        Target::FiniteSubset { atoms } => Ok(atoms.len()),
        Target::UnionOf { parts } => {
            let mut total = 0usize;
            for part in parts {
                total += equiprobable_atom_count(part)?;
            }
            Ok(total)
        }
        other => Err(Error::SupportMismatch(format!(
            "equiprobable baselines take finite-subset targets, not {other}"
        ))),
    }
}

/// A measurable target set.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    /// A finite set of support atoms (distinct).
    FiniteSubset { atoms: Vec<f64> },
    /// An interval with per-endpoint closedness.
    Interval {
        lo: f64,
        hi: f64,
        lo_closed: bool,
        hi_closed: bool,
    },
    /// The half-line `(-inf, x]`.
    HalfLineLeq { x: f64 },
    /// A finite union of pairwise-disjoint primitive parts.
    UnionOf { parts: Vec<Target> },
}

impl Target {
    pub fn finite_subset(atoms: Vec<f64>) -> Result<Self> {
        let t = Target::FiniteSubset { atoms };
        t.validate()?;
        Ok(t)
    }

    pub fn interval(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        let t = Target::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn closed_interval(lo: f64, hi: f64) -> Result<Self> {
        Self::interval(lo, hi, true, true)
    }

    pub fn half_line_leq(x: f64) -> Result<Self> {
        let t = Target::HalfLineLeq { x };
        t.validate()?;
        Ok(t)
    }

    pub fn union_of(parts: Vec<Target>) -> Result<Self> {
        let t = Target::UnionOf { parts };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Target::FiniteSubset { atoms } => {
                if atoms.is_empty() {
                    return Err(Error::InvalidTarget(
                        "finite subset must contain at least one atom".into(),
                    ));
                }
                if atoms.iter().any(|a| !a.is_finite()) {
                    return Err(Error::InvalidTarget(
                        "finite-subset atoms must be finite".into(),
                    ));
                }
                let mut sorted = atoms.clone();
                sorted.sort_by(f64::total_cmp);
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidTarget(
                        "finite-subset atoms must be distinct".into(),
                    ));
                }
            }
            Target::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                if !(lo.is_finite() && hi.is_finite()) {
                    return Err(Error::InvalidTarget(format!(
                        "interval endpoints must be finite, got [{lo}, {hi}]"
                    )));
                }
                if lo > hi {
                    return Err(Error::InvalidTarget(format!(
                        "interval needs lo <= hi, got lo={lo}, hi={hi}"
                    )));
                }
                if lo == hi && !(*lo_closed && *hi_closed) {
                    return Err(Error::InvalidTarget(format!(
                        "degenerate interval at {lo} is empty unless both endpoints are closed"
                    )));
                }
            }
            Target::HalfLineLeq { x } => {
                if !x.is_finite() {
                    return Err(Error::InvalidTarget(format!(
                        "half-line endpoint must be finite, got {x}"
                    )));
                }
            }
            Target::UnionOf { parts } => {
                if parts.is_empty() {
                    return Err(Error::InvalidTarget(
                        "union must contain at least one part".into(),
                    ));
                }
                for part in parts {
                    if matches!(part, Target::UnionOf { .. }) {
                        return Err(Error::InvalidTarget(
                            "union parts must be primitive targets, not nested unions".into(),
                        ));
                    }
                    part.validate()?;
                }
                for i in 0..parts.len() {
                    for j in (i + 1)..parts.len() {
                        if primitives_overlap(&parts[i], &parts[j]) {
                            return Err(Error::OverlappingUnion(format!(
                                "parts {} and {} intersect: {} vs {}",
                                i, j, parts[i], parts[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Set membership.
    pub fn contains(&self, x: f64) -> bool {
        match self {
            Target::FiniteSubset { atoms } => atoms.iter().any(|&a| a == x),
            Target::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                let above = if *lo_closed { x >= *lo } else { x > *lo };
                let below = if *hi_closed { x <= *hi } else { x < *hi };
                above && below
            }
            Target::HalfLineLeq { x: hi } => x <= *hi,
            Target::UnionOf { parts } => parts.iter().any(|p| p.contains(x)),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::FiniteSubset { atoms } => {
                write!(f, "{{")?;
                for (i, a) in atoms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "}}")
            }
            Target::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => write!(
                f,
                "{}{lo}, {hi}{}",
                if *lo_closed { "[" } else { "(" },
                if *hi_closed { "]" } else { ")" }
            ),
            Target::HalfLineLeq { x } => write!(f, "(-inf, {x}]"),
            Target::UnionOf { parts } => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " u ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

// Set-theoretic overlap of two primitive (non-union) targets.
fn primitives_overlap(a: &Target, b: &Target) -> bool {
    match (a, b) {
        (Target::FiniteSubset { atoms: xs }, Target::FiniteSubset { atoms: ys }) => {
            xs.iter().any(|x| ys.contains(x))
        }
        (Target::FiniteSubset { atoms }, other) | (other, Target::FiniteSubset { atoms }) => {
            atoms.iter().any(|&x| other.contains(x))
        }
        _ => {
            let (alo, alc, ahi, ahc) = range_of(a);
            let (blo, blc, bhi, bhc) = range_of(b);
            if ahi < blo || bhi < alo {
                return false;
            }
            if ahi == blo {
                return ahc && blc;
            }
            if bhi == alo {
                return bhc && alc;
            }
            true
        }
    }
}

fn range_of(t: &Target) -> (f64, bool, f64, bool) {
    match t {
        Target::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        } => (*lo, *lo_closed, *hi, *hi_closed),
        Target::HalfLineLeq { x } => (f64::NEG_INFINITY, false, *x, true),
        _ => unreachable!("range_of is only called on interval-like targets"),
    }
}

/// A measure usable by the information and dominance operations: a
/// closed-form baseline or a finite pmf over real points.
#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Baseline(BaselineSpec),
    Finite(Pmf),
}

impl From<BaselineSpec> for Distribution {
    fn from(spec: BaselineSpec) -> Self {
        Distribution::Baseline(spec)
    }
}

impl From<Pmf> for Distribution {
    fn from(pmf: Pmf) -> Self {
        Distribution::Finite(pmf)
    }
}

impl Distribution {
    pub fn probability(&self, target: &Target) -> Result<f64> {
        match self {
            Distribution::Baseline(spec) => spec.probability(target),
            Distribution::Finite(pmf) => pmf.probability(target),
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        match self {
            Distribution::Baseline(spec) => spec.cdf(x),
            Distribution::Finite(pmf) => Ok(pmf.cdf(x)),
        }
    }

    /// Support atoms when the distribution is a finite pmf.
    pub fn finite_points(&self) -> Option<&[f64]> {
        match self {
            Distribution::Finite(pmf) => Some(pmf.points()),
            Distribution::Baseline(_) => None,
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Baseline(spec) => spec.fmt(f),
            Distribution::Finite(pmf) => pmf.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leq(x: f64) -> Target {
        Target::half_line_leq(x).unwrap()
    }

    #[test]
    fn equiprobable_subset_probability() {
        let spec = BaselineSpec::equiprobable(10).unwrap();
        let t = Target::finite_subset(vec![1.0, 4.0, 7.0]).unwrap();
        assert_eq!(spec.probability(&t).unwrap(), 0.3);
        let too_big = Target::finite_subset((0..11).map(|i| i as f64).collect()).unwrap();
        assert!(matches!(
            spec.probability(&too_big),
            Err(Error::InvalidTarget(_))
        ));
    }

    #[test]
    fn equiprobable_rejects_real_set_targets_and_cdf() {
        let spec = BaselineSpec::equiprobable(4).unwrap();
        assert!(matches!(
            spec.probability(&leq(2.0)),
            Err(Error::SupportMismatch(_))
        ));
        assert!(matches!(spec.cdf(1.0), Err(Error::UnorderableSupport(_))));
        assert!(matches!(spec.density(1.0), Err(Error::UnorderableSupport(_))));
    }

    #[test]
    fn numeric_families_reject_finite_subsets() {
        let exp = BaselineSpec::exponential(1.0).unwrap();
        let t = Target::finite_subset(vec![1.0]).unwrap();
        assert!(matches!(
            exp.probability(&t),
            Err(Error::SupportMismatch(_))
        ));
    }

    #[test]
    fn normal_half_line_at_the_mean_is_one_half() {
        let spec = BaselineSpec::normal(3.7, 2.25).unwrap();
        assert_eq!(spec.probability(&leq(3.7)).unwrap(), 0.5);
    }

    #[test]
    fn normal_cdf_matches_reference() {
        // mpmath: ncdf(3.5, mu=2, sigma=3)
        let spec = BaselineSpec::normal(2.0, 9.0).unwrap();
        let got = spec.cdf(3.5).unwrap();
        assert!((got - 0.69146246127401310).abs() < 1e-15);
    }

    #[test]
    fn exponential_half_line_example() {
        // 1 - e^{-1}
        let spec = BaselineSpec::exponential(1.0).unwrap();
        let got = spec.probability(&leq(1.0)).unwrap();
        let oracle = 1.0 - (-1.0f64).exp();
        assert!((got - oracle).abs() < 1e-16);
        assert!((got - 0.63212055882855768).abs() < 1e-15);
    }

    #[test]
    fn geometric_cdf_is_the_mass_sum() {
        let spec = BaselineSpec::geometric(4.0).unwrap();
        // oracle: sum of P(X = k) = 0.75^{k-1} * 0.25 for k = 1..3
        let oracle: f64 = (0..3).map(|k| 0.75f64.powi(k) * 0.25).sum();
        assert_eq!(oracle, 0.578125);
        assert_eq!(spec.cdf(3.0).unwrap(), 0.578125);
        assert_eq!(spec.cdf(3.7).unwrap(), 0.578125);
        assert_eq!(spec.cdf(0.2).unwrap(), 0.0);
    }

    #[test]
    fn geometric_interval_closedness_matters() {
        let spec = BaselineSpec::geometric(4.0).unwrap();
        let closed = Target::closed_interval(1.0, 3.0).unwrap();
        let half_open = Target::interval(1.0, 3.0, false, true).unwrap();
        let open = Target::interval(1.0, 3.0, false, false).unwrap();
        assert_eq!(spec.probability(&closed).unwrap(), 0.578125);
        assert_eq!(spec.probability(&half_open).unwrap(), 0.578125 - 0.25);
        assert_eq!(spec.probability(&open).unwrap(), 0.1875);
        // but not for continuous families
        let exp = BaselineSpec::exponential(2.0).unwrap();
        let a = exp.probability(&closed).unwrap();
        let b = exp.probability(&open).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn geometric_masses() {
        let spec = BaselineSpec::geometric(4.0).unwrap();
        assert_eq!(spec.density(1.0).unwrap(), 0.25);
        assert_eq!(spec.density(2.0).unwrap(), 0.1875);
        assert_eq!(spec.density(2.5).unwrap(), 0.0);
        assert_eq!(spec.density(0.0).unwrap(), 0.0);
        // degenerate mean-1 case is a point mass at 1
        let point = BaselineSpec::geometric(1.0).unwrap();
        assert_eq!(point.density(1.0).unwrap(), 1.0);
        assert_eq!(point.cdf(1.0).unwrap(), 1.0);
        assert_eq!(point.entropy(InfoUnit::Bits).unwrap(), 0.0);
    }

    #[test]
    fn interval_probability_is_cdf_difference() {
        let spec = BaselineSpec::normal(0.0, 1.0).unwrap();
        let t = Target::closed_interval(-1.0, 2.0).unwrap();
        let got = spec.probability(&t).unwrap();
        assert_eq!(got, spec.cdf(2.0).unwrap() - spec.cdf(-1.0).unwrap());
    }

    #[test]
    fn union_probability_adds_parts() {
        let spec = BaselineSpec::exponential(1.0).unwrap();
        let parts = vec![
            Target::closed_interval(0.0, 1.0).unwrap(),
            Target::interval(1.0, 2.0, false, true).unwrap(),
        ];
        let a = spec.probability(&parts[0]).unwrap();
        let b = spec.probability(&parts[1]).unwrap();
        let union = Target::union_of(parts).unwrap();
        assert_eq!(spec.probability(&union).unwrap(), a + b);
    }

    #[test]
    fn overlapping_union_is_an_error() {
        let parts = vec![
            Target::closed_interval(0.0, 1.0).unwrap(),
            Target::closed_interval(1.0, 2.0).unwrap(),
        ];
        assert!(matches!(
            Target::union_of(parts),
            Err(Error::OverlappingUnion(_))
        ));
        // shared endpoint open on one side is fine
        let parts = vec![
            Target::interval(0.0, 1.0, true, false).unwrap(),
            Target::closed_interval(1.0, 2.0).unwrap(),
        ];
        assert!(Target::union_of(parts).is_ok());
        // half-line against an interval reaching into it
        let parts = vec![
            Target::half_line_leq(1.0).unwrap(),
            Target::closed_interval(0.5, 2.0).unwrap(),
        ];
        assert!(matches!(
            Target::union_of(parts),
            Err(Error::OverlappingUnion(_))
        ));
        // finite subset atoms inside an interval
        let parts = vec![
            Target::finite_subset(vec![1.0, 5.0]).unwrap(),
            Target::closed_interval(0.0, 2.0).unwrap(),
        ];
        assert!(matches!(
            Target::union_of(parts),
            Err(Error::OverlappingUnion(_))
        ));
    }

    #[test]
    fn entropies_in_closed_form() {
        let equi = BaselineSpec::equiprobable(8).unwrap();
        assert_eq!(equi.entropy(InfoUnit::Bits).unwrap(), 3.0);
        let unit_box = BaselineSpec::uniform(0.0, 1.0).unwrap();
        assert_eq!(unit_box.entropy(InfoUnit::Bits).unwrap(), 0.0);
        assert_eq!(unit_box.entropy(InfoUnit::Nats).unwrap(), 0.0);
        let exp = BaselineSpec::exponential(1.0).unwrap();
        assert_eq!(exp.entropy(InfoUnit::Nats).unwrap(), 1.0);
        // mpmath references
        let geo = BaselineSpec::geometric(4.0).unwrap();
        assert!((geo.entropy(InfoUnit::Bits).unwrap() - 3.2451124978365315).abs() < 1e-14);
        assert!((geo.entropy(InfoUnit::Nats).unwrap() - 2.2493405784752334).abs() < 1e-14);
        let norm = BaselineSpec::normal(0.0, 1.0).unwrap();
        assert!((norm.entropy(InfoUnit::Nats).unwrap() - 1.4189385332046727).abs() < 1e-15);
        assert!((norm.entropy(InfoUnit::Bits).unwrap() - 2.0470955851806411).abs() < 1e-14);
        let wide = BaselineSpec::normal(5.0, 2.25).unwrap();
        assert!((wide.entropy(InfoUnit::Nats).unwrap() - 1.8244036413128371).abs() < 1e-14);
    }

    #[test]
    fn uniform_cdf_clamps() {
        let spec = BaselineSpec::uniform(2.0, 6.0).unwrap();
        assert_eq!(spec.cdf(1.0).unwrap(), 0.0);
        assert_eq!(spec.cdf(2.0).unwrap(), 0.0);
        assert_eq!(spec.cdf(4.0).unwrap(), 0.5);
        assert_eq!(spec.cdf(6.0).unwrap(), 1.0);
        assert_eq!(spec.cdf(9.0).unwrap(), 1.0);
        assert_eq!(spec.density(4.0).unwrap(), 0.25);
        assert_eq!(spec.density(1.0).unwrap(), 0.0);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(BaselineSpec::equiprobable(0).is_err());
        assert!(BaselineSpec::uniform(1.0, 1.0).is_err());
        assert!(BaselineSpec::uniform(2.0, 1.0).is_err());
        assert!(BaselineSpec::geometric(0.5).is_err());
        assert!(BaselineSpec::exponential(0.0).is_err());
        assert!(BaselineSpec::exponential(-1.0).is_err());
        assert!(BaselineSpec::normal(0.0, 0.0).is_err());
        assert!(BaselineSpec::normal(f64::NAN, 1.0).is_err());
        assert!(BaselineSpec::exponential_rate(0.0).is_err());
    }

    #[test]
    fn bad_targets_are_rejected() {
        assert!(Target::finite_subset(vec![]).is_err());
        assert!(Target::finite_subset(vec![1.0, 1.0]).is_err());
        assert!(Target::interval(2.0, 1.0, true, true).is_err());
        assert!(Target::interval(1.0, 1.0, true, false).is_err());
        assert!(Target::half_line_leq(f64::INFINITY).is_err());
        assert!(Target::union_of(vec![]).is_err());
        let nested = Target::UnionOf {
            parts: vec![Target::UnionOf {
                parts: vec![Target::HalfLineLeq { x: 0.0 }],
            }],
        };
        assert!(nested.validate().is_err());
    }

    #[test]
    fn target_membership() {
        let t = Target::interval(0.0, 1.0, false, true).unwrap();
        assert!(!t.contains(0.0));
        assert!(t.contains(0.5));
        assert!(t.contains(1.0));
        assert!(!t.contains(1.5));
        let u = Target::union_of(vec![
            Target::finite_subset(vec![5.0]).unwrap(),
            Target::closed_interval(0.0, 1.0).unwrap(),
        ])
        .unwrap();
        assert!(u.contains(5.0));
        assert!(u.contains(0.3));
        assert!(!u.contains(2.0));
    }

    #[test]
    fn degenerate_interval_has_zero_mass_for_continuous_families() {
        let spec = BaselineSpec::normal(0.0, 1.0).unwrap();
        let t = Target::closed_interval(0.7, 0.7).unwrap();
        assert_eq!(spec.probability(&t).unwrap(), 0.0);
        // ... but carries an atom for the geometric
        let geo = BaselineSpec::geometric(4.0).unwrap();
        let t = Target::closed_interval(2.0, 2.0).unwrap();
        assert_eq!(geo.probability(&t).unwrap(), 0.1875);
    }

    #[test]
    fn display_labels() {
        assert_eq!(
            BaselineSpec::exponential(2.0).unwrap().to_string(),
            "exponential(mu=2, rate=0.5)"
        );
        assert_eq!(
            BaselineSpec::normal(0.0, 1.0).unwrap().to_string(),
            "normal(mu=0, sigma2=1)"
        );
        assert_eq!(
            Target::half_line_leq(1.5).unwrap().to_string(),
            "(-inf, 1.5]"
        );
    }
}
