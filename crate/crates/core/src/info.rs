//! Information measures for search targets: endogenous, exogenous, and
//! active information, plus Kullback-Leibler divergence and two
//! disequilibrium measures for finite pmfs.
//!
//! Conventions:
//!
//! * Endogenous information of a target under a baseline is
//!   `-log P_baseline(target)`; a zero-probability target yields `+inf`,
//!   not an error.
//! * Active information compares an alternative distribution against a
//!   baseline on the same target: `log P_alt(target) - log P_base(target)`.
//!   It is positive exactly when the alternative lifts the target's
//!   probability, approaches `-inf` as the alternative starves the target,
//!   tops out at the endogenous information (reached when the alternative
//!   gives the target probability 1), and is exactly zero when the two
//!   probabilities are bitwise equal. A baseline probability of zero makes
//!   the comparison undefined and is an error.
//! * The difference-of-logs form (rather than `log(ratio)`) makes
//!   `active == endogenous - exogenous` hold bitwise, since both sides
//!   reduce to the same two rounded logarithms.

use crate::distributions::{Distribution, Target};
use crate::error::{Error, Result};
use crate::maxent::Pmf;
use crate::units::InfoUnit;

/// The three information quantities for one (alternative, baseline,
/// target) triple, all in `unit`.
#[derive(Debug, Clone, PartialEq)]
pub struct InfoReport {
    /// `-log P_baseline(target)`; `+inf` when the baseline misses the
    /// target entirely.
    pub endogenous: f64,
    /// `-log P_alternative(target)`; `+inf` when the alternative misses.
    pub exogenous: f64,
    /// `endogenous - exogenous`, computed as a difference of logs.
    pub active: f64,
    pub unit: InfoUnit,
    pub baseline_prob: f64,
    pub alternative_prob: f64,
}

impl InfoReport {
    /// The same report expressed in another unit. Infinite entries stay
    /// infinite; finite entries are rescaled by the exact conversion
    /// factor.
    pub fn convert(&self, to: InfoUnit) -> InfoReport {
        InfoReport {
            endogenous: self.unit.convert(self.endogenous, to),
            exogenous: self.unit.convert(self.exogenous, to),
            active: self.unit.convert(self.active, to),
            unit: to,
            baseline_prob: self.baseline_prob,
            alternative_prob: self.alternative_prob,
        }
    }
}

/// `-log P_baseline(target)` in `unit`. Zero probability gives `+inf`.
pub fn endogenous_information(
    baseline: &Distribution,
    target: &Target,
    unit: InfoUnit,
) -> Result<f64> {
    let p = baseline.probability(target)?;
    Ok(if p == 0.0 { f64::INFINITY } else { -unit.log(p) })
}

/// Active information of `alternative` relative to `baseline` on
/// `target`, with the full report of all three quantities.
///
/// Errors with [`Error::UndefinedBaseline`] when the baseline gives the
/// target probability zero.
pub fn active_information(
    alternative: &Distribution,
    baseline: &Distribution,
    target: &Target,
    unit: InfoUnit,
) -> Result<InfoReport> {
    let base_prob = baseline.probability(target)?;
    let alt_prob = alternative.probability(target)?;
    active_information_from_probabilities(alt_prob, base_prob, unit)
}

/// Active information straight from the two target probabilities.
///
/// This is the computational core of [`active_information`], exposed for
/// callers that obtain probabilities elsewhere (empirical fractions, label
/// counts). Both probabilities must lie in `[0, 1]`; a zero baseline
/// probability is [`Error::UndefinedBaseline`].
pub fn active_information_from_probabilities(
    alternative_prob: f64,
    baseline_prob: f64,
    unit: InfoUnit,
) -> Result<InfoReport> {
    for (name, p) in [
        ("alternative", alternative_prob),
        ("baseline", baseline_prob),
    ] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "{name} probability must lie in [0, 1], got {p}"
            )));
        }
    }
    if baseline_prob == 0.0 {
        return Err(Error::UndefinedBaseline);
    }
    let log_base = unit.log(baseline_prob);
    let (exogenous, log_alt) = if alternative_prob == 0.0 {
        (f64::INFINITY, f64::NEG_INFINITY)
    } else {
        let l = unit.log(alternative_prob);
        (-l, l)
    };
    Ok(InfoReport {
        endogenous: -log_base,
        exogenous,
        active: log_alt - log_base,
        unit,
        baseline_prob,
        alternative_prob,
    })
}

/// Kullback-Leibler divergence `D(p || q)` in `unit` for two pmfs on the
/// identical support (bitwise-equal point vectors required).
///
/// Terms with `p_i = 0` contribute zero; a point with `p_i > 0` but
/// `q_i = 0` makes the divergence `+inf`. Computed as
/// `sum p_i (log p_i - log q_i)`, which is term-by-term the p-weighted
/// average of singleton active informations of `p` against `q`.
pub fn kl_divergence(p: &Pmf, q: &Pmf, unit: InfoUnit) -> Result<f64> {
    if p.len() != q.len()
        || p.points()
            .iter()
            .zip(q.points())
            .any(|(a, b)| a.to_bits() != b.to_bits())
    {
        return Err(Error::SupportMismatch(
            "kl divergence needs identical support points".into(),
        ));
    }
    let mut total = 0.0;
    for (pi, qi) in p.masses().iter().zip(q.masses()) {
        if *pi == 0.0 {
            continue;
        }
        if *qi == 0.0 {
            return Ok(f64::INFINITY);
        }
        total += pi * (unit.log(*pi) - unit.log(*qi));
    }
    Ok(total)
}

/// Squared Euclidean distance from the equiprobable pmf on the same
/// number of points: `sum (p_i - 1/n)^2`. Zero iff equiprobable.
pub fn disequilibrium_euclidean(pmf: &Pmf) -> f64 {
    let inv_n = 1.0 / pmf.len() as f64;
    pmf.masses().iter().map(|m| (m - inv_n) * (m - inv_n)).sum()
}

/// Wootters statistical distance from the equiprobable pmf:
/// `arccos(sum sqrt(p_i / n))`. Zero iff equiprobable; at most `pi/2`.
///
/// An all-masses-equal pmf short-circuits to exactly zero: the rounded
/// Bhattacharyya sum for, say, three masses of `fl(1/3)` lands one ulp
/// below 1 and `acos` would report ~1e-8 instead of 0.
pub fn disequilibrium_wootters(pmf: &Pmf) -> f64 {
    let first = pmf.masses()[0];
    if pmf
        .masses()
        .iter()
        .all(|m| m.to_bits() == first.to_bits())
    {
        return 0.0;
    }
    let inv_n = 1.0 / pmf.len() as f64;
    let s: f64 = pmf.masses().iter().map(|m| (m * inv_n).sqrt()).sum();
    s.clamp(0.0, 1.0).acos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::BaselineSpec;

    fn table_pmfs() -> (Pmf, Pmf) {
        let pts = vec![1.0, 2.0, 3.0];
        let p = Pmf::new(pts.clone(), vec![2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0]).unwrap();
        let q = Pmf::new(pts, vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]).unwrap();
        (p, q)
    }

    #[test]
    fn endogenous_for_an_equiprobable_singleton() {
        let base = Distribution::from(BaselineSpec::equiprobable(1024).unwrap());
        let t = Target::finite_subset(vec![7.0]).unwrap();
        let i = endogenous_information(&base, &t, InfoUnit::Bits).unwrap();
        assert_eq!(i, 10.0);
    }

    #[test]
    fn exponential_half_line_report() {
        let base = Distribution::from(BaselineSpec::exponential(1.0).unwrap());
        let t = Target::half_line_leq(1.0).unwrap();
        let r = active_information(
            &Distribution::from(BaselineSpec::exponential(1.0).unwrap()),
            &base,
            &t,
            InfoUnit::Bits,
        )
        .unwrap();
        // mpmath: -log2(1 - exp(-1)) = 0.66172835762896734
        assert!((r.endogenous - 0.66172835762896734).abs() < 1e-15);
        assert_eq!(r.active, 0.0);
        assert_eq!(r.active.to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn active_is_difference_of_named_parts_bitwise() {
        let base = Distribution::from(BaselineSpec::uniform(0.0, 10.0).unwrap());
        let alt = Distribution::from(BaselineSpec::exponential(2.0).unwrap());
        let t = Target::half_line_leq(3.0).unwrap();
        for unit in [InfoUnit::Bits, InfoUnit::Nats, InfoUnit::Hartleys] {
            let r = active_information(&alt, &base, &t, unit).unwrap();
            assert_eq!(
                r.active.to_bits(),
                (r.endogenous - r.exogenous).to_bits(),
                "difference identity must be bitwise in {unit}"
            );
        }
    }

    #[test]
    fn undefined_baseline_is_an_error_but_infinite_exogenous_is_not() {
        let base = Distribution::from(BaselineSpec::uniform(0.0, 1.0).unwrap());
        let t = Target::closed_interval(2.0, 3.0).unwrap();
        let alt = Distribution::from(BaselineSpec::uniform(0.0, 4.0).unwrap());
        assert_eq!(
            active_information(&alt, &base, &t, InfoUnit::Bits),
            Err(Error::UndefinedBaseline)
        );
        // swapped roles: baseline covers the target, alternative misses it
        let r = active_information(&base, &alt, &t, InfoUnit::Bits).unwrap();
        assert_eq!(r.exogenous, f64::INFINITY);
        assert_eq!(r.active, f64::NEG_INFINITY);
    }

    #[test]
    fn active_tops_out_at_endogenous() {
        let r = active_information_from_probabilities(1.0, 0.125, InfoUnit::Bits).unwrap();
        assert_eq!(r.active, r.endogenous);
        assert_eq!(r.active, 3.0);
        assert_eq!(r.exogenous, 0.0);
    }

    #[test]
    fn probability_bounds_are_enforced() {
        assert!(active_information_from_probabilities(1.5, 0.5, InfoUnit::Bits).is_err());
        assert!(active_information_from_probabilities(0.5, -0.1, InfoUnit::Bits).is_err());
        assert!(active_information_from_probabilities(f64::NAN, 0.5, InfoUnit::Bits).is_err());
    }

    #[test]
    fn report_conversion_preserves_infinities() {
        let r = active_information_from_probabilities(0.0, 0.5, InfoUnit::Bits).unwrap();
        let n = r.convert(InfoUnit::Nats);
        assert_eq!(n.exogenous, f64::INFINITY);
        assert_eq!(n.active, f64::NEG_INFINITY);
        assert!((n.endogenous - std::f64::consts::LN_2).abs() < 1e-16);
    }

    #[test]
    fn kl_on_the_three_point_example() {
        let (p, q) = table_pmfs();
        let bits = kl_divergence(&p, &q, InfoUnit::Bits).unwrap();
        // exact value 1/3 bit
        assert!((bits - 1.0 / 3.0).abs() < 1e-15, "got {bits}");
        let nats = kl_divergence(&p, &q, InfoUnit::Nats).unwrap();
        assert!((nats - 0.23104906018664844).abs() < 1e-15, "got {nats}");
    }

    #[test]
    fn kl_edge_cases() {
        let (p, _) = table_pmfs();
        assert_eq!(kl_divergence(&p, &p, InfoUnit::Bits).unwrap(), 0.0);
        let q0 = Pmf::new(vec![1.0, 2.0, 3.0], vec![0.5, 0.5, 0.0]).unwrap();
        assert_eq!(
            kl_divergence(&p, &q0, InfoUnit::Bits).unwrap(),
            f64::INFINITY
        );
        // p can be zero where q is not
        assert!(kl_divergence(&q0, &p, InfoUnit::Bits).unwrap().is_finite());
        let other = Pmf::new(vec![1.0, 2.0, 4.0], vec![0.5, 0.25, 0.25]).unwrap();
        assert!(matches!(
            kl_divergence(&p, &other, InfoUnit::Bits),
            Err(Error::SupportMismatch(_))
        ));
    }

    #[test]
    fn disequilibria_at_the_uniform_point() {
        for n in [2usize, 3, 7, 50] {
            let pts: Vec<f64> = (0..n).map(|i| i as f64).collect();
            let p = Pmf::equiprobable(pts).unwrap();
            assert_eq!(disequilibrium_euclidean(&p).to_bits(), 0.0f64.to_bits());
            assert_eq!(disequilibrium_wootters(&p).to_bits(), 0.0f64.to_bits());
        }
    }

    #[test]
    fn disequilibria_on_known_pmfs() {
        let (p, _) = table_pmfs();
        // sum (p_i - 1/3)^2 = (1/3)^2 + (1/6)^2 + (1/6)^2 = 1/6
        assert!((disequilibrium_euclidean(&p) - 1.0 / 6.0).abs() < 1e-16);
        // mpmath: arccos(sqrt(2/9) + 2 sqrt(1/18)) = 0.33983690945412194
        assert!((disequilibrium_wootters(&p) - 0.33983690945412194).abs() < 1e-15);
        // degenerate two-point pmf: arccos(sqrt(1/2)) = pi/4
        let d = Pmf::new(vec![0.0, 1.0], vec![1.0, 0.0]).unwrap();
        assert_eq!(disequilibrium_euclidean(&d), 0.5);
        assert!(
            (disequilibrium_wootters(&d) - std::f64::consts::FRAC_PI_4).abs() < 1e-15
        );
    }
}
