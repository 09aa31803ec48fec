//! Histogram-based mode hunting: flag bins where the sample concentrates
//! beyond what the baseline explains.
//!
//! The observed range is split into equal-width bins (last bin closed so
//! the maximum lands inside). Each bin's empirical fraction is compared
//! to its baseline probability by active information in bits; a bin is
//! flagged when that value is finite and exceeds the threshold. Bins the
//! baseline cannot reach (probability zero) report no score and are never
//! flagged: with a zero denominator the comparison is undefined, and
//! flagging it would read noise as signal.

use activeinfo::{BaselineSpec, InfoUnit, Target};

use crate::errors::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct BinReport {
    pub lo: f64,
    pub hi: f64,
    /// Upper edge included (true only for the last bin).
    pub hi_closed: bool,
    pub count: u64,
    pub empirical: f64,
    /// None when the baseline gives this bin probability zero.
    pub baseline_probability: Option<f64>,
    /// `log2(empirical) - log2(baseline)`; `-inf` for empty bins; None
    /// when the baseline probability is zero.
    pub active_bits: Option<f64>,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeReport {
    pub lo: f64,
    pub hi: f64,
    pub bin_width: f64,
    pub threshold_bits: f64,
    pub total: usize,
    pub bins: Vec<BinReport>,
    pub flagged: usize,
}

pub fn mode_hunt(
    values: &[f64],
    baseline: &BaselineSpec,
    bins: usize,
    threshold_bits: f64,
) -> Result<ModeReport, CliError> {
    if bins < 2 {
        return Err(CliError::Usage(format!(
            "mode hunting needs at least 2 bins, got {bins}"
        )));
    }
    if !threshold_bits.is_finite() {
        return Err(CliError::Usage(format!(
            "threshold must be finite, got {threshold_bits}"
        )));
    }
    if values.is_empty() {
        return Err(CliError::Domain("no observations to bin".to_string()));
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(hi > lo) {
        return Err(CliError::Domain(format!(
            "observations span no range (all equal to {lo}); binning is meaningless"
        )));
    }

    // The baseline must put some mass on the sampled range, otherwise
    // every comparison is against zero and nothing can be concluded.
    let range_target = Target::closed_interval(lo, hi)?;
    let range_prob = baseline.probability(&range_target)?;
    if range_prob == 0.0 {
        return Err(CliError::Domain(format!(
            "baseline {baseline} gives the sampled range [{lo}, {hi}] probability zero"
        )));
    }

    let width = (hi - lo) / bins as f64;
    let total = values.len();
    let mut counts = vec![0u64; bins];
    for &v in values {
        let mut idx = ((v - lo) / width) as usize;
        if idx >= bins {
            idx = bins - 1; // the maximum belongs to the last bin
        }
        counts[idx] += 1;
    }

    let mut reports = Vec::with_capacity(bins);
    let mut flagged = 0usize;
    for (i, &count) in counts.iter().enumerate() {
        let bin_lo = lo + i as f64 * width;
        let bin_hi = if i + 1 == bins { hi } else { lo + (i + 1) as f64 * width };
        let hi_closed = i + 1 == bins;
        let target = Target::interval(bin_lo, bin_hi, true, hi_closed)?;
        let base_p = baseline.probability(&target)?;
        let empirical = count as f64 / total as f64;
        let (baseline_probability, active_bits) = if base_p == 0.0 {
            (None, None)
        } else if empirical == 0.0 {
            (Some(base_p), Some(f64::NEG_INFINITY))
        } else {
            (
                Some(base_p),
                Some(InfoUnit::Bits.log(empirical) - InfoUnit::Bits.log(base_p)),
            )
        };
        let flag = matches!(active_bits, Some(a) if a.is_finite() && a > threshold_bits);
        if flag {
            flagged += 1;
        }
        reports.push(BinReport {
            lo: bin_lo,
            hi: bin_hi,
            hi_closed,
            count,
            empirical,
            baseline_probability,
            active_bits,
            flagged: flag,
        });
    }

    Ok(ModeReport {
        lo,
        hi,
        bin_width: width,
        threshold_bits,
        total,
        bins: reports,
        flagged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Two tight clusters against a wide uniform baseline.
    fn bimodal_sample() -> Vec<f64> {
        let mut v = Vec::new();
        for i in 0..40 {
            v.push(1.0 + 0.01 * (i % 10) as f64);
            v.push(9.0 + 0.01 * (i % 10) as f64);
        }
        v.push(0.0);
        v.push(10.0);
        v
    }

    #[test]
    fn clusters_are_flagged_against_a_uniform_baseline() {
        let baseline = BaselineSpec::uniform(0.0, 10.0).unwrap();
        let report = mode_hunt(&bimodal_sample(), &baseline, 10, 0.5).unwrap();
        assert_eq!(report.flagged, 2, "expected both clusters flagged");
        assert_eq!(report.bins.len(), 10);
        let total_counts: u64 = report.bins.iter().map(|b| b.count).sum();
        assert_eq!(total_counts as usize, report.total);
        // flagged bins are exactly the ones containing the clusters
        for bin in &report.bins {
            let holds_cluster = (bin.lo <= 1.0 && 1.0 < bin.hi) || (bin.lo <= 9.0 && 9.0 < bin.hi);
            assert_eq!(bin.flagged, holds_cluster, "bin [{}, {}]", bin.lo, bin.hi);
        }
    }

    #[test]
    fn flags_are_invariant_under_count_scaling() {
        let baseline = BaselineSpec::uniform(0.0, 10.0).unwrap();
        let sample = bimodal_sample();
        let mut tripled = Vec::new();
        for _ in 0..3 {
            tripled.extend_from_slice(&sample);
        }
        let a = mode_hunt(&sample, &baseline, 10, 0.5).unwrap();
        let b = mode_hunt(&tripled, &baseline, 10, 0.5).unwrap();
        let flags_a: Vec<bool> = a.bins.iter().map(|x| x.flagged).collect();
        let flags_b: Vec<bool> = b.bins.iter().map(|x| x.flagged).collect();
        assert_eq!(flags_a, flags_b);
    }

    #[test]
    fn empty_bins_score_negative_infinity_and_are_not_flagged() {
        let baseline = BaselineSpec::uniform(0.0, 10.0).unwrap();
        let report = mode_hunt(&bimodal_sample(), &baseline, 10, 0.5).unwrap();
        let empty: Vec<&BinReport> = report.bins.iter().filter(|b| b.count == 0).collect();
        assert!(!empty.is_empty(), "sample should leave middle bins empty");
        for bin in empty {
            assert_eq!(bin.active_bits, Some(f64::NEG_INFINITY));
            assert!(!bin.flagged);
        }
    }

    #[test]
    fn bins_outside_the_baseline_support_are_unscored() {
        // exponential support starts at 0; data dips negative
        let baseline = BaselineSpec::exponential(2.0).unwrap();
        let mut values = vec![-2.0, -1.9, -1.8];
        values.extend((0..60).map(|i| 0.1 + i as f64 * 0.05));
        let report = mode_hunt(&values, &baseline, 6, 0.5).unwrap();
        let unscored: Vec<&BinReport> = report
            .bins
            .iter()
            .filter(|b| b.baseline_probability.is_none())
            .collect();
        assert!(!unscored.is_empty(), "negative bins must be unscored");
        for bin in unscored {
            assert!(bin.hi <= 0.0, "unscored bin [{}, {}]", bin.lo, bin.hi);
            assert_eq!(bin.active_bits, None);
            assert!(!bin.flagged);
        }
    }

    #[test]
    fn baseline_missing_the_whole_range_is_an_error() {
        let baseline = BaselineSpec::uniform(0.0, 1.0).unwrap();
        let values = vec![5.0, 6.0, 7.0];
        assert!(matches!(
            mode_hunt(&values, &baseline, 4, 0.5),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn degenerate_and_tiny_inputs_are_rejected() {
        let baseline = BaselineSpec::uniform(0.0, 10.0).unwrap();
        assert!(matches!(
            mode_hunt(&[3.0, 3.0, 3.0], &baseline, 4, 0.5),
            Err(CliError::Domain(_))
        ));
        assert!(matches!(
            mode_hunt(&[1.0, 2.0], &baseline, 1, 0.5),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            mode_hunt(&[], &baseline, 4, 0.5),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn every_observation_lands_in_exactly_one_bin() {
        let baseline = BaselineSpec::normal(0.0, 4.0).unwrap();
        let values: Vec<f64> = (-20..=20).map(|i| i as f64 * 0.17).collect();
        let report = mode_hunt(&values, &baseline, 7, 0.5).unwrap();
        let total: u64 = report.bins.iter().map(|b| b.count).sum();
        assert_eq!(total as usize, values.len());
        // the maximum value must be inside (not beyond) the last bin
        let last = report.bins.last().unwrap();
        assert!(last.hi_closed && last.count > 0);
    }
}
