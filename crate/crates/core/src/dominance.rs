//! Stochastic dominance checks and their information-theoretic
//! characterization.
//!
//! `phi` is *dominated by* `psi` when `CDF_phi(x) >= CDF_psi(x)` for every
//! real `x`: the dominated distribution piles its mass earlier.
//! Equivalently, for every half-line target `(-inf, x]`, the active
//! information of `phi` as alternative against `psi` as baseline is
//! nonnegative, and on complement targets `(x, +inf)` it is nonpositive.
//! [`verify_dominance_lemma`] cross-checks both readings point by point.
//!
//! Checking strategy by distribution kind:
//!
//! * two finite pmfs: exact comparison on the union of their atoms (the
//!   CDFs are step functions, so atoms decide everything);
//! * two exponentials under [`Grid::Auto`]: exact rate comparison
//!   (survival functions are ordered iff the means are);
//! * anything else: a finite grid, either caller-supplied or
//!   quantile-spread automatic, with comparisons slack by [`GRID_TIE`]
//!   to absorb evaluation roundoff.

use std::fmt;

use crate::distributions::{BaselineSpec, Distribution};
use crate::error::{Error, Result};
use crate::units::InfoUnit;

/// Comparison slack for CDF values computed through logs/erfc on grid
/// points. Exact paths (finite-finite, exponential-exponential) use none.
pub const GRID_TIE: f64 = 1e-12;

const AUTO_GRID_POINTS: usize = 1001;

/// Where to compare CDFs when no exact path applies.
#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    /// Quantile-spread points chosen from the distributions themselves.
    Auto,
    /// Evenly spaced points `lo, lo+step, ..., hi`.
    Range { lo: f64, hi: f64, step: f64 },
}

impl Grid {
    pub fn range(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && step.is_finite()) {
            return Err(Error::InvalidParameter(
                "grid bounds and step must be finite".into(),
            ));
        }
        if !(hi > lo) {
            return Err(Error::InvalidParameter(format!(
                "grid needs hi > lo, got [{lo}, {hi}]"
            )));
        }
        if !(step > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "grid step must be positive, got {step}"
            )));
        }
        Ok(Grid::Range { lo, hi, step })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grid::Auto => write!(f, "auto"),
            Grid::Range { lo, hi, step } => write!(f, "range[{lo}, {hi}] step {step}"),
        }
    }
}

/// Outcome of a dominance check.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceReport {
    /// True when the first distribution is dominated by the second.
    pub dominated: bool,
    /// A point where the ordering fails, if any.
    pub witness: Option<f64>,
    /// How many comparison points were evaluated.
    pub checked_points: usize,
    /// Human-readable description of the comparison set.
    pub grid: String,
}

fn ordered_dedup(mut points: Vec<f64>) -> Vec<f64> {
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| a.to_bits() == b.to_bits());
    points
}

fn range_points(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let steps = ((hi - lo) / step).round() as usize;
    (0..=steps).map(|i| lo + i as f64 * step).collect()
}

// Spread comparison points over where the two distributions actually live:
// quantiles of the even mixture (F1 + F2)/2, found by bisection.
fn auto_grid(phi: &Distribution, psi: &Distribution) -> Result<Vec<f64>> {
    let mix = |x: f64| -> Result<f64> { Ok(0.5 * (phi.cdf(x)? + psi.cdf(x)?)) };

    // Expand a bracket until the mixture CDF spans (1e-6, 1 - 1e-6).
    let mut lo = -1.0;
    let mut hi = 1.0;
    for _ in 0..200 {
        if mix(lo)? <= 1e-6 {
            break;
        }
        lo = if lo.abs() < 1.0 { -1.0 } else { lo * 2.0 };
    }
    for _ in 0..200 {
        if mix(hi)? >= 1.0 - 1e-6 {
            break;
        }
        hi = if hi.abs() < 1.0 { 1.0 } else { hi * 2.0 };
    }

    let mut points = Vec::with_capacity(AUTO_GRID_POINTS);
    for i in 0..AUTO_GRID_POINTS {
        let level = 1e-6 + (1.0 - 2e-6) * i as f64 / (AUTO_GRID_POINTS - 1) as f64;
        let (mut a, mut b) = (lo, hi);
        for _ in 0..80 {
            let mid = 0.5 * (a + b);
            if mix(mid)? < level {
                a = mid;
            } else {
                b = mid;
            }
        }
        points.push(0.5 * (a + b));
    }
    Ok(ordered_dedup(points))
}

// The comparison set for the generic (grid) path: grid points plus any
// finite side's atoms, where step CDFs jump.
fn comparison_points(phi: &Distribution, psi: &Distribution, grid: &Grid) -> Result<Vec<f64>> {
    let mut points = match grid {
        Grid::Range { lo, hi, step } => {
            Grid::range(*lo, *hi, *step)?;
            range_points(*lo, *hi, *step)
        }
        Grid::Auto => auto_grid(phi, psi)?,
    };
    for d in [phi, psi] {
        if let Some(atoms) = d.finite_points() {
            points.extend_from_slice(atoms);
        }
    }
    Ok(ordered_dedup(points))
}

fn reject_unorderable(d: &Distribution, role: &str) -> Result<()> {
    if let Distribution::Baseline(BaselineSpec::Equiprobable { .. }) = d {
        return Err(Error::UnorderableSupport(format!(
            "{role} distribution is equiprobable on an abstract set; it has no real-line CDF to compare"
        )));
    }
    Ok(())
}

/// Is `phi` dominated by `psi` (does `phi`'s CDF lie pointwise at or
/// above `psi`'s)?
pub fn is_dominated(phi: &Distribution, psi: &Distribution, grid: &Grid) -> Result<DominanceReport> {
    reject_unorderable(phi, "first")?;
    reject_unorderable(psi, "second")?;

    // Finite vs finite: atoms decide exactly.
    if let (Some(a), Some(b)) = (phi.finite_points(), psi.finite_points()) {
        let mut atoms: Vec<f64> = a.to_vec();
        atoms.extend_from_slice(b);
        let atoms = ordered_dedup(atoms);
        let mut witness = None;
        for &x in &atoms {
            if !(phi.cdf(x)? >= psi.cdf(x)?) {
                witness = Some(x);
                break;
            }
        }
        return Ok(DominanceReport {
            dominated: witness.is_none(),
            witness,
            checked_points: atoms.len(),
            grid: format!("atoms-exact ({} atoms)", atoms.len()),
        });
    }

    // Exponential vs exponential under the automatic grid: survival
    // functions exp(-x/mu) are globally ordered by the means, so the
    // answer is exact. An explicit grid request still runs the real scan.
    if let (
        Distribution::Baseline(BaselineSpec::Exponential { mu: mu_phi }),
        Distribution::Baseline(BaselineSpec::Exponential { mu: mu_psi }),
        Grid::Auto,
    ) = (phi, psi, grid)
    {
        let dominated = mu_phi <= mu_psi;
        return Ok(DominanceReport {
            dominated,
            witness: if dominated {
                None
            } else {
                Some(0.5 * (mu_phi + mu_psi))
            },
            checked_points: 0,
            grid: "exponential-rates-exact".into(),
        });
    }

    let points = comparison_points(phi, psi, grid)?;
    let mut witness = None;
    for &x in &points {
        if !(phi.cdf(x)? >= psi.cdf(x)? - GRID_TIE) {
            witness = Some(x);
            break;
        }
    }
    Ok(DominanceReport {
        dominated: witness.is_none(),
        witness,
        checked_points: points.len(),
        grid: grid.to_string(),
    })
}

/// Cross-check the CDF ordering against its active-information reading,
/// point by point.
///
/// At each comparison point `x` the check computes both sides
/// independently: the raw CDF comparison `F_phi(x) >= F_psi(x)`, and the
/// sign of `log F_phi(x) - log F_psi(x)` (active information of `phi`
/// against baseline `psi` on the target `(-inf, x]`). Points where both
/// CDFs vanish are vacuous; a zero baseline CDF with a positive
/// alternative CDF reads as `+inf >= 0`, consistent. When the ordering
/// holds globally, a second pass confirms the complement reading: on
/// `(x, +inf)` the active information `log(1 - F_phi) - log(1 - F_psi)`
/// must not be positive.
///
/// Returns `Ok(true)` when every point agrees, `Ok(false)` on any
/// mismatch.
pub fn verify_dominance_lemma(
    phi: &Distribution,
    psi: &Distribution,
    grid: &Grid,
    unit: InfoUnit,
) -> Result<bool> {
    reject_unorderable(phi, "first")?;
    reject_unorderable(psi, "second")?;

    let points = if let (Some(a), Some(b)) = (phi.finite_points(), psi.finite_points()) {
        let mut atoms: Vec<f64> = a.to_vec();
        atoms.extend_from_slice(b);
        ordered_dedup(atoms)
    } else {
        comparison_points(phi, psi, grid)?
    };

    let mut all_dominated = true;
    for &x in &points {
        let c_phi = phi.cdf(x)?;
        let c_psi = psi.cdf(x)?;
        if c_phi == 0.0 && c_psi == 0.0 {
            continue;
        }
        let dominated_here = c_phi >= c_psi;
        // Active information of the half-line target; a zero baseline CDF
        // with positive alternative is +inf, which agrees with dominance.
        let ai_nonneg = if c_psi == 0.0 {
            true
        } else if c_phi == 0.0 {
            false
        } else {
            unit.log(c_phi) - unit.log(c_psi) >= 0.0
        };
        if dominated_here != ai_nonneg {
            return Ok(false);
        }
        all_dominated &= dominated_here;
    }

    if all_dominated {
        // Complement reading: targets (x, +inf) must carry nonpositive
        // active information.
        for &x in &points {
            let comp_phi = 1.0 - phi.cdf(x)?;
            let comp_psi = 1.0 - psi.cdf(x)?;
            if comp_phi == 0.0 && comp_psi == 0.0 {
                continue;
            }
            if comp_psi == 0.0 {
                // baseline zero, alternative positive: +inf, a positive
                // active information where none is allowed
                return Ok(false);
            }
            if comp_phi == 0.0 {
                continue; // -inf <= 0 holds
            }
            if unit.log(comp_phi) - unit.log(comp_psi) > 0.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxent::Pmf;

    fn table_pair() -> (Distribution, Distribution) {
        let pts = vec![1.0, 2.0, 3.0];
        let x = Pmf::new(pts.clone(), vec![2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0]).unwrap();
        let x_prime = Pmf::new(pts, vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]).unwrap();
        (Distribution::from(x), Distribution::from(x_prime))
    }

    #[test]
    fn three_point_example_is_exactly_dominated() {
        let (x, x_prime) = table_pair();
        let r = is_dominated(&x, &x_prime, &Grid::Auto).unwrap();
        assert!(r.dominated);
        assert_eq!(r.witness, None);
        assert_eq!(r.checked_points, 3);
        assert!(r.grid.contains("atoms-exact"));
        // and not the other way around
        let r = is_dominated(&x_prime, &x, &Grid::Auto).unwrap();
        assert!(!r.dominated);
        assert_eq!(r.witness, Some(1.0));
    }

    #[test]
    fn every_distribution_dominates_itself() {
        let (x, _) = table_pair();
        assert!(is_dominated(&x, &x, &Grid::Auto).unwrap().dominated);
        let e = Distribution::from(BaselineSpec::exponential(2.0).unwrap());
        assert!(is_dominated(&e, &e, &Grid::Auto).unwrap().dominated);
        let n = Distribution::from(BaselineSpec::normal(0.0, 1.0).unwrap());
        assert!(is_dominated(&n, &n, &Grid::Auto).unwrap().dominated);
    }

    #[test]
    fn exponential_chain_orders_by_mean() {
        let fast = Distribution::from(BaselineSpec::exponential_rate(1.5).unwrap());
        let mid = Distribution::from(BaselineSpec::exponential_rate(1.0).unwrap());
        let slow = Distribution::from(BaselineSpec::exponential_rate(0.5).unwrap());
        // higher rate = smaller mean = mass earlier = dominated
        for (a, b) in [(&fast, &mid), (&mid, &slow), (&fast, &slow)] {
            let auto = is_dominated(a, b, &Grid::Auto).unwrap();
            assert!(auto.dominated);
            assert_eq!(auto.grid, "exponential-rates-exact");
            let gridded =
                is_dominated(a, b, &Grid::range(0.0, 10.0, 0.01).unwrap()).unwrap();
            assert!(gridded.dominated);
            assert_eq!(gridded.checked_points, 1001);
            assert_eq!(gridded.witness, None);
        }
        let rev = is_dominated(&slow, &fast, &Grid::Auto).unwrap();
        assert!(!rev.dominated);
        assert!(rev.witness.is_some());
    }

    #[test]
    fn normals_with_different_means() {
        let left = Distribution::from(BaselineSpec::normal(-1.0, 1.0).unwrap());
        let right = Distribution::from(BaselineSpec::normal(1.0, 1.0).unwrap());
        assert!(is_dominated(&left, &right, &Grid::Auto).unwrap().dominated);
        let r = is_dominated(&right, &left, &Grid::Auto).unwrap();
        assert!(!r.dominated);
    }

    #[test]
    fn crossing_cdfs_are_unordered_both_ways() {
        // same mean, different spread: CDFs cross at the mean
        let narrow = Distribution::from(BaselineSpec::normal(0.0, 1.0).unwrap());
        let wide = Distribution::from(BaselineSpec::normal(0.0, 9.0).unwrap());
        assert!(!is_dominated(&narrow, &wide, &Grid::Auto).unwrap().dominated);
        assert!(!is_dominated(&wide, &narrow, &Grid::Auto).unwrap().dominated);
    }

    #[test]
    fn witness_points_actually_violate() {
        let a = Distribution::from(BaselineSpec::exponential(3.0).unwrap());
        let b = Distribution::from(BaselineSpec::exponential(1.0).unwrap());
        let r = is_dominated(&a, &b, &Grid::range(0.0, 10.0, 0.01).unwrap()).unwrap();
        assert!(!r.dominated);
        let w = r.witness.expect("violation must carry a witness");
        assert!(a.cdf(w).unwrap() < b.cdf(w).unwrap());
    }

    #[test]
    fn equiprobable_baselines_cannot_be_ordered() {
        let e = Distribution::from(BaselineSpec::equiprobable(5).unwrap());
        let u = Distribution::from(BaselineSpec::uniform(0.0, 1.0).unwrap());
        assert!(matches!(
            is_dominated(&e, &u, &Grid::Auto),
            Err(Error::UnorderableSupport(_))
        ));
        assert!(matches!(
            verify_dominance_lemma(&u, &e, &Grid::Auto, InfoUnit::Bits),
            Err(Error::UnorderableSupport(_))
        ));
    }

    #[test]
    fn lemma_agrees_on_the_table_pair() {
        let (x, x_prime) = table_pair();
        assert!(verify_dominance_lemma(&x, &x_prime, &Grid::Auto, InfoUnit::Bits).unwrap());
        assert!(verify_dominance_lemma(&x_prime, &x, &Grid::Auto, InfoUnit::Bits).unwrap());
    }

    #[test]
    fn lemma_agrees_on_continuous_pairs() {
        let e1 = Distribution::from(BaselineSpec::exponential_rate(1.5).unwrap());
        let e2 = Distribution::from(BaselineSpec::exponential_rate(0.5).unwrap());
        let g = Grid::range(0.0, 10.0, 0.01).unwrap();
        assert!(verify_dominance_lemma(&e1, &e2, &g, InfoUnit::Bits).unwrap());
        assert!(verify_dominance_lemma(&e2, &e1, &g, InfoUnit::Nats).unwrap());
        let n1 = Distribution::from(BaselineSpec::normal(-1.0, 1.0).unwrap());
        let n2 = Distribution::from(BaselineSpec::normal(1.0, 1.0).unwrap());
        assert!(verify_dominance_lemma(&n1, &n2, &Grid::Auto, InfoUnit::Bits).unwrap());
    }

    #[test]
    fn mixed_finite_and_continuous_pairs_use_the_grid() {
        let pmf = Distribution::from(Pmf::equiprobable(vec![1.0, 2.0, 3.0]).unwrap());
        let exp = Distribution::from(BaselineSpec::exponential(100.0).unwrap());
        // exponential mass leaks below the pmf's first atom and the pmf
        // jumps ahead at it, so neither direction is ordered
        let r = is_dominated(&pmf, &exp, &Grid::Auto).unwrap();
        assert!(!r.dominated);
        let w = r.witness.expect("violation needs a witness");
        assert!(w < 1.0, "violation should sit below the first atom, got {w}");
        let r = is_dominated(&exp, &pmf, &Grid::Auto).unwrap();
        assert!(!r.dominated);
        // a real grid ran (quantile levels inside the pmf's CDF jumps all
        // collapse onto its atoms, so the count is well under 1001)
        assert_eq!(r.grid, "auto");
        assert!(r.checked_points > 3, "got {}", r.checked_points);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::range(0.0, 10.0, 0.01).is_ok());
        assert!(Grid::range(10.0, 0.0, 0.01).is_err());
        assert!(Grid::range(0.0, 10.0, 0.0).is_err());
        assert!(Grid::range(0.0, f64::INFINITY, 1.0).is_err());
    }
}
