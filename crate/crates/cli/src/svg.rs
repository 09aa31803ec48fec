//! CDF overlay plots as standalone SVG.
//!
//! Rendering is fully deterministic: fixed canvas, fixed palette, and all
//! coordinates rounded to two decimals. Continuous CDFs are sampled on an
//! even grid; finite pmfs are drawn as proper right-continuous steps.

use std::fmt::Write as _;

use activeinfo::Distribution;

use crate::errors::CliError;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 45.0;
const SAMPLES: usize = 400;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn x_px(x: f64, lo: f64, hi: f64) -> f64 {
    MARGIN_LEFT + (x - lo) / (hi - lo) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
}

fn y_px(c: f64) -> f64 {
    MARGIN_TOP + (1.0 - c) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

// Smallest x with CDF >= level, by expanding bracket + bisection.
fn quantile(d: &Distribution, level: f64) -> Result<f64, CliError> {
    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    for _ in 0..200 {
        if d.cdf(lo)? <= level {
            break;
        }
        lo *= 2.0;
    }
    for _ in 0..200 {
        if d.cdf(hi)? >= level {
            break;
        }
        hi *= 2.0;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if d.cdf(mid)? < level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn plot_range(dists: &[&Distribution]) -> Result<(f64, f64), CliError> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for d in dists {
        let (a, b) = match d.finite_points() {
            Some(atoms) => (atoms[0], atoms[atoms.len() - 1]),
            None => (quantile(d, 0.001)?, quantile(d, 0.999)?),
        };
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let pad = 0.05 * (hi - lo).max(1e-6);
    Ok((lo - pad, hi + pad))
}

fn polyline_points(d: &Distribution, lo: f64, hi: f64) -> Result<String, CliError> {
    let mut pts = String::new();
    if let Some(atoms) = d.finite_points() {
        // right-continuous staircase: horizontal run, then vertical rise
        let mut level = 0.0;
        let _ = write!(pts, "{:.2},{:.2} ", x_px(lo, lo, hi), y_px(0.0));
        for &a in atoms {
            let px = x_px(a, lo, hi);
            let _ = write!(pts, "{px:.2},{:.2} ", y_px(level));
            level = d.cdf(a)?;
            let _ = write!(pts, "{px:.2},{:.2} ", y_px(level));
        }
        let _ = write!(pts, "{:.2},{:.2}", x_px(hi, lo, hi), y_px(level));
    } else {
        for i in 0..=SAMPLES {
            let x = lo + (hi - lo) * i as f64 / SAMPLES as f64;
            let c = d.cdf(x)?;
            let _ = write!(pts, "{:.2},{:.2}", x_px(x, lo, hi), y_px(c));
            if i < SAMPLES {
                pts.push(' ');
            }
        }
    }
    Ok(pts)
}

/// Render labeled CDFs on one canvas.
pub fn cdf_overlay(dists: &[(String, &Distribution)]) -> Result<String, CliError> {
    assert!(!dists.is_empty(), "overlay needs at least one distribution");
    let only: Vec<&Distribution> = dists.iter().map(|(_, d)| *d).collect();
    let (lo, hi) = plot_range(&only)?;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        svg,
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );

    // axes
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"#333\" stroke-width=\"1\"/>"
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"#333\" stroke-width=\"1\"/>"
    );

    // y ticks at quarter levels
    for i in 0..=4 {
        let level = i as f64 / 4.0;
        let y = y_px(level);
        let _ = writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"#333\" stroke-width=\"1\"/>",
            x0 - 5.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">{level:.2}</text>",
            x0 - 8.0,
            y + 4.0
        );
    }

    // x ticks at quarter positions
    for i in 0..=4 {
        let x = lo + (hi - lo) * i as f64 / 4.0;
        let px = x_px(x, lo, hi);
        let _ = writeln!(
            svg,
            "  <line x1=\"{px:.2}\" y1=\"{y0:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"#333\" stroke-width=\"1\"/>",
            y0 + 5.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{px:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{x:.2}</text>",
            y0 + 20.0
        );
    }

    // axis labels
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">x</text>",
        0.5 * (x0 + x1),
        HEIGHT - 8.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"14\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 {:.2})\">CDF</text>",
        0.5 * (y0 + y1),
        0.5 * (y0 + y1)
    );

    // curves
    for (i, (_, d)) in dists.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts = polyline_points(d, lo, hi)?;
        let _ = writeln!(
            svg,
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{pts}\"/>"
        );
    }

    // legend
    for (i, (label, _)) in dists.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let ly = MARGIN_TOP + 16.0 + 18.0 * i as f64;
        let _ = writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x0 + 10.0,
            x0 + 34.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>",
            x0 + 40.0,
            ly + 4.0,
            xml_escape(label)
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use activeinfo::{BaselineSpec, Pmf};

    #[test]
    fn overlay_includes_all_curves_and_labels() {
        let e = Distribution::from(BaselineSpec::exponential(2.0).unwrap());
        let n = Distribution::from(BaselineSpec::normal(0.0, 1.0).unwrap());
        let svg = cdf_overlay(&[("exp <2>".to_string(), &e), ("norm".to_string(), &n)]).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("exp &lt;2&gt;"), "labels must be XML-escaped");
        assert!(svg.contains("norm"));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let e = Distribution::from(BaselineSpec::exponential_rate(1.5).unwrap());
        let u = Distribution::from(BaselineSpec::uniform(0.0, 4.0).unwrap());
        let args = [("a".to_string(), &e), ("b".to_string(), &u)];
        assert_eq!(cdf_overlay(&args).unwrap(), cdf_overlay(&args).unwrap());
    }

    #[test]
    fn pmfs_render_as_steps() {
        let p = Distribution::from(Pmf::equiprobable(vec![1.0, 2.0, 3.0]).unwrap());
        let svg = cdf_overlay(&[("pmf".to_string(), &p)]).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        // step curve: at least 2 points per atom plus endpoints
        let pts_attr = svg
            .split("points=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        assert!(pts_attr.split(' ').count() >= 8);
    }
}
