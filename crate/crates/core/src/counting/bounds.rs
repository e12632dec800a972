use std::f64::consts::PI;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("degree r = {r} must lie in 1..={n}")]
    DegreeOutOfRange { n: usize, r: usize },
    #[error("block side k must be at least {min}, got {k}")]
    OrderTooSmall { k: usize, min: usize },
}

/// `ln x!` via log-gamma.
pub fn ln_factorial(x: usize) -> f64 {
    libm::lgamma(x as f64 + 1.0)
}

/// The upper Stirling estimate `ln[(x/e)^x · √(2πx) · e^{1/(12x)}]`, which
/// exceeds `ln x!` for every `x ≥ 1`.
pub fn stirling_upper_ln(x: usize) -> f64 {
    let x = x as f64;
    x * x.ln() - x + 0.5 * (2.0 * PI * x).ln() + 1.0 / (12.0 * x)
}

/// Log bounds on the number of perfect matchings of an `r`-regular
/// bipartite graph with `n` vertices per side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingBounds {
    /// `ln[n! (r/n)^n]`.
    pub log_lower: f64,
    /// `ln[(r!)^{n/r}]`.
    pub log_upper: f64,
}

pub fn matching_bounds(n: usize, r: usize) -> Result<MatchingBounds, BoundsError> {
    if r == 0 || r > n {
        return Err(BoundsError::DegreeOutOfRange { n, r });
    }
    let (nf, rf) = (n as f64, r as f64);
    Ok(MatchingBounds {
        log_lower: ln_factorial(n) + nf * (rf / nf).ln(),
        log_upper: nf / rf * ln_factorial(r),
    })
}

/// Lower and upper bounds on the number of Sudoku squares of order `n`,
/// all in natural-log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub k: usize,
    pub n: usize,
    pub log_lower: f64,
    pub log_upper: f64,
    /// `ln[n!^{2n} k!^{kn} / (k^{n²} n^{n²})]`, algebraically equal to
    /// `log_lower`.
    pub log_closed_form_lower: f64,
    /// `bound^{1/n²} · e³ / n`.
    pub ratio_lower: f64,
    pub ratio_upper: f64,
}

/// Evaluates the row-block product
/// `∏_{l=1..k} [X(n, n − k(l−1)) / (k!)^k]^k · (∏_{r=1..k} X(n, r))^k`
/// with `X` the lower matching bound and then the upper one.
///
/// ```
/// use sudoku_rect::counting::sudoku_bounds;
///
/// let b = sudoku_bounds(2).unwrap();
/// assert!((b.log_upper.exp() - 576.0).abs() < 1e-9);
/// assert!(b.log_lower < 288f64.ln() && 288f64.ln() < b.log_upper);
/// ```
pub fn sudoku_bounds(k: usize) -> Result<BoundsReport, BoundsError> {
    if k == 0 {
        return Err(BoundsError::OrderTooSmall { k, min: 1 });
    }
    let n = k * k;
    let (kf, nf) = (k as f64, n as f64);
    let block_perms = kf * ln_factorial(k);
    let (mut lower, mut upper) = (0.0, 0.0);
    for l in 1..=k {
        let b = matching_bounds(n, n - k * (l - 1))?;
        lower += kf * (b.log_lower - block_perms);
        upper += kf * (b.log_upper - block_perms);
    }
    for r in 1..=k {
        let b = matching_bounds(n, r)?;
        lower += kf * b.log_lower;
        upper += kf * b.log_upper;
    }
    let n2 = nf * nf;
    let closed = 2.0 * nf * ln_factorial(n) + kf * nf * ln_factorial(k) - n2 * kf.ln() - n2 * nf.ln();
    let ratio = |log: f64| (log / n2 + 3.0 - nf.ln()).exp();
    Ok(BoundsReport {
        k,
        n,
        log_lower: lower,
        log_upper: upper,
        log_closed_form_lower: closed,
        ratio_lower: ratio(lower),
        ratio_upper: ratio(upper),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRow {
    pub k: usize,
    pub ratio_lower: f64,
    pub ratio_upper: f64,
}

/// Ratios for every `k` in `2..=k_max`.
pub fn asymptotic_table(k_max: usize) -> Result<Vec<AsymptoticRow>, BoundsError> {
    if k_max < 2 {
        return Err(BoundsError::OrderTooSmall { k: k_max, min: 2 });
    }
    (2..=k_max)
        .map(|k| {
            sudoku_bounds(k).map(|b| AsymptoticRow {
                k,
                ratio_lower: b.ratio_lower,
                ratio_upper: b.ratio_upper,
            })
        })
        .collect()
}

/// Aligned table with a header line.
pub fn render_bounds_table(reports: &[BoundsReport]) -> String {
    let mut out = format!(
        "{:>5} {:>8} {:>18} {:>18} {:>11} {:>11}\n",
        "k", "n", "logLower", "logUpper", "ratioLower", "ratioUpper"
    );
    for b in reports {
        let _ = writeln!(
            out,
            "{:>5} {:>8} {:>18.6} {:>18.6} {:>11.6} {:>11.6}",
            b.k, b.n, b.log_lower, b.log_upper, b.ratio_lower, b.ratio_upper
        );
    }
    out
}

/// One `key=value` record per line.
pub fn render_bounds_kv(reports: &[BoundsReport]) -> String {
    let mut out = String::new();
    for b in reports {
        let _ = writeln!(
            out,
            "k={} n={} logLower={} logUpper={} ratioLower={} ratioUpper={}",
            b.k, b.n, b.log_lower, b.log_upper, b.ratio_lower, b.ratio_upper
        );
    }
    out
}
