//! Closed-form expected per-node cost `average degree × average path length`
//! for the three random graph families.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Denominators below this are reported as near-singular.
const NEAR_SINGULAR: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostEstimate {
    pub expected_avg_degree: f64,
    pub expected_avg_path_length: f64,
    pub expected_cost: f64,
    /// The path-length formula divides by a quantity close to zero.
    pub near_singular: bool,
}

impl CostEstimate {
    fn new(avg_degree: f64, avg_path: f64, near_singular: bool) -> Self {
        CostEstimate {
            expected_avg_degree: avg_degree,
            expected_avg_path_length: avg_path,
            expected_cost: avg_degree * avg_path,
            near_singular,
        }
    }
}

/// Watts–Strogatz only has closed forms in the two rewiring limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WsCostEstimate {
    /// Lattice limit, `p → 0`.
    pub ordered: CostEstimate,
    /// Random limit, `p → 1`.
    pub random: CostEstimate,
}

/// Erdős–Rényi with `n` nodes and `m` edges: degree `2m/n`, path length
/// `(ln n − γ) / ln(2m/n) + 1/2`.
pub fn expected_cost_er(n: usize, m: usize) -> Result<CostEstimate> {
    if n < 2 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and m >= 1 (n={n}, m={m})"
        )));
    }
    let (n, m) = (n as f64, m as f64);
    let degree = 2.0 * m / n;
    let denom = degree.ln();
    if denom <= 0.0 {
        return Err(Error::Undefined(format!(
            "mean degree {degree} <= 1 makes ln(2m/n) non-positive"
        )));
    }
    let path = (n.ln() - EULER_GAMMA) / denom + 0.5;
    Ok(CostEstimate::new(degree, path, denom < NEAR_SINGULAR))
}

/// Barabási–Albert with `n` nodes and attachment count `m`: degree `2m`,
/// path length `(ln n − ln(m/2) − 1 − γ) / (ln ln n + ln(m/2)) + 3/2`.
pub fn expected_cost_ba(n: usize, m: usize) -> Result<CostEstimate> {
    if m < 1 || n <= m {
        return Err(Error::InvalidParameter(format!(
            "need n > m >= 1 (n={n}, m={m})"
        )));
    }
    let (nf, mf) = (n as f64, m as f64);
    let half_m = (mf / 2.0).ln();
    let denom = nf.ln().ln() + half_m;
    if denom.is_nan() || denom <= 0.0 {
        return Err(Error::Undefined(format!(
            "denominator ln(ln n) + ln(m/2) = {denom} is not positive"
        )));
    }
    let path = (nf.ln() - half_m - 1.0 - EULER_GAMMA) / denom + 1.5;
    Ok(CostEstimate::new(2.0 * mf, path, denom < NEAR_SINGULAR))
}

/// Watts–Strogatz with `n` nodes and lattice degree `k`: degree `k`, path
/// length `n/(2k)` as `p → 0` and `ln n / ln k` as `p → 1`.
pub fn expected_cost_ws(n: usize, k: usize, p: f64) -> Result<WsCostEstimate> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    if k == 1 {
        return Err(Error::Undefined("ln k = 0 for k = 1".into()));
    }
    if k < 2 || n <= k {
        return Err(Error::InvalidParameter(format!(
            "need n > k >= 2 (n={n}, k={k})"
        )));
    }
    let (nf, kf) = (n as f64, k as f64);
    Ok(WsCostEstimate {
        ordered: CostEstimate::new(kf, nf / (2.0 * kf), false),
        random: CostEstimate::new(kf, nf.ln() / kf.ln(), false),
    })
}
