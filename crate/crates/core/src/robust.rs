//! Robust location and scale: median, scaled MAD, and a trimmed IQR
//! fallback for when the MAD collapses to zero.

use crate::error::{usage, Result};

/// Normal-consistency factor for the MAD.
pub const MAD_SCALE: f64 = 1.4826;

/// Fraction of the largest absolute deviations dropped by the trimmed IQR.
pub const TRIM_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    Mad,
    TrimmedIqr,
    DegenerateAllEqual,
}

impl Estimator {
    pub fn as_str(self) -> &'static str {
        match self {
            Estimator::Mad => "mad",
            Estimator::TrimmedIqr => "trimmed_iqr",
            Estimator::DegenerateAllEqual => "degenerate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustEstimates {
    pub mu_hat: f64,
    pub sigma_hat: f64,
    pub estimator_used: Estimator,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub tau: f64,
    pub c: f64,
}

fn check_values(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return usage("median of an empty list");
    }
    if values.iter().any(|x| !x.is_finite()) {
        return usage("robust statistics need finite values");
    }
    Ok(())
}

fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    v
}

fn median_of_sorted(v: &[f64]) -> f64 {
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Middle order statistic; mean of the middle pair for even lengths.
pub fn median(values: &[f64]) -> Result<f64> {
    check_values(values)?;
    Ok(median_of_sorted(&sorted(values)))
}

/// `1.4826 · median(|v − mu|)`.
pub fn mad_scaled(values: &[f64], mu: f64) -> Result<f64> {
    check_values(values)?;
    let dev: Vec<f64> = values.iter().map(|x| (x - mu).abs()).collect();
    Ok(MAD_SCALE * median(&dev)?)
}

/// Inclusive linear-interpolation percentile of sorted data: rank
/// `p·(n−1)` counted from zero.
fn percentile_sorted(v: &[f64], p: f64) -> f64 {
    let h = p * (v.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(v.len() - 1);
    let frac = h - lo as f64;
    v[lo] + frac * (v[hi] - v[lo])
}

/// Interquartile range of `|v − mu|` after dropping the largest
/// `⌈0.1·len⌉` deviations.
pub fn trimmed_iqr_scale(values: &[f64], mu: f64) -> Result<f64> {
    check_values(values)?;
    if values.len() < 4 {
        return usage(format!(
            "trimmed IQR needs at least 4 values, got {}",
            values.len()
        ));
    }
    let dev = sorted(&values.iter().map(|x| (x - mu).abs()).collect::<Vec<_>>());
    let drop = (TRIM_FRACTION * dev.len() as f64).ceil() as usize;
    let kept = &dev[..dev.len() - drop];
    Ok((percentile_sorted(kept, 0.75) - percentile_sorted(kept, 0.25)).max(0.0))
}

/// Median and scaled MAD, falling back to the trimmed IQR when the MAD is
/// zero, and to a degenerate zero scale when that is zero too.
pub fn robust_estimates(values: &[f64]) -> Result<RobustEstimates> {
    let mu_hat = median(values)?;
    let mad = mad_scaled(values, mu_hat)?;
    if mad > 0.0 {
        return Ok(RobustEstimates {
            mu_hat,
            sigma_hat: mad,
            estimator_used: Estimator::Mad,
        });
    }
    if values.len() >= 4 {
        let iqr = trimmed_iqr_scale(values, mu_hat)?;
        if iqr > 0.0 {
            return Ok(RobustEstimates {
                mu_hat,
                sigma_hat: iqr,
                estimator_used: Estimator::TrimmedIqr,
            });
        }
    }
    Ok(RobustEstimates {
        mu_hat,
        sigma_hat: 0.0,
        estimator_used: Estimator::DegenerateAllEqual,
    })
}

/// `τ = μ̂ + c·σ̂`.
pub fn compute_threshold(est: &RobustEstimates, c: f64) -> Result<Threshold> {
    if !(c > 0.0 && c.is_finite()) {
        return usage(format!("threshold constant must be positive, got {c}"));
    }
    let tau = match est.estimator_used {
        Estimator::DegenerateAllEqual => est.mu_hat,
        _ => est.mu_hat + c * est.sigma_hat,
    };
    Ok(Threshold { tau, c })
}
