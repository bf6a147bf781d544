//! Row-wise outlier detection on the sketch.

use crate::error::{usage, Error, Result};
use crate::matrix::{norm2, DenseMatrix};
use crate::robust::{compute_threshold, robust_estimates, RobustEstimates, Threshold};

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionResult {
    /// Projected norm `r_i` of every row.
    pub row_norms: Vec<f64>,
    pub estimates: RobustEstimates,
    pub threshold: Threshold,
    /// Rows with `r_i <= tau`, ascending.
    pub retained: Vec<usize>,
    /// Rows with `r_i > tau`, ascending.
    pub discarded: Vec<usize>,
}

impl DetectionResult {
    pub fn is_retained(&self, i: usize) -> bool {
        self.row_norms[i] <= self.threshold.tau
    }
}

/// Thresholds the row norms of `s` at `τ = μ̂ + c·σ̂`.
pub fn detect_outliers(s: &DenseMatrix, c: f64) -> Result<DetectionResult> {
    if s.rows() < 2 {
        return usage(format!("detection needs at least 2 rows, got {}", s.rows()));
    }
    let row_norms: Vec<f64> = (0..s.rows()).map(|i| norm2(s.row(i))).collect();
    detect_from_norms(row_norms, c)
}

/// Same as [`detect_outliers`] on precomputed norms.
pub fn detect_from_norms(row_norms: Vec<f64>, c: f64) -> Result<DetectionResult> {
    if row_norms.len() < 2 {
        return usage(format!(
            "detection needs at least 2 rows, got {}",
            row_norms.len()
        ));
    }
    let estimates = robust_estimates(&row_norms)?;
    let threshold = compute_threshold(&estimates, c)?;
    let (retained, discarded): (Vec<usize>, Vec<usize>) =
        (0..row_norms.len()).partition(|&i| row_norms[i] <= threshold.tau);
    if retained.is_empty() {
        return Err(Error::AllRowsDiscarded { tau: threshold.tau });
    }
    Ok(DetectionResult {
        row_norms,
        estimates,
        threshold,
        retained,
        discarded,
    })
}

/// `(1 − ε)·(max_clean_norm + Δ) > τ`.
pub fn check_separation(max_clean_norm: f64, delta_gap: f64, epsilon: f64, tau: f64) -> bool {
    (1.0 - epsilon) * (max_clean_norm + delta_gap) > tau
}
