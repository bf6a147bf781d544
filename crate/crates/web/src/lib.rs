//! Browser bindings for the rowguard demo page.
//!
//! Each export has a plain Rust counterpart returning `rowguard::Result`
//! so it can be tested natively; the `#[wasm_bindgen]` wrappers only map
//! errors to `JsError`.

use rowguard::{
    eta_bound, generate, inlier_relative_error, precision_recall, run_pipeline, subspace_error,
    CrossTermConstant, Error, PipelineConfig, Result, SynthParams, TheoryBoundInputs,
};
use wasm_bindgen::prelude::*;

/// Keeps a single call well under a second in the browser.
const MAX_ENTRIES: usize = 2_000_000;

fn dataset(m: usize, n: usize, k: usize, alpha: f64, scale: f64, seed: u64) -> Result<rowguard::SynthDataset> {
    if m.saturating_mul(n) > MAX_ENTRIES {
        return Err(Error::Usage(format!("m·n must stay below {MAX_ENTRIES}")));
    }
    generate(&SynthParams {
        m,
        n,
        k,
        alpha,
        outlier_scale: scale,
        seed,
        ..SynthParams::default()
    })
}

fn config(k: usize, alpha: f64, epsilon: f64, c: f64, seed: u64) -> PipelineConfig {
    let mut cfg = PipelineConfig::default().with_seed(seed);
    cfg.rsvd.k = k;
    cfg.sketch.alpha = alpha;
    cfg.sketch.epsilon = epsilon;
    cfg.threshold_c = c;
    cfg
}

/// Projected row norms with the threshold and both masks.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Detection {
    norms: Vec<f64>,
    outlier: Vec<u8>,
    discarded: Vec<u8>,
    tau: f64,
    mu_hat: f64,
    sigma_hat: f64,
    estimator: String,
    precision: f64,
    recall: f64,
    s: usize,
    bypassed: bool,
}

#[wasm_bindgen]
impl Detection {
    pub fn norms(&self) -> Vec<f64> {
        self.norms.clone()
    }
    /// 1 for true outliers.
    pub fn outlier(&self) -> Vec<u8> {
        self.outlier.clone()
    }
    /// 1 for rows above the threshold.
    pub fn discarded(&self) -> Vec<u8> {
        self.discarded.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn tau(&self) -> f64 {
        self.tau
    }
    #[wasm_bindgen(getter)]
    pub fn mu_hat(&self) -> f64 {
        self.mu_hat
    }
    #[wasm_bindgen(getter)]
    pub fn sigma_hat(&self) -> f64 {
        self.sigma_hat
    }
    #[wasm_bindgen(getter)]
    pub fn estimator(&self) -> String {
        self.estimator.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn precision(&self) -> f64 {
        self.precision
    }
    #[wasm_bindgen(getter)]
    pub fn recall(&self) -> f64 {
        self.recall
    }
    #[wasm_bindgen(getter)]
    pub fn s(&self) -> usize {
        self.s
    }
    #[wasm_bindgen(getter)]
    pub fn bypassed(&self) -> bool {
        self.bypassed
    }
}

#[allow(clippy::too_many_arguments)]
pub fn detect_core(m: usize, n: usize, k: usize, alpha: f64, scale: f64, epsilon: f64, c: f64, seed: u64) -> Result<Detection> {
    let ds = dataset(m, n, k, alpha, scale, seed)?;
    let cfg = config(k, alpha, epsilon, c, seed);
    let sketch = rowguard::generate_sketch(&cfg.sketch, n, m)?;
    let sk = rowguard::apply_sketch(&ds.a, &sketch)?;
    let det = rowguard::detect_outliers(&sk, c)?;
    let (precision, recall) = precision_recall(&ds.outlier_mask, &det.discarded);
    let mut discarded = vec![0u8; m];
    for &i in &det.discarded {
        discarded[i] = 1;
    }
    Ok(Detection {
        outlier: ds.outlier_mask.iter().map(|&b| b as u8).collect(),
        discarded,
        tau: det.threshold.tau,
        mu_hat: det.estimates.mu_hat,
        sigma_hat: det.estimates.sigma_hat,
        estimator: det.estimates.estimator_used.as_str().to_owned(),
        precision,
        recall,
        s: sketch.s,
        bypassed: sketch.bypassed,
        norms: det.row_norms,
    })
}

/// Sketch and threshold a synthetic dataset. The seed is 32-bit so JS can
/// pass a plain number.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn detect(m: usize, n: usize, k: usize, alpha: f64, scale: f64, epsilon: f64, c: f64, seed: u32) -> std::result::Result<Detection, JsError> {
    detect_core(m, n, k, alpha, scale, epsilon, c, seed.into()).map_err(|e| JsError::new(&e.to_string()))
}

/// Metrics of one full pipeline run against ground truth.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy)]
pub struct RunSummary {
    pub precision: f64,
    pub recall: f64,
    pub rel_error: f64,
    /// NaN when the approximation is rank deficient.
    pub angle_deg: f64,
    pub n_retained: usize,
    pub s: usize,
    pub bypassed: bool,
}

#[allow(clippy::too_many_arguments)]
pub fn run_core(m: usize, n: usize, k: usize, alpha: f64, scale: f64, epsilon: f64, c: f64, seed: u64) -> Result<RunSummary> {
    let ds = dataset(m, n, k, alpha, scale, seed)?;
    let out = run_pipeline(&ds.a, &config(k, alpha, epsilon, c, seed))?;
    let (precision, recall) = precision_recall(&ds.outlier_mask, &out.detection.discarded);
    let inliers = ds.inliers();
    let angle = subspace_error(
        &ds.b.select_rows(&inliers)?,
        &out.b_tilde.select_rows(&inliers)?,
        out.factors.k(),
    )
    .unwrap_or(f64::NAN);
    Ok(RunSummary {
        precision,
        recall,
        rel_error: inlier_relative_error(&ds.b, &out.b_tilde, &ds.outlier_mask)?,
        angle_deg: angle,
        n_retained: out.detection.retained.len(),
        s: out.s,
        bypassed: out.projection_bypassed,
    })
}

/// Generate, filter and factor; report error against the clean signal.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn run(m: usize, n: usize, k: usize, alpha: f64, scale: f64, epsilon: f64, c: f64, seed: u32) -> std::result::Result<RunSummary, JsError> {
    run_core(m, n, k, alpha, scale, epsilon, c, seed.into()).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
#[derive(Debug, Clone, Copy)]
pub struct Bound {
    pub beta: f64,
    pub c: f64,
    pub c1: f64,
    pub c2: f64,
    pub psi: f64,
    pub eta: f64,
}

/// `beta < 0` selects the tail formula `2·exp(−c²/2)`.
#[allow(clippy::too_many_arguments)]
pub fn bound_core(
    epsilon: f64,
    alpha: f64,
    gamma: f64,
    delta: f64,
    c: f64,
    max_norm: f64,
    min_norm: f64,
    beta: f64,
    cross_term_two: bool,
) -> Result<Bound> {
    let r = eta_bound(&TheoryBoundInputs {
        epsilon,
        alpha,
        gamma,
        delta,
        kappa: rowguard::kappa_condition(epsilon),
        c,
        max_clean_norm: max_norm,
        min_clean_norm: min_norm,
        beta_override: (beta >= 0.0).then_some(beta),
        cross_term: if cross_term_two {
            CrossTermConstant::Two
        } else {
            CrossTermConstant::OnePlusEpsilon
        },
    })?;
    Ok(Bound {
        beta: r.beta,
        c: r.c,
        c1: r.c1,
        c2: r.c2,
        psi: r.psi,
        eta: r.eta,
    })
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn bound(
    epsilon: f64,
    alpha: f64,
    gamma: f64,
    delta: f64,
    c: f64,
    max_norm: f64,
    min_norm: f64,
    beta: f64,
    cross_term_two: bool,
) -> std::result::Result<Bound, JsError> {
    bound_core(epsilon, alpha, gamma, delta, c, max_norm, min_norm, beta, cross_term_two)
        .map_err(|e| JsError::new(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection_separates_favorable_data() {
        let d = detect_core(300, 60, 4, 0.2, 10.0, 0.1, 3.0, 1).unwrap();
        assert_eq!(d.norms.len(), 300);
        assert_eq!(d.outlier, d.discarded);
        assert_eq!((d.precision, d.recall), (1.0, 1.0));
        assert!(d.bypassed);
        assert_eq!(d.estimator, "mad");
    }

    #[test]
    fn run_reports_metrics() {
        let r = run_core(300, 60, 4, 0.2, 10.0, 0.1, 3.0, 2).unwrap();
        assert_eq!(r.n_retained, 240);
        assert!(r.rel_error < 0.01, "{}", r.rel_error);
        assert!(r.angle_deg < 1.0);
    }

    #[test]
    fn bound_matches_worked_example() {
        let b = bound_core(0.1, 0.1, 2.0, 1.0, 3.0, 5.0, 5.0, 0.0027, true).unwrap();
        assert_eq!(b.psi, 1.25);
        assert!((b.eta - 0.7632).abs() < 1e-4);
        let tail = bound_core(0.1, 0.1, 2.0, 1.0, 3.0, 5.0, 5.0, -1.0, false).unwrap();
        assert_eq!(tail.beta, rowguard::false_positive_bound(3.0));
        assert!(bound_core(0.1, 0.1, 0.0, 1.0, 3.0, 5.0, 5.0, -1.0, false).is_err());
    }

    #[test]
    fn oversized_requests_are_rejected() {
        assert!(detect_core(5000, 1000, 4, 0.1, 10.0, 0.1, 3.0, 0).is_err());
    }
}
