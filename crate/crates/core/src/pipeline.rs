//! End-to-end robust approximation: sketch, detect, factor, embed.

use crate::detect::{detect_outliers, DetectionResult};
use crate::error::{usage, Result};
use crate::matrix::DenseMatrix;
use crate::rsvd::{randomized_rank_k, reconstruct, RankKApprox, RsvdConfig};
use crate::sketch::{apply_sketch, generate_sketch, SketchSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub sketch: SketchSpec,
    pub threshold_c: f64,
    pub rsvd: RsvdConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            sketch: SketchSpec::default(),
            threshold_c: 3.0,
            rsvd: RsvdConfig::default(),
        }
    }
}

impl PipelineConfig {
    /// Same seed for the projection and the rSVD test matrix; they draw
    /// from different stream labels.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.sketch.seed = seed;
        self.rsvd.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineResult {
    /// `m×n` approximation with zero rows at discarded indices.
    pub b_tilde: DenseMatrix,
    pub detection: DetectionResult,
    pub factors: RankKApprox,
    /// Sketch width actually used.
    pub s: usize,
    pub projection_bypassed: bool,
    pub wall_time_ms: f64,
}

#[cfg(not(target_arch = "wasm32"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

// No monotonic clock on bare wasm; callers measure on the JS side.
#[cfg(target_arch = "wasm32")]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    (f(), 0.0)
}

pub fn run_pipeline(a: &DenseMatrix, cfg: &PipelineConfig) -> Result<PipelineResult> {
    if a.rows() < 2 {
        return usage(format!("pipeline needs at least 2 rows, got {}", a.rows()));
    }
    if !(cfg.threshold_c > 0.0) {
        return usage(format!("threshold constant must be positive, got {}", cfg.threshold_c));
    }
    let (out, ms) = timed(|| run_stages(a, cfg));
    let mut out = out?;
    out.wall_time_ms = ms;
    Ok(out)
}

fn run_stages(a: &DenseMatrix, cfg: &PipelineConfig) -> Result<PipelineResult> {
    let (m, n) = a.shape();
    let sketch = generate_sketch(&cfg.sketch, n, m)?;
    let s = apply_sketch(a, &sketch)?;
    let detection = detect_outliers(&s, cfg.threshold_c)?;
    drop(s);

    let ahat = a.select_rows(&detection.retained)?;
    let factors = randomized_rank_k(&ahat, &cfg.rsvd)?;
    let retained_approx = reconstruct(&factors);

    let mut b_tilde = DenseMatrix::zeros(m, n);
    for (r, &i) in detection.retained.iter().enumerate() {
        b_tilde.row_mut(i).copy_from_slice(retained_approx.row(r));
    }
    Ok(PipelineResult {
        b_tilde,
        detection,
        factors,
        s: sketch.s,
        projection_bypassed: sketch.bypassed,
        wall_time_ms: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{frobenius_norm, matmul};
    use crate::metrics::inlier_relative_error;
    use crate::rng::RandomStream;
    use crate::synth::{generate, SynthParams};

    #[test]
    fn exact_low_rank_passes_through() {
        let mut st = RandomStream::new(1, "pipe");
        let u = DenseMatrix::from_fn(200, 5, |_, _| st.next_standard_normal());
        let v = DenseMatrix::from_fn(5, 60, |_, _| st.next_standard_normal());
        let a = matmul(&u, &v).unwrap();
        let mut cfg = PipelineConfig::default().with_seed(2);
        cfg.rsvd.k = 5;
        // Row norms of a Gaussian product have a chi-like tail; a loose c keeps all of them.
        cfg.threshold_c = 50.0;
        let out = run_pipeline(&a, &cfg).unwrap();
        assert!(out.detection.discarded.is_empty());
        assert!(frobenius_norm(&out.b_tilde.sub(&a)) <= 1e-8 * frobenius_norm(&a));
    }

    #[test]
    fn favorable_synthetic_run() {
        let ds = generate(&SynthParams { alpha: 0.2, seed: 4, ..SynthParams::default() }).unwrap();
        let out = run_pipeline(&ds.a, &PipelineConfig::default().with_seed(4)).unwrap();
        assert!(out.projection_bypassed);
        let err = inlier_relative_error(&ds.b, &out.b_tilde, &ds.outlier_mask).unwrap();
        assert!(err < 0.01, "{err}");
    }

    #[test]
    fn discarded_rows_are_zero_and_norms_agree() {
        let ds = generate(&SynthParams { m: 300, n: 80, k: 4, alpha: 0.2, seed: 6, ..SynthParams::default() }).unwrap();
        let mut cfg = PipelineConfig::default().with_seed(6);
        cfg.rsvd.k = 4;
        let out = run_pipeline(&ds.a, &cfg).unwrap();
        assert!(!out.detection.discarded.is_empty());
        for &i in &out.detection.discarded {
            assert!(out.b_tilde.row(i).iter().all(|&x| x == 0.0));
        }
        let r = reconstruct(&out.factors);
        for (k, &i) in out.detection.retained.iter().enumerate() {
            assert_eq!(out.b_tilde.row(i), r.row(k));
        }
        assert_eq!(frobenius_norm(&out.b_tilde), frobenius_norm(&r));
    }

    #[test]
    fn deterministic_except_timing() {
        let ds = generate(&SynthParams { m: 200, n: 50, k: 3, seed: 8, ..SynthParams::default() }).unwrap();
        let mut cfg = PipelineConfig::default().with_seed(8);
        cfg.rsvd.k = 3;
        let mut a = run_pipeline(&ds.a, &cfg).unwrap();
        let mut b = run_pipeline(&ds.a, &cfg).unwrap();
        a.wall_time_ms = 0.0;
        b.wall_time_ms = 0.0;
        assert_eq!(a, b);
    }

    #[test]
    fn genuine_projection_path() {
        let ds = generate(&SynthParams { m: 400, n: 300, k: 5, alpha: 0.1, seed: 2, ..SynthParams::default() }).unwrap();
        let mut cfg = PipelineConfig::default().with_seed(3);
        cfg.rsvd.k = 5;
        cfg.sketch.dim_constant = 0.1;
        cfg.sketch.epsilon = 0.3;
        let out = run_pipeline(&ds.a, &cfg).unwrap();
        assert!(!out.projection_bypassed);
        assert!(out.s < 300);
        for i in ds.outliers() {
            assert!(out.detection.discarded.contains(&i));
        }
    }

    #[test]
    fn rejects_single_row_and_bad_c() {
        assert!(run_pipeline(&DenseMatrix::zeros(1, 4), &PipelineConfig::default()).is_err());
        let cfg = PipelineConfig { threshold_c: 0.0, ..PipelineConfig::default() };
        assert!(run_pipeline(&DenseMatrix::zeros(4, 4), &cfg).is_err());
    }
}
