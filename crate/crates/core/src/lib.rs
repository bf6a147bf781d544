//! Robust randomized low-rank approximation.
//!
//! The pipeline sketches the rows of `A` with a Johnson–Lindenstrauss
//! projection, flags rows whose projected norm exceeds a median/MAD
//! threshold, drops them, and computes a randomized rank-k factorization of
//! what is left. Discarded rows come back as zeros in the output.
//!
//! ```
//! use rowguard::{run_pipeline, PipelineConfig, SynthParams, generate};
//!
//! let ds = generate(&SynthParams { m: 120, n: 40, k: 3, alpha: 0.1, ..SynthParams::default() }).unwrap();
//! let mut cfg = PipelineConfig::default();
//! cfg.rsvd.k = 3;
//! let out = run_pipeline(&ds.a, &cfg).unwrap();
//! assert_eq!(out.b_tilde.rows(), 120);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bounds;
pub mod detect;
pub mod error;
pub mod matrix;
pub mod metrics;
pub mod pipeline;
pub mod rng;
pub mod robust;
pub mod rsvd;
pub mod sketch;
pub mod synth;

#[cfg(feature = "cli")]
pub mod cli;

pub use bounds::{
    eta_bound, false_positive_bound, kappa_condition, CrossTermConstant, TheoryBoundInputs,
    TheoryBoundResult,
};
pub use detect::{check_separation, detect_outliers, DetectionResult};
pub use error::{Error, Result};
pub use matrix::{
    frobenius_norm, householder_qr, largest_principal_angle, matmul, row_norm, thin_svd,
    DenseMatrix, ThinSvd,
};
pub use metrics::{inlier_relative_error, precision_recall, subspace_error, EvalRecord};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineResult};
pub use rng::RandomStream;
pub use robust::{
    compute_threshold, mad_scaled, median, robust_estimates, trimmed_iqr_scale, Estimator,
    RobustEstimates, Threshold,
};
pub use rsvd::{best_rank_k_oracle, randomized_rank_k, reconstruct, RankKApprox, RsvdConfig};
pub use sketch::{
    apply_sketch, generate_sketch, generate_sketch_with_dim, sketch_dimension, SketchDistribution,
    SketchMatrix, SketchSpec,
};
pub use synth::{gamma_of, generate, SynthDataset, SynthParams};
