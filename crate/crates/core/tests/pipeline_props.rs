use rowguard::detect::detect_outliers;
use rowguard::{
    apply_sketch, check_separation, generate, generate_sketch, inlier_relative_error, run_pipeline,
    PipelineConfig, SketchSpec, SynthParams,
};

#[test]
fn error_metric_ignores_row_order() {
    let ds = generate(&SynthParams { m: 300, n: 60, k: 4, alpha: 0.2, seed: 12, ..SynthParams::default() }).unwrap();
    let mut cfg = PipelineConfig::default().with_seed(12);
    cfg.rsvd.k = 4;
    let out = run_pipeline(&ds.a, &cfg).unwrap();
    let base = inlier_relative_error(&ds.b, &out.b_tilde, &ds.outlier_mask).unwrap();

    let perm: Vec<usize> = (0..300).map(|i| (i * 7 + 3) % 300).collect();
    let b = ds.b.select_rows(&perm).unwrap();
    let bt = out.b_tilde.select_rows(&perm).unwrap();
    let mask: Vec<bool> = perm.iter().map(|&i| ds.outlier_mask[i]).collect();
    let permuted = inlier_relative_error(&b, &bt, &mask).unwrap();
    assert!((permuted - base).abs() <= 1e-12 * base, "{base} vs {permuted}");
}

/// Whenever the realized threshold leaves the separation margin, every
/// adversarial row is caught. Uses a genuinely projected sketch.
#[test]
fn separated_trials_catch_every_outlier() {
    let eps = 0.3;
    let (mut separated, mut perfect) = (0, 0);
    for seed in 0..100u64 {
        let ds = generate(&SynthParams { m: 400, n: 300, k: 5, alpha: 0.2, seed, ..SynthParams::default() }).unwrap();
        let spec = SketchSpec { epsilon: eps, dim_constant: 1.0, alpha: 0.2, seed, ..SketchSpec::default() };
        let sk = generate_sketch(&spec, 300, 400).unwrap();
        assert!(!sk.bypassed && sk.s < 300);
        let det = detect_outliers(&apply_sketch(&ds.a, &sk).unwrap(), 3.0).unwrap();
        if !check_separation(ds.max_clean_norm, ds.delta_gap, eps, det.threshold.tau) {
            continue;
        }
        separated += 1;
        if ds.outliers().iter().all(|&i| !det.is_retained(i)) {
            perfect += 1;
        }
    }
    assert!(separated > 0);
    assert!(perfect as f64 >= 0.95 * separated as f64, "{perfect}/{separated}");
}
