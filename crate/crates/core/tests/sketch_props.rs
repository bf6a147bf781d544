use proptest::prelude::*;
use rowguard::matrix::{matmul, DenseMatrix};
use rowguard::{
    apply_sketch, generate_sketch, generate_sketch_with_dim, sketch_dimension, RandomStream,
    SketchDistribution, SketchSpec,
};

fn spec(distribution: SketchDistribution, epsilon: f64, seed: u64) -> SketchSpec {
    SketchSpec {
        epsilon,
        delta_prime: 0.05,
        alpha: 0.0,
        distribution,
        seed,
        ..SketchSpec::default()
    }
}

fn sq(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Rows whose squared norm leaves the `(1 ± ε)` band, per repetition.
fn norm_preservation(distribution: SketchDistribution) -> usize {
    let (n, rows, eps) = (100, 200, 0.3);
    (0..100u64)
        .filter(|&rep| {
            let sp = spec(distribution, eps, rep);
            let s = sketch_dimension(&sp, rows).unwrap();
            let psi = generate_sketch_with_dim(&sp, n, s).unwrap().psi;
            let mut st = RandomStream::new(rep, "rows");
            let x = DenseMatrix::from_fn(rows, n, |_, _| st.next_standard_normal());
            let y = matmul(&x, &psi).unwrap();
            let bad = (0..rows)
                .filter(|&i| {
                    let (a, b) = (sq(x.row(i)), sq(y.row(i)));
                    !((1.0 - eps) * a <= b && b <= (1.0 + eps) * a)
                })
                .count();
            bad as f64 / rows as f64 <= 0.05
        })
        .count()
}

#[test]
fn norm_preservation_gaussian() {
    let ok = norm_preservation(SketchDistribution::Gaussian);
    assert!(ok >= 95, "{ok}/100");
}

#[test]
fn norm_preservation_sparse() {
    let ok = norm_preservation(SketchDistribution::SparseRademacher);
    assert!(ok >= 95, "{ok}/100");
}

#[test]
fn formula_width_exceeds_n_here() {
    let sp = spec(SketchDistribution::Gaussian, 0.3, 0);
    let s = sketch_dimension(&sp, 200).unwrap();
    assert_eq!(s, (8.0 / 0.09 * (200.0f64 / 0.05).ln()).ceil() as usize);
    assert!(generate_sketch(&sp, 100, 200).unwrap().bypassed);
}

#[test]
fn unbiased_squared_norm() {
    for distribution in [SketchDistribution::Gaussian, SketchDistribution::SparseRademacher] {
        let n = 40;
        let psi = generate_sketch_with_dim(&spec(distribution, 0.1, 3), n, 10_000).unwrap().psi;
        let mut st = RandomStream::new(5, "unbiased");
        let ratios: Vec<f64> = (0..5)
            .map(|_| {
                let x = DenseMatrix::from_fn(1, n, |_, _| st.next_standard_normal());
                sq(matmul(&x, &psi).unwrap().row(0)) / sq(x.row(0))
            })
            .collect();
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        assert!((mean - 1.0).abs() <= 0.02, "{distribution:?}: {mean}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn scale_equivariance(seed in any::<u64>(), power in -20i32..20, sparse in any::<bool>()) {
        let distribution = if sparse { SketchDistribution::SparseRademacher } else { SketchDistribution::Gaussian };
        let sk = generate_sketch_with_dim(&spec(distribution, 0.3, seed), 30, 12).unwrap();
        let mut st = RandomStream::new(seed, "scale");
        let a = DenseMatrix::from_fn(7, 30, |_, _| st.next_standard_normal());
        let c = 2f64.powi(power);
        let lhs = apply_sketch(&a.scaled(c), &sk).unwrap();
        let rhs = apply_sketch(&a, &sk).unwrap().scaled(c);
        prop_assert_eq!(lhs, rhs);
    }
}
