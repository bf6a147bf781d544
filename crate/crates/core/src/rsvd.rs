//! Randomized range finder and rank-k factorization.

use crate::error::{usage, Result};
use crate::matrix::{householder_qr, matmul, matmul_tn, scale_columns, thin_svd, DenseMatrix};
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsvdConfig {
    pub k: usize,
    /// Oversampling `p`; the test matrix has `k + p` columns.
    pub p: usize,
    pub seed: u64,
}

impl Default for RsvdConfig {
    fn default() -> Self {
        Self { k: 10, p: 10, seed: 0 }
    }
}

/// `U·diag(σ)·Vᵀ` with `k` components.
#[derive(Debug, Clone, PartialEq)]
pub struct RankKApprox {
    pub u: DenseMatrix,
    pub sigma: Vec<f64>,
    pub v: DenseMatrix,
    /// Set when `k` had to be lowered to fit the matrix dimensions.
    pub k_clamped: bool,
}

impl RankKApprox {
    pub fn k(&self) -> usize {
        self.sigma.len()
    }
}

/// Gaussian range finder: `Y = ÂΩ`, `Q = qr(Y)`, SVD of `QᵀÂ`, lifted
/// back through `Q`. No power iterations.
pub fn randomized_rank_k(ahat: &DenseMatrix, cfg: &RsvdConfig) -> Result<RankKApprox> {
    if cfg.k == 0 {
        return usage("target rank k must be at least 1");
    }
    let (m, n) = ahat.shape();
    let ell = (cfg.k + cfg.p).min(m).min(n);
    let k = cfg.k.min(ell);

    let mut stream = RandomStream::new(cfg.seed, "omega");
    let mut omega = DenseMatrix::zeros(n, ell);
    for i in 0..n {
        stream.fill_standard_normal(omega.row_mut(i));
    }
    let y = matmul(ahat, &omega)?;
    let (q, _) = householder_qr(&y)?;
    let b = matmul_tn(&q, ahat)?;
    let svd = thin_svd(&b)?;
    let u = matmul(&q, &svd.u.first_columns(k))?;
    Ok(RankKApprox {
        u,
        sigma: svd.singular_values[..k].to_vec(),
        v: svd.v.first_columns(k),
        k_clamped: k < cfg.k,
    })
}

/// `U·diag(σ)·Vᵀ`.
pub fn reconstruct(approx: &RankKApprox) -> DenseMatrix {
    let us = scale_columns(&approx.u, &approx.sigma);
    let vt = approx.v.transpose();
    matmul(&us, &vt).expect("factor shapes are consistent")
}

/// Eckart–Young optimum: the leading `k` triplets of the exact thin SVD.
pub fn best_rank_k_oracle(a: &DenseMatrix, k: usize) -> Result<RankKApprox> {
    let r = a.rows().min(a.cols());
    if k == 0 || k > r {
        return usage(format!("rank {k} out of range 1..={r}"));
    }
    let svd = thin_svd(a)?;
    Ok(RankKApprox {
        u: svd.u.first_columns(k),
        sigma: svd.singular_values[..k].to_vec(),
        v: svd.v.first_columns(k),
        k_clamped: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::frobenius_norm;

    fn gaussian(rows: usize, cols: usize, seed: u64) -> DenseMatrix {
        let mut s = RandomStream::new(seed, "rsvd-test");
        DenseMatrix::from_fn(rows, cols, |_, _| s.next_standard_normal())
    }

    fn ortho_err(q: &DenseMatrix) -> f64 {
        matmul_tn(q, q).unwrap().sub(&DenseMatrix::identity(q.cols())).max_abs()
    }

    #[test]
    fn exact_rank_is_recovered() {
        let a = matmul(&gaussian(60, 4, 1), &gaussian(4, 35, 2)).unwrap();
        let cfg = RsvdConfig { k: 4, p: 10, seed: 3 };
        let approx = randomized_rank_k(&a, &cfg).unwrap();
        let err = frobenius_norm(&reconstruct(&approx).sub(&a));
        assert!(err <= 1e-8 * frobenius_norm(&a), "{err}");
        assert!(ortho_err(&approx.u) <= 1e-9);
        assert!(ortho_err(&approx.v) <= 1e-9);
        assert!(!approx.k_clamped);
    }

    #[test]
    fn full_rank_matches_thin_svd() {
        let a = gaussian(12, 7, 4);
        let approx = randomized_rank_k(&a, &RsvdConfig { k: 7, p: 10, seed: 1 }).unwrap();
        let exact = best_rank_k_oracle(&a, 7).unwrap();
        for (x, y) in approx.sigma.iter().zip(&exact.sigma) {
            assert!((x - y).abs() <= 1e-9 * y);
        }
        let diff = frobenius_norm(&reconstruct(&approx).sub(&reconstruct(&exact)));
        assert!(diff <= 1e-9 * frobenius_norm(&a));
    }

    #[test]
    fn k_is_clamped_to_matrix_size() {
        let a = gaussian(5, 8, 9);
        let approx = randomized_rank_k(&a, &RsvdConfig { k: 9, p: 10, seed: 1 }).unwrap();
        assert!(approx.k_clamped);
        assert_eq!(approx.k(), 5);
        assert!(randomized_rank_k(&a, &RsvdConfig { k: 0, p: 10, seed: 1 }).is_err());
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let approx = randomized_rank_k(&DenseMatrix::zeros(20, 10), &RsvdConfig { k: 3, p: 2, seed: 0 }).unwrap();
        assert!(approx.sigma.iter().all(|&s| s == 0.0));
        assert!(reconstruct(&approx).as_slice().iter().all(|&x| x == 0.0));
        assert!(ortho_err(&approx.u) <= 1e-9);
    }

    #[test]
    fn deterministic_factors() {
        let a = gaussian(30, 20, 5);
        let cfg = RsvdConfig { k: 3, p: 5, seed: 8 };
        assert_eq!(randomized_rank_k(&a, &cfg).unwrap(), randomized_rank_k(&a, &cfg).unwrap());
    }

    #[test]
    fn reconstruct_outer_product() {
        let e1 = DenseMatrix::from_rows(&[vec![1.0], vec![0.0]]).unwrap();
        let approx = RankKApprox { u: e1.clone(), sigma: vec![2.0], v: e1, k_clamped: false };
        let r = reconstruct(&approx);
        assert_eq!(r.as_slice(), &[2.0, 0.0, 0.0, 0.0]);
        let zero = RankKApprox { sigma: vec![0.0], ..approx };
        assert!(reconstruct(&zero).as_slice().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn oracle_examples() {
        let d = DenseMatrix::diag(&[3.0, 2.0, 1.0]);
        let b = best_rank_k_oracle(&d, 2).unwrap();
        assert_eq!(b.sigma, vec![3.0, 2.0]);
        assert!((frobenius_norm(&d.sub(&reconstruct(&b))) - 1.0).abs() < 1e-15);

        let a = gaussian(8, 6, 12);
        let full = best_rank_k_oracle(&a, 6).unwrap();
        assert!(frobenius_norm(&a.sub(&reconstruct(&full))) <= 1e-12 * frobenius_norm(&a));

        let s = thin_svd(&a).unwrap().singular_values;
        let tail = (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]).sqrt();
        let err = frobenius_norm(&a.sub(&reconstruct(&best_rank_k_oracle(&a, 3).unwrap())));
        assert!((err - tail).abs() <= 1e-10 * tail);

        assert!(best_rank_k_oracle(&a, 0).is_err());
        assert!(best_rank_k_oracle(&a, 7).is_err());
    }
}
