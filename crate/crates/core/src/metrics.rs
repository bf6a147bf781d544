//! Evaluation against ground truth: inlier error, subspace angle, and
//! detection precision/recall.

use crate::error::{usage, Result};
use crate::matrix::{householder_qr, largest_principal_angle, matmul, matmul_tn, thin_svd, DenseMatrix};
use crate::rng::RandomStream;
use crate::rsvd::best_rank_k_oracle;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalRecord {
    pub rel_error: f64,
    pub subspace_angle_deg: f64,
    pub precision: f64,
    pub recall: f64,
    pub n_retained: usize,
    pub runtime_ms: f64,
}

fn check_mask(b: &DenseMatrix, mask: &[bool]) -> Result<()> {
    if mask.len() != b.rows() {
        return usage(format!(
            "mask has {} entries for {} rows",
            mask.len(),
            b.rows()
        ));
    }
    Ok(())
}

/// `‖B_clean − B̃_clean‖_F / ‖B_clean‖_F`, where `mask[i]` marks row `i`
/// as an outlier.
pub fn inlier_relative_error(b: &DenseMatrix, b_tilde: &DenseMatrix, mask: &[bool]) -> Result<f64> {
    if b.shape() != b_tilde.shape() {
        return usage(format!(
            "shape mismatch: {:?} vs {:?}",
            b.shape(),
            b_tilde.shape()
        ));
    }
    check_mask(b, mask)?;
    let (mut num, mut den) = (0.0, 0.0);
    for i in (0..b.rows()).filter(|&i| !mask[i]) {
        for (x, y) in b.row(i).iter().zip(b_tilde.row(i)) {
            num += (x - y) * (x - y);
            den += x * x;
        }
    }
    if den == 0.0 {
        return usage("inlier rows of B have zero norm");
    }
    Ok((num / den).sqrt())
}

/// Precision and recall of `discarded` against the true outlier mask.
/// Empty denominators count as perfect.
pub fn precision_recall(mask_true: &[bool], discarded: &[usize]) -> (f64, f64) {
    let hits = discarded
        .iter()
        .filter(|&&i| mask_true.get(i).copied().unwrap_or(false))
        .count();
    let positives = mask_true.iter().filter(|&&b| b).count();
    let precision = if discarded.is_empty() {
        1.0
    } else {
        hits as f64 / discarded.len() as f64
    };
    let recall = if positives == 0 {
        1.0
    } else {
        hits as f64 / positives as f64
    };
    (precision, recall)
}

/// Cutoff below which a matrix counts as exhaustively captured by an
/// exact small SVD.
const EXACT_SVD_MAX_DIM: usize = 64;
const SUBSPACE_OVERSAMPLING: usize = 10;
const SUBSPACE_POWER_STEPS: usize = 2;
const SUBSPACE_SEED: u64 = 0x5EED_0A96_1E00_0001;

/// Orthonormal basis of the top-`k` left singular subspace.
///
/// Small inputs go straight through the exact SVD. Larger ones are first
/// compressed onto a fixed-seed Gaussian range basis of width `k + 10`
/// refined by two power steps; the compression is exact whenever the
/// input has rank at most `k + 10`.
fn top_left_subspace(m: &DenseMatrix, k: usize) -> Result<DenseMatrix> {
    let r = m.rows().min(m.cols());
    if k == 0 || k > r {
        return usage(format!("subspace rank {k} out of range 1..={r}"));
    }
    let ell = k + SUBSPACE_OVERSAMPLING;
    let (basis, sigma) = if r <= EXACT_SVD_MAX_DIM || ell >= r {
        let top = best_rank_k_oracle(m, k)?;
        (top.u, top.sigma)
    } else {
        let mut s = RandomStream::new(SUBSPACE_SEED, "subspace");
        let mut omega = DenseMatrix::zeros(m.cols(), ell);
        for i in 0..m.cols() {
            s.fill_standard_normal(omega.row_mut(i));
        }
        let (mut q, _) = householder_qr(&matmul(m, &omega)?)?;
        for _ in 0..SUBSPACE_POWER_STEPS {
            let (w, _) = householder_qr(&matmul_tn(m, &q)?)?;
            q = householder_qr(&matmul(m, &w)?)?.0;
        }
        let small = thin_svd(&matmul_tn(&q, m)?)?;
        (
            matmul(&q, &small.u.first_columns(k))?,
            small.singular_values[..k].to_vec(),
        )
    };
    if !(sigma[0] > 0.0) || sigma[k - 1] <= 1e-12 * sigma[0] {
        return usage(format!("matrix has rank below {k}"));
    }
    Ok(basis)
}

/// Largest principal angle, in degrees, between the top-`k` column spaces
/// of the inlier-restricted clean and approximated matrices.
pub fn subspace_error(b_clean: &DenseMatrix, b_tilde_clean: &DenseMatrix, k: usize) -> Result<f64> {
    if b_clean.shape() != b_tilde_clean.shape() {
        return usage("subspace error needs matrices of equal shape");
    }
    let u1 = top_left_subspace(b_clean, k)?;
    let u2 = top_left_subspace(b_tilde_clean, k)?;
    largest_principal_angle(&u1, &u2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::frobenius_norm;

    fn gaussian(rows: usize, cols: usize, seed: u64) -> DenseMatrix {
        let mut s = RandomStream::new(seed, "metrics-test");
        DenseMatrix::from_fn(rows, cols, |_, _| s.next_standard_normal())
    }

    fn low_rank(rows: usize, cols: usize, k: usize, seed: u64) -> DenseMatrix {
        matmul(&gaussian(rows, k, seed), &gaussian(k, cols, seed + 1)).unwrap()
    }

    #[test]
    fn relative_error_examples() {
        let b = gaussian(6, 4, 1);
        let mask = [false, true, false, false, true, false];
        assert_eq!(inlier_relative_error(&b, &b, &mask).unwrap(), 0.0);
        assert_eq!(inlier_relative_error(&b, &DenseMatrix::zeros(6, 4), &mask).unwrap(), 1.0);
        let mut garbage = b.clone();
        garbage.row_mut(1).iter_mut().for_each(|x| *x = 1e9);
        garbage.row_mut(4).iter_mut().for_each(|x| *x = -7.0);
        assert_eq!(inlier_relative_error(&b, &garbage, &mask).unwrap(), 0.0);
        assert!(inlier_relative_error(&DenseMatrix::zeros(6, 4), &b, &mask).is_err());
        assert!(inlier_relative_error(&b, &b, &mask[..5]).is_err());
    }

    #[test]
    fn precision_recall_examples() {
        let mask = [true, false, true, false, true, true];
        assert_eq!(precision_recall(&mask, &[0, 2, 4, 5]), (1.0, 1.0));
        assert_eq!(precision_recall(&mask, &[]), (1.0, 0.0));
        let (p, r) = precision_recall(&mask, &[0, 1, 2]);
        assert!((p - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r, 0.5);
        assert_eq!(precision_recall(&[false, false], &[1]), (0.0, 1.0));
        assert_eq!(precision_recall(&[false, false], &[]), (1.0, 1.0));
    }

    #[test]
    fn subspace_examples_small() {
        let b = low_rank(20, 12, 3, 2);
        assert!(subspace_error(&b, &b, 3).unwrap() < 1e-6);

        let left = DenseMatrix::from_fn(8, 2, |i, j| (i == j) as u8 as f64);
        let right = DenseMatrix::from_fn(8, 2, |i, j| (i == j + 4) as u8 as f64);
        let v = gaussian(2, 5, 9);
        let b1 = matmul(&left, &v).unwrap();
        let b2 = matmul(&right, &v).unwrap();
        assert!((subspace_error(&b1, &b2, 2).unwrap() - 90.0).abs() < 1e-9);

        assert!(subspace_error(&b1, &b1, 3).is_err());
    }

    #[test]
    fn subspace_perturbation_is_small() {
        for (rows, cols) in [(30, 20), (300, 150)] {
            let b = low_rank(rows, cols, 5, 4);
            let noise = gaussian(rows, cols, 7).scaled(1e-8);
            let pert = DenseMatrix::from_fn(rows, cols, |i, j| b.get(i, j) + noise.get(i, j));
            let angle = subspace_error(&b, &pert, 5).unwrap();
            assert!(angle < 0.01, "{rows}x{cols}: {angle}");
        }
    }

    #[test]
    fn compressed_route_matches_exact_for_low_rank() {
        let b = low_rank(200, 120, 6, 11);
        let approx = top_left_subspace(&b, 6).unwrap();
        let exact = best_rank_k_oracle(&b, 6).unwrap().u;
        assert!(largest_principal_angle(&approx, &exact).unwrap() < 1e-6);
        let proj = matmul(&approx, &matmul_tn(&approx, &b).unwrap()).unwrap();
        assert!(frobenius_norm(&proj.sub(&b)) < 1e-10 * frobenius_norm(&b));
    }
}
