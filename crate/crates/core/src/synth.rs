//! Synthetic low-rank data with bounded inlier noise and norm-separated
//! adversarial rows.

use crate::error::{usage, Result};
use crate::matrix::{matmul, norm2, DenseMatrix};
use crate::rng::RandomStream;

#[derive(Debug, Clone, PartialEq)]
pub struct SynthParams {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Row-norm bound on inlier noise.
    pub delta: f64,
    pub alpha: f64,
    pub outlier_scale: f64,
    pub seed: u64,
}

impl Default for SynthParams {
    fn default() -> Self {
        Self {
            m: 1000,
            n: 500,
            k: 10,
            delta: 0.1,
            alpha: 0.1,
            outlier_scale: 10.0,
            seed: 0,
        }
    }
}

impl SynthParams {
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return usage("synthetic matrix needs m, n >= 1");
        }
        if self.k == 0 || self.k > self.m.min(self.n) {
            return usage(format!("k = {} must lie in 1..=min(m, n)", self.k));
        }
        if !(0.0..0.5).contains(&self.alpha) {
            return usage(format!("alpha must lie in [0, 0.5), got {}", self.alpha));
        }
        if !(self.delta >= 0.0 && self.delta.is_finite()) {
            return usage(format!("delta must be nonnegative, got {}", self.delta));
        }
        if !(self.outlier_scale > 0.0 && self.outlier_scale.is_finite()) {
            return usage(format!(
                "outlier scale must be positive, got {}",
                self.outlier_scale
            ));
        }
        Ok(())
    }

    /// `⌊α·m⌋`, with a small guard so products like `0.57·100` land on 57.
    pub fn outlier_count(&self) -> usize {
        (self.alpha * self.m as f64 + 1e-9).floor() as usize
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthDataset {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub outlier_mask: Vec<bool>,
    /// Realized gap `Δ = outlier_scale · max_clean_norm`.
    pub delta_gap: f64,
    pub max_clean_norm: f64,
    pub min_clean_norm: f64,
    pub params: SynthParams,
}

impl SynthDataset {
    pub fn inliers(&self) -> Vec<usize> {
        (0..self.a.rows()).filter(|&i| !self.outlier_mask[i]).collect()
    }

    pub fn outliers(&self) -> Vec<usize> {
        (0..self.a.rows()).filter(|&i| self.outlier_mask[i]).collect()
    }

    /// Realized `min‖B_i‖ / δ` over inliers; infinite when `δ = 0`.
    pub fn signal_to_noise_floor(&self) -> f64 {
        self.min_clean_norm / self.params.delta
    }
}

fn unit_direction(stream: &mut RandomStream, out: &mut [f64]) {
    loop {
        stream.fill_standard_normal(out);
        let nrm = norm2(out);
        if nrm > 0.0 {
            out.iter_mut().for_each(|x| *x /= nrm);
            return;
        }
    }
}

pub fn generate(params: &SynthParams) -> Result<SynthDataset> {
    params.validate()?;
    let SynthParams { m, n, k, .. } = *params;
    let seed = params.seed;

    let mut su = RandomStream::new(seed, "synth-U");
    let mut sv = RandomStream::new(seed, "synth-V");
    let u = DenseMatrix::from_fn(m, k, |_, _| su.next_standard_normal());
    let v = DenseMatrix::from_fn(k, n, |_, _| sv.next_standard_normal());
    let b = matmul(&u, &v)?;

    // Fisher–Yates; the first ⌊αm⌋ entries of the permutation are outliers.
    let mut perm: Vec<usize> = (0..m).collect();
    let mut sm = RandomStream::new(seed, "synth-mask");
    for i in (1..m).rev() {
        let j = sm.next_below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    let mut outlier_mask = vec![false; m];
    for &i in &perm[..params.outlier_count()] {
        outlier_mask[i] = true;
    }

    let clean_norms: Vec<f64> = (0..m)
        .filter(|&i| !outlier_mask[i])
        .map(|i| norm2(b.row(i)))
        .collect();
    let max_clean_norm = clean_norms.iter().copied().fold(0.0, f64::max);
    let min_clean_norm = clean_norms.iter().copied().fold(f64::INFINITY, f64::min);
    let delta_gap = params.outlier_scale * max_clean_norm;
    let adversarial_norm = max_clean_norm + delta_gap;

    let mut a = b.clone();
    let mut noise_stream = RandomStream::new(seed, "synth-noise");
    let mut adv_stream = RandomStream::new(seed, "synth-adv");
    let mut dir = vec![0.0; n];
    for i in 0..m {
        if outlier_mask[i] {
            unit_direction(&mut adv_stream, &mut dir);
            for (x, d) in a.row_mut(i).iter_mut().zip(&dir) {
                *x = d * adversarial_norm;
            }
        } else if params.delta > 0.0 {
            unit_direction(&mut noise_stream, &mut dir);
            let mut magnitude = noise_stream.next_uniform(0.0, params.delta)?;
            // Rounding in B + N can push ‖A_i − B_i‖ one ulp past δ; shrink until it cannot.
            loop {
                let brow = b.row(i);
                let arow = a.row_mut(i);
                for ((x, bv), d) in arow.iter_mut().zip(brow).zip(&dir) {
                    *x = bv + d * magnitude;
                }
                let realized: f64 = norm2(
                    &arow.iter().zip(brow).map(|(x, y)| x - y).collect::<Vec<_>>(),
                );
                if realized <= params.delta {
                    break;
                }
                magnitude *= 1.0 - 1e-12;
            }
        }
    }

    Ok(SynthDataset {
        a,
        b,
        outlier_mask,
        delta_gap,
        max_clean_norm,
        min_clean_norm,
        params: params.clone(),
    })
}

/// Normalized gap `Δ / max‖B_i‖`.
pub fn gamma_of(ds: &SynthDataset) -> Result<f64> {
    if !(ds.max_clean_norm > 0.0) {
        return usage("gamma undefined for a zero clean-row norm");
    }
    Ok(ds.delta_gap / ds.max_clean_norm)
}
