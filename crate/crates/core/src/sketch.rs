//! Johnson–Lindenstrauss projections `Ψ ∈ ℝ^{n×s}` and the sketch `S = AΨ`.

use crate::error::{usage, Result};
use crate::matrix::{matmul, DenseMatrix};
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SketchDistribution {
    /// i.i.d. `N(0, 1/s)` entries.
    Gaussian,
    /// `±1/sqrt(q·s)` with probability `q/2` each, zero otherwise.
    SparseRademacher,
}

impl std::str::FromStr for SketchDistribution {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(Self::Gaussian),
            "sparse" => Ok(Self::SparseRademacher),
            other => usage(format!("unknown sketch distribution '{other}' (gaussian|sparse)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SketchSpec {
    /// JL distortion ε, in (0, 1).
    pub epsilon: f64,
    /// Failure probability δ', in (0, 1).
    pub delta_prime: f64,
    /// Bound on the adversarial row fraction, in [0, 0.5).
    pub alpha: f64,
    pub distribution: SketchDistribution,
    /// Leading constant of the dimension formula.
    pub dim_constant: f64,
    /// Nonzero probability `q` of the sparse variant.
    pub sparse_density: f64,
    pub seed: u64,
}

impl Default for SketchSpec {
    fn default() -> Self {
        Self {
            epsilon: 0.1,
            delta_prime: 0.05,
            alpha: 0.1,
            distribution: SketchDistribution::Gaussian,
            dim_constant: 8.0,
            sparse_density: 1.0 / 3.0,
            seed: 0,
        }
    }
}

impl SketchSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return usage(format!("epsilon must lie in (0, 1), got {}", self.epsilon));
        }
        if !(self.delta_prime > 0.0 && self.delta_prime < 1.0) {
            return usage(format!("delta' must lie in (0, 1), got {}", self.delta_prime));
        }
        if !(self.alpha >= 0.0 && self.alpha < 0.5) {
            return usage(format!("alpha must lie in [0, 0.5), got {}", self.alpha));
        }
        if !(self.dim_constant > 0.0 && self.dim_constant.is_finite()) {
            return usage(format!("dim constant must be positive, got {}", self.dim_constant));
        }
        if !(self.sparse_density > 0.0 && self.sparse_density <= 1.0) {
            return usage(format!(
                "sparse density must lie in (0, 1], got {}",
                self.sparse_density
            ));
        }
        Ok(())
    }
}

/// A realized projection. When the formula asks for at least `n` columns
/// the projection is skipped: `psi` is the `n×n` identity and `bypassed` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct SketchMatrix {
    pub psi: DenseMatrix,
    pub spec: SketchSpec,
    pub s: usize,
    /// Dimension requested by the formula, before capping at `n`.
    pub requested_s: usize,
    pub bypassed: bool,
}

/// `⌈dim_constant · ε⁻² · ln((1−α)·m / δ')⌉`.
pub fn sketch_dimension(spec: &SketchSpec, m: usize) -> Result<usize> {
    spec.validate()?;
    if m == 0 {
        return usage("sketch dimension needs m >= 1");
    }
    let arg = (1.0 - spec.alpha) * m as f64 / spec.delta_prime;
    if arg <= 1.0 {
        return usage(format!(
            "log argument (1-alpha)m/delta' = {arg} must exceed 1"
        ));
    }
    let s = (spec.dim_constant / (spec.epsilon * spec.epsilon) * arg.ln()).ceil();
    if s > usize::MAX as f64 / 2.0 {
        return usage("sketch dimension overflows");
    }
    Ok((s as usize).max(1))
}

pub fn generate_sketch(spec: &SketchSpec, n: usize, m: usize) -> Result<SketchMatrix> {
    if n == 0 {
        return usage("sketch needs n >= 1");
    }
    let requested = sketch_dimension(spec, m)?;
    if requested >= n {
        return Ok(SketchMatrix {
            psi: DenseMatrix::identity(n),
            spec: spec.clone(),
            s: n,
            requested_s: requested,
            bypassed: true,
        });
    }
    let mut sk = generate_sketch_with_dim(spec, n, requested)?;
    sk.requested_s = requested;
    Ok(sk)
}

/// Draws an `n×s` projection of an explicit width, never bypassing.
/// Entries are filled row-major from the stream `(seed, "psi")`.
pub fn generate_sketch_with_dim(spec: &SketchSpec, n: usize, s: usize) -> Result<SketchMatrix> {
    spec.validate()?;
    if n == 0 || s == 0 {
        return usage(format!("sketch shape {n}x{s} has an empty dimension"));
    }
    let mut stream = RandomStream::new(spec.seed, "psi");
    let mut data = vec![0.0; n * s];
    match spec.distribution {
        SketchDistribution::Gaussian => {
            let scale = 1.0 / (s as f64).sqrt();
            for x in &mut data {
                *x = stream.next_standard_normal() * scale;
            }
        }
        SketchDistribution::SparseRademacher => {
            let q = spec.sparse_density;
            let value = 1.0 / (q * s as f64).sqrt();
            for x in &mut data {
                let u = stream.next_f64();
                *x = if u < 0.5 * q {
                    value
                } else if u < q {
                    -value
                } else {
                    0.0
                };
            }
        }
    }
    Ok(SketchMatrix {
        psi: DenseMatrix::from_vec(n, s, data)?,
        spec: spec.clone(),
        s,
        requested_s: s,
        bypassed: false,
    })
}

/// `S = AΨ`. A bypassed sketch returns `A` unchanged, which equals the
/// product with the identity bit for bit.
pub fn apply_sketch(a: &DenseMatrix, sketch: &SketchMatrix) -> Result<DenseMatrix> {
    if a.cols() != sketch.psi.rows() {
        return usage(format!(
            "sketch expects {} columns, matrix has {}",
            sketch.psi.rows(),
            a.cols()
        ));
    }
    if sketch.bypassed {
        return Ok(a.clone());
    }
    matmul(a, &sketch.psi)
}
