//! Dense row-major matrices and the deterministic kernels built on them:
//! products, Householder QR, one-sided Jacobi SVD and principal angles.
//!
//! Every reduction runs in ascending index order, so results are
//! bit-for-bit reproducible for identical inputs.

use crate::error::{usage, Result};

/// Row-major `f64` matrix with at least one row and one column.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Wraps a row-major buffer. Fails on empty shapes, a length mismatch,
    /// or non-finite entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return usage(format!("matrix shape {rows}x{cols} has an empty dimension"));
        }
        if data.len() != rows * cols {
            return usage(format!(
                "buffer of length {} does not match shape {rows}x{cols}",
                data.len()
            ));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return usage(format!(
                "non-finite entry at ({}, {})",
                pos / cols,
                pos % cols
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != cols) {
            return usage(format!("row {i} has {} entries, expected {cols}", rows[i].len()));
        }
        Self::from_vec(rows.len(), cols, rows.concat())
    }

    /// # Panics
    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Copies the listed rows, in the given order, into a new matrix.
    pub fn select_rows(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return usage("cannot select an empty set of rows");
        }
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            if i >= self.rows {
                return usage(format!("row index {i} out of range for {} rows", self.rows));
            }
            data.extend_from_slice(self.row(i));
        }
        Ok(Self {
            rows: indices.len(),
            cols: self.cols,
            data,
        })
    }

    /// Leading `k` columns.
    pub fn first_columns(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.cols);
        Self::from_fn(self.rows, k, |i, j| self.get(i, j))
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Entry-wise difference. Panics on shape mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

/// Square root of the sum of squared entries, accumulated in row-major order.
pub fn frobenius_norm(m: &DenseMatrix) -> f64 {
    let mut acc = 0.0;
    for &x in &m.data {
        acc += x * x;
    }
    acc.sqrt()
}

pub fn row_norm(m: &DenseMatrix, i: usize) -> Result<f64> {
    if i >= m.rows {
        return usage(format!("row index {i} out of range for {} rows", m.rows));
    }
    Ok(norm2(m.row(i)))
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

#[inline]
pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Matrix product. Each output entry sums over the inner index in ascending
/// order starting from `0.0`, identical to the textbook triple loop.
pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.cols != b.rows {
        return usage(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        ));
    }
    let (m, inner, n) = (a.rows, a.cols, b.cols);
    let mut out = DenseMatrix::zeros(m, n);
    for i in 0..m {
        let arow = a.row(i);
        let orow = &mut out.data[i * n..(i + 1) * n];
        // i-p-j order: out[i][j] still accumulates p = 0, 1, ... in sequence.
        for p in 0..inner {
            let aip = arow[p];
            let brow = &b.data[p * n..(p + 1) * n];
            for (o, &bv) in orow.iter_mut().zip(brow) {
                *o += aip * bv;
            }
        }
    }
    Ok(out)
}

/// `Aᵀ·B` without materializing the transpose.
pub(crate) fn matmul_tn(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.rows != b.rows {
        return usage(format!(
            "cannot multiply transpose of {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        ));
    }
    let (inner, m, n) = (a.rows, a.cols, b.cols);
    let mut out = DenseMatrix::zeros(m, n);
    for p in 0..inner {
        let arow = a.row(p);
        let brow = b.row(p);
        for i in 0..m {
            let api = arow[i];
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (o, &bv) in orow.iter_mut().zip(brow) {
                *o += api * bv;
            }
        }
    }
    Ok(out)
}

/// Thin Householder QR of a tall matrix: `Q` is `rows×cols` with
/// orthonormal columns and `R` is `cols×cols` upper triangular with a
/// nonnegative diagonal.
pub fn householder_qr(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let (rows, cols) = m.shape();
    if rows < cols {
        return usage(format!("QR needs rows >= cols, got {rows}x{cols}"));
    }
    let mut a = m.clone();
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(cols);
    let mut w = vec![0.0; cols];

    for j in 0..cols {
        let mut v: Vec<f64> = (j..rows).map(|i| a.get(i, j)).collect();
        let norm = norm2(&v);
        if norm == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }
        let alpha = if v[0] >= 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vnorm = norm2(&v);
        if vnorm == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }
        for x in &mut v {
            *x /= vnorm;
        }
        apply_reflector(&mut a, &v, j, j, &mut w);
        // Clean the annihilated part so R is exactly triangular.
        a.set(j, j, alpha);
        for i in j + 1..rows {
            a.set(i, j, 0.0);
        }
        reflectors.push(v);
    }

    let mut r = DenseMatrix::from_fn(cols, cols, |i, j| if j >= i { a.get(i, j) } else { 0.0 });
    let mut q = DenseMatrix::zeros(rows, cols);
    for i in 0..cols {
        q.set(i, i, 1.0);
    }
    for j in (0..cols).rev() {
        if !reflectors[j].is_empty() {
            apply_reflector(&mut q, &reflectors[j], j, j, &mut w);
        }
    }

    for j in 0..cols {
        if r.get(j, j) < 0.0 {
            for x in r.row_mut(j) {
                *x = -*x;
            }
            for i in 0..rows {
                let v = q.get(i, j);
                q.set(i, j, -v);
            }
        }
    }
    Ok((q, r))
}

/// Applies `I − 2vvᵀ` (with `v` living on rows `row0..`) to columns
/// `col0..` of `a`.
fn apply_reflector(a: &mut DenseMatrix, v: &[f64], row0: usize, col0: usize, w: &mut [f64]) {
    let cols = a.cols;
    let w = &mut w[..cols - col0];
    w.iter_mut().for_each(|x| *x = 0.0);
    for (k, &vk) in v.iter().enumerate() {
        if vk == 0.0 {
            continue;
        }
        let row = &a.row(row0 + k)[col0..];
        for (wx, &ax) in w.iter_mut().zip(row) {
            *wx += vk * ax;
        }
    }
    for (k, &vk) in v.iter().enumerate() {
        if vk == 0.0 {
            continue;
        }
        let f = 2.0 * vk;
        let row = &mut a.row_mut(row0 + k)[col0..];
        for (ax, &wx) in row.iter_mut().zip(w.iter()) {
            *ax -= f * wx;
        }
    }
}

/// Thin singular value decomposition `M = U·diag(σ)·Vᵀ` with
/// `r = min(rows, cols)` triplets.
#[derive(Debug, Clone, PartialEq)]
pub struct ThinSvd {
    pub u: DenseMatrix,
    pub singular_values: Vec<f64>,
    pub v: DenseMatrix,
}

impl ThinSvd {
    pub fn rank_cutoff(&self) -> usize {
        self.singular_values.len()
    }

    /// `U·diag(σ)·Vᵀ`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let us = scale_columns(&self.u, &self.singular_values);
        matmul(&us, &self.v.transpose()).expect("conformant SVD factors")
    }
}

pub(crate) fn scale_columns(m: &DenseMatrix, s: &[f64]) -> DenseMatrix {
    let mut out = m.clone();
    for i in 0..out.rows {
        for (x, &sj) in out.row_mut(i).iter_mut().zip(s) {
            *x *= sj;
        }
    }
    out
}

const JACOBI_MAX_SWEEPS: usize = 80;

/// Thin SVD via Householder QR preconditioning followed by one-sided
/// (Hestenes) Jacobi on the triangular factor.
///
/// Sign convention: in each right singular vector the entry of largest
/// magnitude (first one on ties) is nonnegative.
pub fn thin_svd(m: &DenseMatrix) -> Result<ThinSvd> {
    if m.data.iter().any(|x| !x.is_finite()) {
        return usage("SVD input has non-finite entries");
    }
    if m.rows < m.cols {
        let t = thin_svd(&m.transpose())?;
        let mut svd = ThinSvd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        };
        fix_signs(&mut svd);
        return Ok(svd);
    }
    let (q, r) = if m.rows > m.cols {
        let (q, r) = householder_qr(m)?;
        (Some(q), r)
    } else {
        (None, m.clone())
    };
    let mut svd = jacobi_square_or_tall(&r, frobenius_norm(m));
    if let Some(q) = q {
        svd.u = matmul(&q, &svd.u)?;
    }
    fix_signs(&mut svd);
    Ok(svd)
}

/// One-sided Jacobi for `rows >= cols`. Columns are stored as rows of a
/// work matrix so the inner loops are contiguous.
fn jacobi_square_or_tall(a: &DenseMatrix, fro: f64) -> ThinSvd {
    let (rows, n) = a.shape();
    let mut w = a.transpose(); // n × rows, row j = column j of `a`
    let mut vt = DenseMatrix::identity(n); // row j = column j of V
    let negligible = (f64::EPSILON * fro).powi(2);
    let tol = f64::EPSILON * (rows as f64).sqrt();

    let mut norms: Vec<f64> = (0..n).map(|j| dot(w.row(j), w.row(j))).collect();
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = norms[p];
                let beta = norms[q];
                if alpha <= negligible || beta <= negligible {
                    continue;
                }
                let gamma = dot(w.row(p), w.row(q));
                if gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_rows(&mut w, p, q, c, s);
                rotate_rows(&mut vt, p, q, c, s);
                norms[p] = dot(w.row(p), w.row(p));
                norms[q] = dot(w.row(q), w.row(q));
            }
        }
        if !rotated {
            break;
        }
    }

    let sigma: Vec<f64> = (0..n).map(|j| norm2(w.row(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| sigma[y].total_cmp(&sigma[x]).then(x.cmp(&y)));

    let floor = f64::EPSILON * fro;
    let mut u_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut singular_values = Vec::with_capacity(n);
    let mut v = DenseMatrix::zeros(n, n);
    let mut pending = Vec::new();
    for (dst, &src) in order.iter().enumerate() {
        let s = sigma[src];
        for i in 0..n {
            v.set(i, dst, vt.get(src, i));
        }
        if s > floor {
            u_cols.push(w.row(src).iter().map(|x| x / s).collect());
            singular_values.push(s);
        } else {
            u_cols.push(Vec::new());
            singular_values.push(0.0);
            pending.push(dst);
        }
    }
    complete_basis(&mut u_cols, &pending, rows);

    let u = DenseMatrix::from_fn(rows, n, |i, j| u_cols[j][i]);
    ThinSvd {
        u,
        singular_values,
        v,
    }
}

fn rotate_rows(m: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let cols = m.cols;
    let (head, tail) = m.data.split_at_mut(q * cols);
    let rp = &mut head[p * cols..(p + 1) * cols];
    let rq = &mut tail[..cols];
    for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
}

/// Fills the empty slots in `cols` with unit vectors orthogonal to every
/// other column, trying coordinate axes in order.
fn complete_basis(cols: &mut [Vec<f64>], pending: &[usize], dim: usize) {
    let mut axis = 0;
    for &slot in pending {
        loop {
            assert!(axis < dim, "ran out of axes while completing a basis");
            let mut cand = vec![0.0; dim];
            cand[axis] = 1.0;
            axis += 1;
            for _ in 0..2 {
                for c in cols.iter().filter(|c| !c.is_empty()) {
                    let d = dot(&cand, c);
                    for (x, y) in cand.iter_mut().zip(c) {
                        *x -= d * y;
                    }
                }
            }
            let nrm = norm2(&cand);
            if nrm > 0.5 {
                cand.iter_mut().for_each(|x| *x /= nrm);
                cols[slot] = cand;
                break;
            }
        }
    }
}

fn fix_signs(svd: &mut ThinSvd) {
    let r = svd.singular_values.len();
    for j in 0..r {
        let mut best = 0;
        let mut best_abs = -1.0;
        for i in 0..svd.v.rows {
            let a = svd.v.get(i, j).abs();
            if a > best_abs {
                best_abs = a;
                best = i;
            }
        }
        if svd.v.get(best, j) < 0.0 {
            for i in 0..svd.v.rows {
                let x = svd.v.get(i, j);
                svd.v.set(i, j, -x);
            }
            for i in 0..svd.u.rows {
                let x = svd.u.get(i, j);
                svd.u.set(i, j, -x);
            }
        }
    }
}

/// Orthonormal basis of the column space: QR first, then the numerically
/// significant left singular directions of `R`.
fn orthonormal_basis(m: &DenseMatrix) -> Result<DenseMatrix> {
    let (q, r) = householder_qr(m)?;
    let svd = thin_svd(&r)?;
    let top = svd.singular_values[0];
    let rank = svd
        .singular_values
        .iter()
        .take_while(|&&s| top > 0.0 && s > 1e-12 * top)
        .count();
    if rank == 0 {
        return usage("principal angle of a zero-rank subspace is undefined");
    }
    matmul(&q, &svd.u.first_columns(rank))
}

/// Largest principal angle, in degrees, between the column spans of `u1`
/// and `u2`.
pub fn largest_principal_angle(u1: &DenseMatrix, u2: &DenseMatrix) -> Result<f64> {
    if u1.rows != u2.rows {
        return usage(format!(
            "subspaces live in different ambient dimensions ({} vs {})",
            u1.rows, u2.rows
        ));
    }
    let q1 = orthonormal_basis(u1)?;
    let q2 = orthonormal_basis(u2)?;
    // Project the lower-dimensional basis onto the span of the other one.
    let (big, small) = if q1.cols >= q2.cols { (&q1, &q2) } else { (&q2, &q1) };
    let cross = matmul_tn(big, small)?;
    let cosines = thin_svd(&cross)?.singular_values;
    let cos_min = cosines.last().copied().unwrap_or(0.0).clamp(0.0, 1.0);

    let theta = if cos_min > std::f64::consts::FRAC_1_SQRT_2 {
        // Small angles: arcsin of the residual norm is well conditioned.
        let residual = small.sub(&matmul(big, &cross)?);
        let sin_max = thin_svd(&residual)?.singular_values[0].clamp(0.0, 1.0);
        sin_max.asin()
    } else {
        cos_min.acos()
    };
    Ok(theta.to_degrees().clamp(0.0, 90.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomStream;

    fn random(rows: usize, cols: usize, seed: u64) -> DenseMatrix {
        let mut s = RandomStream::new(seed, "test");
        DenseMatrix::from_fn(rows, cols, |_, _| s.next_standard_normal())
    }

    fn triple_loop(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        DenseMatrix::from_fn(a.rows(), b.cols(), |i, j| {
            let mut s = 0.0;
            for p in 0..a.cols() {
                s += a.get(i, p) * b.get(p, j);
            }
            s
        })
    }

    /// Cyclic Jacobi eigenvalue solver for symmetric matrices.
    fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
        let n = a.len();
        for _ in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i][j] * a[i][j])
                .sum();
            if off < 1e-30 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        ev.sort_by(|x, y| y.total_cmp(x));
        ev
    }

    fn gram_identity_error(q: &DenseMatrix) -> f64 {
        let g = matmul_tn(q, q).unwrap();
        g.sub(&DenseMatrix::identity(q.cols())).max_abs()
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_norm(&DenseMatrix::zeros(2, 2)), 0.0);
        assert!((frobenius_norm(&DenseMatrix::identity(3)) - 3f64.sqrt()).abs() < 1e-15);
        let m = random(4, 5, 1);
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..5 {
                acc += m.get(i, j) * m.get(i, j);
            }
        }
        assert_eq!(frobenius_norm(&m).to_bits(), acc.sqrt().to_bits());
    }

    #[test]
    fn row_norm_examples() {
        let m = DenseMatrix::from_rows(&[vec![3.0, 4.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(row_norm(&m, 0).unwrap(), 5.0);
        assert_eq!(row_norm(&m, 1).unwrap(), 0.0);
        assert!(row_norm(&m, 2).is_err());
        let r = random(1, 7, 2);
        let oracle = r.row(0).iter().map(|x| x * x).sum::<f64>().sqrt();
        assert_eq!(row_norm(&r, 0).unwrap(), oracle);
    }

    #[test]
    fn matmul_examples() {
        let a = random(3, 4, 3);
        assert_eq!(matmul(&a, &DenseMatrix::identity(4)).unwrap(), a);
        let x = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let p = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let expect = DenseMatrix::from_rows(&[vec![2.0, 1.0], vec![4.0, 3.0]]).unwrap();
        assert_eq!(matmul(&x, &p).unwrap(), expect);
        let b = random(4, 2, 4);
        let got = matmul(&a, &b).unwrap();
        let want = triple_loop(&a, &b);
        for (g, w) in got.as_slice().iter().zip(want.as_slice()) {
            assert_eq!(g.to_bits(), w.to_bits());
        }
        assert!(matmul(&a, &a).is_err());
    }

    #[test]
    fn matmul_tn_matches_transpose_product() {
        let a = random(6, 3, 5);
        let b = random(6, 4, 6);
        assert_eq!(
            matmul_tn(&a, &b).unwrap(),
            matmul(&a.transpose(), &b).unwrap()
        );
    }

    #[test]
    fn from_vec_rejects_bad_input() {
        assert!(DenseMatrix::from_vec(0, 3, vec![]).is_err());
        assert!(DenseMatrix::from_vec(2, 2, vec![1.0; 3]).is_err());
        assert!(DenseMatrix::from_vec(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![1.0], vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn qr_identity_and_orthonormal() {
        let (q, r) = householder_qr(&DenseMatrix::identity(3)).unwrap();
        assert!(q.sub(&DenseMatrix::identity(3)).max_abs() < 1e-15);
        assert!(r.sub(&DenseMatrix::identity(3)).max_abs() < 1e-15);

        let (basis, _) = householder_qr(&random(7, 3, 9)).unwrap();
        let (q, r) = householder_qr(&basis).unwrap();
        assert!(q.sub(&basis).max_abs() < 1e-12);
        assert!(r.sub(&DenseMatrix::identity(3)).max_abs() < 1e-12);
    }

    #[test]
    fn qr_random_reconstruction() {
        let m = random(6, 3, 11);
        let (q, r) = householder_qr(&m).unwrap();
        assert!(gram_identity_error(&q) <= 1e-10);
        let back = matmul(&q, &r).unwrap();
        assert!(back.sub(&m).max_abs() <= 1e-10 * frobenius_norm(&m));
        for i in 0..3 {
            assert!(r.get(i, i) >= 0.0);
            for j in 0..i {
                assert_eq!(r.get(i, j), 0.0);
            }
        }
        assert!(householder_qr(&random(2, 3, 1)).is_err());
    }

    #[test]
    fn qr_handles_zero_columns() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 2.0], vec![0.0, 3.0]]).unwrap();
        let (q, r) = householder_qr(&m).unwrap();
        assert!(gram_identity_error(&q) < 1e-14);
        assert!(matmul(&q, &r).unwrap().sub(&m).max_abs() < 1e-14);
    }

    #[test]
    fn svd_diag_and_identity() {
        let s = thin_svd(&DenseMatrix::diag(&[3.0, 2.0])).unwrap();
        assert_eq!(s.singular_values, vec![3.0, 2.0]);
        let s = thin_svd(&DenseMatrix::diag(&[2.0, 3.0])).unwrap();
        assert_eq!(s.singular_values, vec![3.0, 2.0]);
        let s = thin_svd(&DenseMatrix::identity(4)).unwrap();
        assert!(s.singular_values.iter().all(|&x| (x - 1.0).abs() < 1e-15));
    }

    #[test]
    fn svd_matches_jacobi_eigen_oracle() {
        let m = random(5, 4, 13);
        let g = matmul_tn(&m, &m).unwrap();
        let rows: Vec<Vec<f64>> = (0..4).map(|i| g.row(i).to_vec()).collect();
        let oracle: Vec<f64> = jacobi_eigenvalues(rows).iter().map(|x| x.sqrt()).collect();
        let s = thin_svd(&m).unwrap();
        for (a, b) in s.singular_values.iter().zip(&oracle) {
            assert!((a - b).abs() <= 1e-9 * b, "{a} vs {b}");
        }
    }

    #[test]
    fn svd_invariants_tall_and_wide() {
        for &(r, c) in &[(10, 8), (8, 10), (30, 3), (3, 30), (6, 6)] {
            let m = random(r, c, (r * 100 + c) as u64);
            let s = thin_svd(&m).unwrap();
            let k = r.min(c);
            assert_eq!(s.singular_values.len(), k);
            assert!(s.singular_values.windows(2).all(|w| w[0] >= w[1]));
            assert!(gram_identity_error(&s.u) <= 1e-10);
            assert!(gram_identity_error(&s.v) <= 1e-10);
            let err = frobenius_norm(&s.reconstruct().sub(&m));
            assert!(err <= 1e-12 * frobenius_norm(&m), "{r}x{c}: {err}");
            for j in 0..k {
                let col = s.v.column(j);
                let big = col.iter().fold(0.0_f64, |a, &x| if x.abs() > a.abs() { x } else { a });
                assert!(big >= 0.0);
            }
        }
    }

    #[test]
    fn svd_rank_deficient_keeps_orthonormal_u() {
        let a = random(9, 2, 21);
        let b = random(2, 6, 22);
        let m = matmul(&a, &b).unwrap();
        let s = thin_svd(&m).unwrap();
        assert!(s.singular_values[2..].iter().all(|&x| x < 1e-12 * s.singular_values[0]));
        assert!(gram_identity_error(&s.u) <= 1e-10);
        assert!(frobenius_norm(&s.reconstruct().sub(&m)) <= 1e-12 * frobenius_norm(&m));

        let z = thin_svd(&DenseMatrix::zeros(4, 3)).unwrap();
        assert!(z.singular_values.iter().all(|&x| x == 0.0));
        assert!(gram_identity_error(&z.u) < 1e-15);
    }

    #[test]
    fn svd_rejects_non_finite() {
        let m = DenseMatrix {
            rows: 1,
            cols: 2,
            data: vec![1.0, f64::INFINITY],
        };
        assert!(thin_svd(&m).is_err());
    }

    #[test]
    fn svd_deterministic() {
        let m = random(12, 7, 5);
        assert_eq!(thin_svd(&m).unwrap(), thin_svd(&m).unwrap());
    }

    #[test]
    fn principal_angle_examples() {
        let (q, _) = householder_qr(&random(6, 2, 30)).unwrap();
        assert!(largest_principal_angle(&q, &q).unwrap() < 1e-6);

        let e = |idx: &[usize]| DenseMatrix::from_fn(4, idx.len(), |i, j| (i == idx[j]) as u8 as f64);
        let a = largest_principal_angle(&e(&[0, 1]), &e(&[2, 3])).unwrap();
        assert!((a - 90.0).abs() < 1e-12);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let d = DenseMatrix::from_rows(&[vec![h], vec![h], vec![0.0], vec![0.0]]).unwrap();
        let a = largest_principal_angle(&e(&[0]), &d).unwrap();
        assert!((a - 45.0).abs() < 1e-12, "{a}");

        assert!(largest_principal_angle(&DenseMatrix::zeros(4, 1), &d).is_err());
        assert!(largest_principal_angle(&DenseMatrix::zeros(3, 1), &d).is_err());
    }

    #[test]
    fn principal_angle_unequal_dimensions() {
        let e = |idx: &[usize]| DenseMatrix::from_fn(5, idx.len(), |i, j| (i == idx[j]) as u8 as f64);
        // span(e0) sits inside span(e0, e1)
        assert!(largest_principal_angle(&e(&[0]), &e(&[0, 1])).unwrap() < 1e-12);
        assert!(largest_principal_angle(&e(&[0, 1]), &e(&[0])).unwrap() < 1e-12);
    }
}
