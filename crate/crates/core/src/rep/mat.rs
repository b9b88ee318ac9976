//! Dense complex matrices, just large enough for level-K representations.
//!
//! The sizes here are tiny (at most a few hundred rows), so the crate carries
//! its own arithmetic and a one-sided Jacobi SVD instead of binding a linear
//! algebra backend. Jacobi orthogonalizes the columns directly on the input
//! matrix, which keeps small singular values accurate at machine precision —
//! the property the null-space extraction in [`super::intertwiner`] depends
//! on.

use num_complex::Complex64;
use std::ops::{Index, IndexMut};

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self[(i, k)];
                if lik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += lik * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    pub fn scale(&self, factor: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| factor * self[(i, j)])
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖A·A† − I‖_F`; zero for a unitary matrix.
    pub fn unitarity_residual(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        self.mul(&self.dagger()).sub(&CMatrix::identity(self.rows)).frobenius_norm()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), Complex64)> + '_ {
        let cols = self.cols;
        self.data.iter().enumerate().map(move |(idx, z)| ((idx / cols, idx % cols), *z))
    }

    fn column_norm_sqr(&self, j: usize) -> f64 {
        (0..self.rows).map(|i| self[(i, j)].norm_sqr()).sum()
    }

    fn column_inner(&self, p: usize, q: usize) -> Complex64 {
        (0..self.rows).map(|i| self[(i, p)].conj() * self[(i, q)]).sum()
    }

    fn swap_columns(&mut self, p: usize, q: usize) {
        for i in 0..self.rows {
            let tmp = self[(i, p)];
            self[(i, p)] = self[(i, q)];
            self[(i, q)] = tmp;
        }
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Singular value decomposition `A = U Σ V†` with singular values in
/// descending order. Columns of `u` belonging to zero singular values are
/// zero vectors.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: CMatrix,
    pub singular_values: Vec<f64>,
    pub v: CMatrix,
}

const JACOBI_REL_TOL: f64 = 1e-15;
const MAX_SWEEPS: usize = 64;

/// One-sided Jacobi SVD: rotates column pairs of a working copy of `A`
/// until all columns are mutually orthogonal; their norms are the singular
/// values and the accumulated rotations form `V`.
pub fn svd(a: &CMatrix) -> Svd {
    let n = a.cols();
    let mut work = a.clone();
    let mut v = CMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let app = work.column_norm_sqr(p);
                let aqq = work.column_norm_sqr(q);
                let apq = work.column_inner(p, q);
                let g = apq.norm();
                if g <= JACOBI_REL_TOL * (app * aqq).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                // Phase the 2x2 Gram block real, then a real Jacobi rotation.
                let phase = Complex64::from_polar(1.0, -apq.arg());
                let tau = (aqq - app) / (2.0 * g);
                let t = tau.signum_or_one() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for m in [&mut work, &mut v] {
                    for i in 0..m.rows() {
                        let mp = m[(i, p)];
                        let mq = m[(i, q)];
                        m[(i, p)] = c * mp - (s * phase) * mq;
                        m[(i, q)] = s * mp + (c * phase) * mq;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }

    // Sort columns by descending norm, then normalize.
    let mut norms: Vec<f64> = (0..n).map(|j| work.column_norm_sqr(j).sqrt()).collect();
    for p in 0..n {
        let mut best = p;
        for q in (p + 1)..n {
            if norms[q] > norms[best] {
                best = q;
            }
        }
        if best != p {
            norms.swap(p, best);
            work.swap_columns(p, best);
            v.swap_columns(p, best);
        }
    }
    let mut u = CMatrix::zeros(a.rows(), n);
    for j in 0..n {
        if norms[j] > 0.0 {
            for i in 0..a.rows() {
                u[(i, j)] = work[(i, j)] / norms[j];
            }
        }
    }
    Svd { u, singular_values: norms, v }
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    #[test]
    fn product_and_dagger() {
        let a = CMatrix::from_fn(2, 2, |i, j| Complex64::new((i + 1) as f64, j as f64));
        let id = CMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        let ad = a.dagger();
        assert_eq!(ad[(0, 1)], a[(1, 0)].conj());
    }

    #[test]
    fn svd_of_diagonal_rectangle() {
        let mut a = CMatrix::zeros(3, 2);
        a[(0, 0)] = Complex64::new(0.0, 2.0);
        a[(1, 1)] = Complex64::new(-3.0, 0.0);
        let result = svd(&a);
        assert!((result.singular_values[0] - 3.0).abs() < 1e-14);
        assert!((result.singular_values[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn svd_reconstructs_random_matrices() {
        let mut rng = StdRng::seed_from_u64(7);
        for &(rows, cols) in &[(1usize, 1usize), (4, 3), (9, 9), (20, 8)] {
            let a = random_matrix(&mut rng, rows, cols);
            let Svd { u, singular_values, v } = svd(&a);
            assert!(v.unitarity_residual() < 1e-12, "V not unitary");
            for j in 1..cols {
                assert!(singular_values[j - 1] >= singular_values[j] - 1e-15);
            }
            // A·v_j = σ_j·u_j column by column.
            let av = a.mul(&v);
            for j in 0..cols {
                for i in 0..rows {
                    let expected = singular_values[j] * u[(i, j)];
                    assert!(
                        (av[(i, j)] - expected).norm() < 1e-12,
                        "reconstruction failed at ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn svd_detects_rank_deficiency() {
        let mut rng = StdRng::seed_from_u64(11);
        let base = random_matrix(&mut rng, 6, 2);
        // Third column = sum of the first two: rank 2 out of 3.
        let a = CMatrix::from_fn(6, 3, |i, j| {
            if j < 2 {
                base[(i, j)]
            } else {
                base[(i, 0)] + base[(i, 1)]
            }
        });
        let result = svd(&a);
        let sigma_min = *result.singular_values.last().unwrap();
        assert!(sigma_min < 1e-13, "sigma_min = {sigma_min}");
        // The corresponding right singular vector is a null vector of A.
        let null = CMatrix::from_fn(3, 1, |i, _| result.v[(i, 2)]);
        assert!(a.mul(&null).frobenius_norm() < 1e-12);
    }
}
