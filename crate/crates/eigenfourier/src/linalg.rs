//! Dense complex matrices and the Hermitian Jacobi eigensolver.
//!
//! Everything downstream (singular values, Schatten sums, symbol extraction)
//! runs on `CMatrix`, a row-major `Complex64` matrix sized for desk-scale
//! spectra (dimensions up to a few hundred). Eigenvalues of Hermitian
//! matrices are computed by cyclic Jacobi rotations, which is foolproof for
//! Hermitian input and accurate to ~1e-12 relative at these sizes.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Build from a nested array of (re, im) pairs; panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
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

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Largest deviation from the conjugate transpose, entrywise.
    pub fn hermitian_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn check_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is consumed as workspace. Off-diagonal mass is annihilated one
/// pivot at a time with complex plane rotations until the off-norm falls
/// below `1e-14` relative to the Frobenius norm. Returns eigenvalues in
/// ascending order.
pub fn hermitian_eigenvalues(mut a: CMatrix) -> Result<Vec<f64>> {
    assert!(a.is_square(), "eigenvalues of a non-square matrix");
    a.check_finite()?;
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![a[(0, 0)].re]);
    }

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let tol = 1e-14 * scale;
    const MAX_SWEEPS: usize = 60;

    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        let off = (2.0 * off).sqrt();
        if off <= tol {
            let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
            eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(eig);
        }
        if sweep == MAX_SWEEPS - 1 {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                offnorm: off,
            });
        }

        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= tol / (n as f64) {
                    continue;
                }
                // Phase u and rotation angle chosen so that the (p,q) entry
                // of J^H A J vanishes: tan(2theta) = 2|apq| / (aqq - app).
                let u = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Column update: A <- A J with J[p][p]=c, J[p][q]=s*u,
                // J[q][p]=-s*conj(u), J[q][q]=c.
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * c - aiq * s * u.conj();
                    a[(i, q)] = aip * s * u + aiq * c;
                }
                // Row update: A <- J^H A.
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj * c - aqj * s * u;
                    a[(q, j)] = apj * s * u.conj() + aqj * c;
                }
                // Clean up round-off drift on entries that are exact by
                // construction.
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                let dp = a[(p, p)].re;
                let dq = a[(q, q)].re;
                a[(p, p)] = Complex64::new(dp, 0.0);
                a[(q, q)] = Complex64::new(dq, 0.0);
            }
        }
    }
    unreachable!()
}

/// Least-squares slope and intercept of `y` against `x`.
///
/// Returns `(slope, intercept)`. Needs at least two points; with fewer the
/// slope is 0 and the intercept is the mean.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    if x.len() < 2 {
        let mean = if x.is_empty() { 0.0 } else { y[0] };
        return (0.0, mean);
    }
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    if sxx == 0.0 {
        return (0.0, my);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let mut a = CMatrix::zeros(3, 3);
        a[(0, 0)] = c(3.0, 0.0);
        a[(1, 1)] = c(-1.0, 0.0);
        a[(2, 2)] = c(2.0, 0.0);
        let eig = hermitian_eigenvalues(a).unwrap();
        assert_eq!(eig, vec![-1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigenvalues_of_real_symmetric_2x2() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let a = CMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0)],
        ]);
        let eig = hermitian_eigenvalues(a).unwrap();
        assert!((eig[0] - 1.0).abs() < 1e-13);
        assert!((eig[1] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn eigenvalues_of_complex_hermitian_2x2() {
        // [[1, i],[-i, 1]] has eigenvalues 0 and 2.
        let a = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(1.0, 0.0)],
        ]);
        let eig = hermitian_eigenvalues(a).unwrap();
        assert!(eig[0].abs() < 1e-13);
        assert!((eig[1] - 2.0).abs() < 1e-13);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // Random-ish Hermitian 6x6; the eigenvalue sum must equal the trace
        // and the square sum must equal the Frobenius norm squared.
        let n = 6;
        let mut seed = 0x12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64) / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        let mut a = CMatrix::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = c(next(), 0.0);
            for j in (i + 1)..n {
                let z = c(next(), next());
                a[(i, j)] = z;
                a[(j, i)] = z.conj();
            }
        }
        let tr = a.trace().re;
        let fro2 = a.frobenius_norm().powi(2);
        let eig = hermitian_eigenvalues(a).unwrap();
        let s1: f64 = eig.iter().sum();
        let s2: f64 = eig.iter().map(|x| x * x).sum();
        assert!((s1 - tr).abs() < 1e-11);
        assert!((s2 - fro2).abs() < 1e-11);
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let mut a = CMatrix::identity(2);
        a[(0, 1)] = c(f64::NAN, 0.0);
        assert!(matches!(
            hermitian_eigenvalues(a),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn linear_fit_recovers_exact_line() {
        let x = [0.0, 1.0, 2.0, 3.0];
        let y = [1.0, 3.0, 5.0, 7.0];
        let (slope, intercept) = linear_fit(&x, &y);
        assert!((slope - 2.0).abs() < 1e-14);
        assert!((intercept - 1.0).abs() < 1e-14);
    }
}
