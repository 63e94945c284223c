//! Dense complex matrices, just enough for spinor representations and
//! small eigenproblems. Row-major storage.

use num_complex::Complex;

use crate::scalar::{cr, real, C, Real};

/// Dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Real> std::fmt::Debug for CMat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CMat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(8) {
            for j in 0..self.cols.min(8) {
                let z = self[(i, j)];
                write!(f, " {:+.3e}{:+.3e}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: Real> CMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = cr(T::one());
        }
        m
    }

    /// Builds from a row-major slice of complex entries.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<C<T>>) -> Self {
        assert_eq!(rows * cols, data.len());
        CMat { rows, cols, data }
    }

    /// 1x1 matrix holding a single scalar.
    pub fn scalar(z: C<T>) -> Self {
        CMat { rows: 1, cols: 1, data: vec![z] }
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

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, z: C<T>) -> Self {
        let data = self.data.iter().map(|a| a * z).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.scale(cr(-T::one()))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C<T> {
        assert!(self.is_square());
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            t = t + self[(i, i)];
        }
        t
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Largest entry magnitude (max norm).
    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for z in &self.data {
            let a = z.norm();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Frobenius norm.
    pub fn fro_norm(&self) -> T {
        let mut s = T::zero();
        for z in &self.data {
            s += z.norm_sqr();
        }
        s.sqrt()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc = acc + self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Writes `block` into `self` with top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    /// Extracts the block of shape `(r, c)` at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, r: usize, c: usize) -> Self {
        let mut out = Self::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                out[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        out
    }

    /// Hermitian deviation `max |A - A*|`.
    pub fn hermitian_residual(&self) -> T {
        assert!(self.is_square());
        let mut m = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > m {
                    m = d;
                }
            }
        }
        m
    }

    /// Cholesky factor `L` (lower triangular) of a Hermitian positive
    /// definite matrix, `A = L L*`. Returns `None` when a pivot is not
    /// strictly positive.
    pub fn cholesky(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut l = Self::zeros(n, n);
        for j in 0..n {
            let mut d = self[(j, j)].re;
            for k in 0..j {
                d -= l[(j, k)].norm_sqr();
            }
            if d <= T::zero() {
                return None;
            }
            let dj = d.sqrt();
            l[(j, j)] = cr(dj);
            for i in (j + 1)..n {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s = s - l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = s / cr(dj);
            }
        }
        Some(l)
    }

    /// Solves `L x = b` for lower-triangular `L` (forward substitution).
    pub fn solve_lower(&self, b: &[C<T>]) -> Vec<C<T>> {
        let n = self.rows;
        let mut x = b.to_vec();
        for i in 0..n {
            let mut s = x[i];
            for k in 0..i {
                s = s - self[(i, k)] * x[k];
            }
            x[i] = s / self[(i, i)];
        }
        x
    }

    /// Solves `L* x = b` (backward substitution with the adjoint factor).
    pub fn solve_lower_adjoint(&self, b: &[C<T>]) -> Vec<C<T>> {
        let n = self.rows;
        let mut x = b.to_vec();
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in (i + 1)..n {
                s = s - self[(k, i)].conj() * x[k];
            }
            x[i] = s / self[(i, i)].conj();
        }
        x
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for CMat<T> {
    type Output = C<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for CMat<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.cols + j]
    }
}

/// Inner product `<u, v> = sum conj(u_i) v_i`.
pub fn dot<T: Real>(u: &[C<T>], v: &[C<T>]) -> C<T> {
    assert_eq!(u.len(), v.len());
    let mut s = Complex::new(T::zero(), T::zero());
    for (a, b) in u.iter().zip(v) {
        s = s + a.conj() * b;
    }
    s
}

/// Euclidean norm of a complex vector.
pub fn vec_norm<T: Real>(v: &[C<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt()
}

/// Gram-Schmidt orthonormalisation of the columns spanned by `vs`,
/// dropping directions whose residual norm falls below `tol`.
pub fn orthonormalize<T: Real>(vs: &[Vec<C<T>>], tol: T) -> Vec<Vec<C<T>>> {
    let mut basis: Vec<Vec<C<T>>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = *wi - c * bi;
                }
            }
        }
        let n = vec_norm(&w);
        if n > tol {
            let inv = cr(T::one() / n);
            for wi in w.iter_mut() {
                *wi = *wi * inv;
            }
            basis.push(w);
        }
    }
    basis
}

/// Condition number estimate of a Hermitian Gram matrix via its extreme
/// eigenvalues (Jacobi).
pub fn gram_condition<T: Real>(g: &CMat<T>) -> T {
    let eigs = super::jacobi::hermitian_eigenvalues(g, real(1e-13));
    let lo = eigs[0].abs();
    let hi = eigs[eigs.len() - 1].abs();
    if lo == T::zero() {
        T::infinity()
    } else {
        hi / lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_mul_agree_with_hand_values() {
        let a = CMat::from_rows(
            2,
            2,
            vec![cr(1.0f64), cr(2.0), cr(3.0), cr(4.0)],
        );
        let id = CMat::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(2, 0)], cr(3.0));
        assert_eq!(k[(3, 3)], cr(4.0));
        let prod = a.mul(&id);
        assert!(prod.sub(&a).max_abs() < 1e-15);
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = CMat::from_rows(
            2,
            2,
            vec![cr(4.0f64), Complex::new(1.0, 1.0), Complex::new(1.0, -1.0), cr(3.0)],
        );
        let l = a.cholesky().unwrap();
        let r = l.mul(&l.adjoint());
        assert!(r.sub(&a).max_abs() < 1e-14);
    }
}
