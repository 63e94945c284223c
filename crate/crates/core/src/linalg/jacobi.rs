//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Rotations sweep the strict upper triangle in a fixed row-major order, so
//! the result is deterministic. Each rotation annihilates one off-diagonal
//! entry exactly; sweeps repeat until the off-diagonal Frobenius norm drops
//! below `tol * ||A||_F`.

use num_complex::Complex;

use super::matrix::CMat;
use crate::scalar::{cr, Real};

/// Eigenvalues (ascending) of a Hermitian matrix.
pub fn hermitian_eigenvalues<T: Real>(a: &CMat<T>, rel_tol: T) -> Vec<T> {
    let (vals, _) = hermitian_eigen(a, rel_tol, false);
    vals
}

/// Eigenvalues (ascending) and unitary eigenvector matrix (columns match the
/// eigenvalue order) of a Hermitian matrix.
pub fn hermitian_eigen<T: Real>(a: &CMat<T>, rel_tol: T, want_vectors: bool) -> (Vec<T>, Option<CMat<T>>) {
    assert!(a.is_square());
    let n = a.rows();
    let mut h = a.clone();
    let mut v = if want_vectors { Some(CMat::identity(n)) } else { None };

    let scale = h.fro_norm();
    if scale == T::zero() {
        let vals = vec![T::zero(); n];
        return (vals, v);
    }
    let target = rel_tol * scale;

    for _sweep in 0..60 {
        if off_norm(&h) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut h, v.as_mut(), p, q);
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| h[(i, i)].re).collect();
    idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let vals: Vec<T> = idx.iter().map(|&i| diag[i]).collect();
    let vecs = v.map(|v| {
        let mut out = CMat::zeros(n, n);
        for (new_col, &old_col) in idx.iter().enumerate() {
            for r in 0..n {
                out[(r, new_col)] = v[(r, old_col)];
            }
        }
        out
    });
    (vals, vecs)
}

fn off_norm<T: Real>(h: &CMat<T>) -> T {
    let n = h.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += h[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One complex Jacobi rotation zeroing `h[(p, q)]`.
fn rotate<T: Real>(h: &mut CMat<T>, mut v: Option<&mut CMat<T>>, p: usize, q: usize) {
    let apq = h[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }
    let phase = apq / cr(r); // e^{i phi}
    let app = h[(p, p)].re;
    let aqq = h[(q, q)].re;

    let tau = (aqq - app) / (r + r);
    let t = if tau == T::zero() {
        T::one()
    } else {
        let s = if tau > T::zero() { T::one() } else { -T::one() };
        s / (tau.abs() + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // Plane rotation G restricted to (p, q):
    //   G[p][p] = c             G[p][q] = s
    //   G[q][p] = -s conj(phase) G[q][q] = c conj(phase)
    // Apply A <- G* A G, V <- V G.
    let n = h.rows();
    let gpp = cr(c);
    let gpq = cr(s);
    let gqp = cr(-s) * phase.conj();
    let gqq = cr(c) * phase.conj();

    // columns
    for i in 0..n {
        let aip = h[(i, p)];
        let aiq = h[(i, q)];
        h[(i, p)] = aip * gpp + aiq * gqp;
        h[(i, q)] = aip * gpq + aiq * gqq;
    }
    // rows (adjoint action)
    for j in 0..n {
        let apj = h[(p, j)];
        let aqj = h[(q, j)];
        h[(p, j)] = gpp.conj() * apj + gqp.conj() * aqj;
        h[(q, j)] = gpq.conj() * apj + gqq.conj() * aqj;
    }
    // clean the target entry and enforce real diagonal
    h[(p, q)] = Complex::new(T::zero(), T::zero());
    h[(q, p)] = Complex::new(T::zero(), T::zero());
    h[(p, p)] = cr(h[(p, p)].re);
    h[(q, q)] = cr(h[(q, q)].re);

    if let Some(v) = v.as_deref_mut() {
        for i in 0..n {
            let vip = v[(i, p)];
            let viq = v[(i, q)];
            v[(i, p)] = vip * gpp + viq * gqp;
            v[(i, q)] = vip * gpq + viq * gqq;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ci;

    #[test]
    fn diagonal_matrix_is_fixed() {
        let mut a = CMat::zeros(4, 4);
        for (i, x) in [3.0f64, 1.0, 4.0, 2.0].iter().enumerate() {
            a[(i, i)] = cr(*x);
        }
        let vals = hermitian_eigenvalues(&a, 1e-12);
        assert_eq!(vals, vec![1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn complex_hermitian_2x2_exact() {
        // [[1, i],[-i, 1]] has eigenvalues 0 and 2.
        let mut a = CMat::zeros(2, 2);
        a[(0, 0)] = cr(1.0f64);
        a[(1, 1)] = cr(1.0);
        a[(0, 1)] = ci(1.0);
        a[(1, 0)] = ci(-1.0);
        let (vals, vecs) = hermitian_eigen(&a, 1e-13, true);
        assert!((vals[0] - 0.0).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
        // residual ||A v - lambda v||
        let v = vecs.unwrap();
        for k in 0..2 {
            let col: Vec<_> = (0..2).map(|i| v[(i, k)]).collect();
            let av = a.mul_vec(&col);
            for i in 0..2 {
                assert!((av[i] - cr(vals[k]) * col[i]).norm() < 1e-12);
            }
        }
    }
}
