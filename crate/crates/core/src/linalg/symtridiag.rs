//! Dense real-symmetric eigenvalues via Householder tridiagonalisation
//! followed by implicit-shift QL. Eigenvalues only; used for the large
//! finite-difference mode systems where the Jacobi solver would be slow.

use crate::scalar::Real;

/// Eigenvalues (ascending) of a dense real symmetric matrix given as
/// row-major `n x n` data. The input is consumed as workspace.
pub fn symmetric_eigenvalues<T: Real>(mut a: Vec<Vec<T>>) -> Vec<T> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tridiagonalize(&mut a, &mut d, &mut e);
    ql_implicit(&mut d, &mut e);
    d.sort_by(|x, y| x.partial_cmp(y).unwrap());
    d
}

/// Householder reduction to tridiagonal form (no eigenvectors).
fn tridiagonalize<T: Real>(a: &mut [Vec<T>], d: &mut [T], e: &mut [T]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = T::zero();
        if l > 0 {
            let mut scale = T::zero();
            for k in 0..=l {
                scale += a[i][k].abs();
            }
            if scale == T::zero() {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] = a[i][k] / scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = T::zero();
                for j in 0..=l {
                    let mut g = T::zero();
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] = a[j][k] - (f * e[k] + g * a[i][k]);
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = T::zero();
    e[0] = T::zero();
    for i in 0..n {
        d[i] = a[i][i];
    }
}

/// Implicit-shift QL on a tridiagonal (d, e); e[0] is unused on entry.
fn ql_implicit<T: Real>(d: &mut [T], e: &mut [T]) {
    let n = d.len();
    if n == 1 {
        return;
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (e[l] + e[l]);
            let mut r = hypot(g, T::one());
            g = d[m] - d[l] + e[l] / (g + copysign(r, g));
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + (c + c) * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if i == l {
                    d[l] = d[l] - p;
                    e[l] = g;
                    e[m] = T::zero();
                }
            }
            if i > l {
                continue;
            }
        }
    }
}

#[inline]
fn hypot<T: Real>(a: T, b: T) -> T {
    let (a, b) = (a.abs(), b.abs());
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    if hi == T::zero() {
        return T::zero();
    }
    let q = lo / hi;
    hi * (T::one() + q * q).sqrt()
}

#[inline]
fn copysign<T: Real>(mag: T, sign: T) -> T {
    if sign >= T::zero() {
        mag.abs()
    } else {
        -mag.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_matrix() {
        // [[2,1],[1,2]] -> {1, 3}
        let a = vec![vec![2.0f64, 1.0], vec![1.0, 2.0]];
        let vals = symmetric_eigenvalues(a);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn laplacian_chain_matches_closed_form() {
        // Dirichlet 1-D Laplacian: eigenvalues 4 sin^2(k pi / (2(n+1))) / h^2 with h = 1.
        let n = 40;
        let mut a = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            a[i][i] = 2.0;
            if i + 1 < n {
                a[i][i + 1] = -1.0;
                a[i + 1][i] = -1.0;
            }
        }
        let vals = symmetric_eigenvalues(a);
        for (k, v) in vals.iter().enumerate() {
            let exact = 4.0 * ((k as f64 + 1.0) * std::f64::consts::PI / (2.0 * (n as f64 + 1.0))).sin().powi(2);
            assert!((v - exact).abs() < 1e-10, "k={k} v={v} exact={exact}");
        }
    }
}
