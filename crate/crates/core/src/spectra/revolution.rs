//! Intrinsic Dirac and Laplace-Beltrami operators of Euclidean surfaces of
//! revolution, block-decomposed over angular Fourier modes.
//!
//! With metric `dt^2 + r(t)^2 dphi^2` and the half-density substitution
//! `chi = sqrt(r) phi`, the Dirac mode operator for the angular offset
//! `kappa` is the first-order pair `A = i(d/dt + kappa/r)`, `A*`, whose
//! block matrix `[[0, A], [A*, 0]]` is Hermitian with spectrum `+-sigma(A)`.
//!
//! Torus-like profiles (no poles) are discretized with central differences
//! on a staggered uniform arclength grid. Sphere-like profiles are solved
//! by a Rayleigh-Ritz basis carrying the exact pole behaviour
//! `sin(t/2)^(k+1) cos(t/2)^k` of the half-integer modes: a uniform-grid
//! difference scheme cannot converge for the `|kappa| = 1/2` modes (the
//! pole is in the limit-circle case and the discrete operator picks up a
//! spurious extension), while the variational form selects the right one
//! and converges spectrally.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geometry::{gauss_legendre, Immersion, RevolutionProfile};
use crate::linalg::{hermitian_eigenvalues, symmetric_eigenvalues, CMat};
use crate::scalar::{ci, cr, real, Real};

use super::{Spectrum, SpectrumSource, SpinStructureLabel};

/// Dirac spectrum of a Euclidean surface of revolution, complete for
/// `|lambda| <= window` provided `mode_max` retained angular modes suffice;
/// otherwise an explicit window error is returned.
pub fn revolution_dirac<T: Real>(
    imm: &Immersion<T>,
    n: usize,
    mode_max: usize,
    label: &SpinStructureLabel,
    window: T,
) -> Result<Spectrum<T>> {
    let profile = imm
        .revolution
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("revolution_dirac needs a surface of revolution".into()))?;
    if n < 16 {
        return Err(Error::InvalidArgument("revolution_dirac needs n >= 16".into()));
    }
    if mode_max < 1 {
        return Err(Error::InvalidArgument("mode_max must be at least 1".into()));
    }

    match profile {
        RevolutionProfile::SphereLike { radius_over_sin, speed } => {
            if label.flags.len() != 1 || !label.flags[0].is_antiperiodic() {
                return Err(Error::InvalidArgument(
                    "sphere-like surfaces carry the antiperiodic rotation-loop condition".into(),
                ));
            }
            let r_max = sphere_like_rmax(radius_over_sin.as_ref());
            check_mode_window(real::<T>(mode_max as f64) + real(0.5), r_max, window, mode_max)?;
            let nb = (n / 8).clamp(8, 48);
            let mut values: Vec<(T, usize)> = Vec::new();
            for j in 0..mode_max {
                let kappa = real::<T>(j as f64) + real(0.5);
                let sig = sphere_like_mode_eigs(radius_over_sin.as_ref(), speed.as_ref(), kappa, nb);
                for s in sig {
                    if s > T::zero() && s <= window {
                        values.push((s, 2));
                        values.push((-s, 2));
                    }
                }
            }
            Ok(Spectrum::dirac(values, window, SpectrumSource::Discretized { n, modes: mode_max }))
        }
        RevolutionProfile::TorusLike { arclength_period, radius_of_arclength } => {
            if label.flags.len() != 2 {
                return Err(Error::InvalidArgument("torus-like surfaces need two boundary flags".into()));
            }
            let offset: T = label.flags[1].offset();
            let kappa_excluded = real::<T>(mode_max as f64) + offset;
            let r_max = torus_like_rmax(radius_of_arclength.as_ref(), *arclength_period);
            check_mode_window(kappa_excluded, r_max, window, mode_max)?;
            let anti_t = label.flags[0].is_antiperiodic();
            let mut values: Vec<(T, usize)> = Vec::new();
            for j in 0..mode_max {
                let kappa = real::<T>(j as f64) + offset;
                if kappa == T::zero() && j > 0 {
                    continue;
                }
                let mult = if kappa == T::zero() { 1 } else { 2 };
                let op = torus_mode_operator(radius_of_arclength.as_ref(), *arclength_period, n, kappa, anti_t)?;
                let eigs = gauge_symmetric_eigenvalues(&op.matrix);
                for e in eigs {
                    if e.abs() <= window {
                        values.push((e, mult));
                    }
                }
            }
            Ok(Spectrum::dirac(values, window, SpectrumSource::Discretized { n, modes: mode_max }))
        }
    }
}

/// Laplace-Beltrami spectrum of a Euclidean surface of revolution,
/// decomposed over integer angular modes.
pub fn laplace_spectrum_revolution<T: Real>(
    imm: &Immersion<T>,
    n: usize,
    mode_max: usize,
    window: T,
) -> Result<Spectrum<T>> {
    let profile = imm
        .revolution
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("needs a surface of revolution".into()))?;
    if mode_max < 1 {
        return Err(Error::InvalidArgument("mode_max must be at least 1".into()));
    }
    match profile {
        RevolutionProfile::SphereLike { radius_over_sin, speed } => {
            let r_max = sphere_like_rmax(radius_over_sin.as_ref());
            let kex = real::<T>(mode_max as f64);
            if kex * kex / (r_max * r_max) <= window {
                return Err(window_error(mode_max, window));
            }
            let nb = (n / 8).clamp(8, 48);
            let mut values: Vec<(T, usize)> = Vec::new();
            for kappa_i in 0..mode_max {
                let eigs =
                    sphere_like_laplace_eigs(radius_over_sin.as_ref(), speed.as_ref(), kappa_i, nb);
                let mult = if kappa_i == 0 { 1 } else { 2 };
                for e in eigs {
                    let e = if e.abs() < real::<T>(1e-9) { T::zero() } else { e };
                    if e <= window && e >= T::zero() {
                        values.push((e, mult));
                    }
                }
            }
            Ok(Spectrum::laplace(values, window, SpectrumSource::Discretized { n, modes: mode_max }))
        }
        RevolutionProfile::TorusLike { arclength_period, radius_of_arclength } => {
            let r_max = torus_like_rmax(radius_of_arclength.as_ref(), *arclength_period);
            let kex = real::<T>(mode_max as f64);
            if kex * kex / (r_max * r_max) <= window {
                return Err(window_error(mode_max, window));
            }
            let mut values: Vec<(T, usize)> = Vec::new();
            for kappa_i in 0..mode_max {
                let eigs = torus_laplace_eigs(radius_of_arclength.as_ref(), *arclength_period, n, kappa_i)?;
                let mult = if kappa_i == 0 { 1 } else { 2 };
                for e in eigs {
                    // the constant mode sits an O(h^2) offset away from its
                    // exact value 0 in the finite-difference block
                    let e = if e.abs() < real::<T>(2e-3) { T::zero() } else { e };
                    if e <= window && e >= T::zero() {
                        values.push((e, mult));
                    }
                }
            }
            Ok(Spectrum::laplace(values, window, SpectrumSource::Discretized { n, modes: mode_max }))
        }
    }
}

fn window_error<T: Real>(mode_max: usize, window: T) -> Error {
    Error::WindowInsufficient(format!(
        "mode_max = {mode_max} cannot certify completeness up to window {window}; \
         raise mode_max or lower the window"
    ))
}

/// Discarded modes have `lambda^2 >= kappa (kappa - 1) / r_max^2`; the
/// window is certified only when that floor clears it.
fn check_mode_window<T: Real>(kappa_excluded: T, r_max: T, window: T, mode_max: usize) -> Result<()> {
    if kappa_excluded <= T::one() {
        return Err(window_error(mode_max, window));
    }
    let floor = (kappa_excluded * (kappa_excluded - T::one())).sqrt() / r_max;
    if floor <= window {
        return Err(window_error(mode_max, window));
    }
    Ok(())
}

fn sphere_like_rmax<T: Real>(radius_over_sin: &(dyn Fn(T) -> T + Send + Sync)) -> T {
    let mut r_max = T::zero();
    for k in 0..257 {
        let t = real::<T>(std::f64::consts::PI * k as f64 / 256.0);
        let r = radius_over_sin(t) * t.sin();
        if r > r_max {
            r_max = r;
        }
    }
    r_max
}

fn torus_like_rmax<T: Real>(radius: &(dyn Fn(T) -> T + Send + Sync), period: T) -> T {
    let mut r_max = T::zero();
    for k in 0..512 {
        let s = period * real::<T>(k as f64 / 512.0);
        let r = radius(s);
        if r > r_max {
            r_max = r;
        }
    }
    r_max
}

/// Legendre values and derivatives at the quadrature nodes (interior, so
/// the derivative relation `(1 - x^2) P'_n = n (P_{n-1} - x P_n)` is safe).
fn legendre_table<T: Real>(xs: &[T], nb: usize) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let nq = xs.len();
    let mut p = vec![vec![T::zero(); nq]; nb];
    let mut dp = vec![vec![T::zero(); nq]; nb];
    for (q, &x) in xs.iter().enumerate() {
        for row in 0..nb {
            p[row][q] = match row {
                0 => T::one(),
                1 => x,
                k => {
                    let kf = real::<T>(k as f64);
                    ((kf + kf - T::one()) * x * p[k - 1][q] - (kf - T::one()) * p[k - 2][q]) / kf
                }
            };
        }
        for row in 0..nb {
            dp[row][q] = if row == 0 {
                T::zero()
            } else {
                let nf = real::<T>(row as f64);
                nf * (p[row - 1][q] - x * p[row][q]) / (T::one() - x * x)
            };
        }
    }
    (p, dp)
}

/// Positive singular values of the half-integer mode operator on a
/// sphere-like profile, by Rayleigh-Ritz in the pole-adapted basis
/// `chi2 ~ s^(k+1) c^k P_q(x)`, `chi1 ~ s^k c^(k+1) P_p(x)` with
/// `s = sin(theta/2)`, `c = cos(theta/2)`, `x = cos(theta)`.
fn sphere_like_mode_eigs<T: Real>(
    radius_over_sin: &(dyn Fn(T) -> T + Send + Sync),
    speed: &(dyn Fn(T) -> T + Send + Sync),
    kappa: T,
    nb: usize,
) -> Vec<T> {
    let m = (kappa - real::<T>(0.5)).to_f64().unwrap_or(0.0).round() as i32;
    let nq = 2 * nb + 2 * m as usize + 12;
    let (xs, ws) = gauss_legendre::<T>(nq);
    let (p, dp) = legendre_table(&xs, nb);

    let mut g1 = CMat::<T>::zeros(nb, nb);
    let mut g2 = CMat::<T>::zeros(nb, nb);
    let mut a = CMat::<T>::zeros(nb, nb);
    let aa = kappa + T::one();
    let bb = kappa;
    for (q, (&x, &w)) in xs.iter().zip(&ws).enumerate() {
        let s2 = (T::one() - x) / real::<T>(2.0);
        let c2 = (T::one() + x) / real::<T>(2.0);
        let theta = x.acos();
        let jj = speed(theta);
        let ros = radius_over_sin(theta);
        let s2m = s2.powi(m);
        let c2m = c2.powi(m);
        let w_g1 = w * s2m * c2m * c2 * jj / real::<T>(2.0);
        let w_g2 = w * s2m * s2 * c2m * jj / real::<T>(2.0);
        let w_t1 = w * s2m * c2m * (aa * c2 - bb * s2) / real::<T>(4.0);
        let w_t2 = -w * s2m * s2 * c2m * c2;
        let w_t3 = w * kappa * s2m * c2m * jj / (real::<T>(4.0) * ros);
        for i in 0..nb {
            for jcol in 0..nb {
                let pp = p[i][q] * p[jcol][q];
                g1[(i, jcol)] = g1[(i, jcol)] + cr(w_g1 * pp);
                g2[(i, jcol)] = g2[(i, jcol)] + cr(w_g2 * pp);
                let t = w_t1 * pp + w_t2 * p[i][q] * dp[jcol][q] + w_t3 * pp;
                a[(i, jcol)] = a[(i, jcol)] + ci(t);
            }
        }
    }
    generalized_block_singular_values(&a, &g1, &g2)
}

/// Eigenvalues of the integer-mode scalar Laplacian on a sphere-like
/// profile, Rayleigh-Ritz with basis `s^k c^k P_p(x)`.
fn sphere_like_laplace_eigs<T: Real>(
    radius_over_sin: &(dyn Fn(T) -> T + Send + Sync),
    speed: &(dyn Fn(T) -> T + Send + Sync),
    kappa_i: usize,
    nb: usize,
) -> Vec<T> {
    let kappa = real::<T>(kappa_i as f64);
    let nq = 2 * nb + 2 * kappa_i + 12;
    let (xs, ws) = gauss_legendre::<T>(nq);
    let (p, dp) = legendre_table(&xs, nb);

    let mut mass = vec![vec![T::zero(); nb]; nb];
    let mut stiff = vec![vec![T::zero(); nb]; nb];
    for (q, (&x, &w)) in xs.iter().zip(&ws).enumerate() {
        let two = real::<T>(2.0);
        let s2 = (T::one() - x) / two;
        let c2 = (T::one() + x) / two;
        let sh = s2.sqrt(); // sin(theta/2)
        let ch = c2.sqrt();
        let theta = x.acos();
        let jj = speed(theta);
        let ros = radius_over_sin(theta);
        let sin_theta = two * sh * ch;
        let r = ros * sin_theta;
        // basis value and theta-derivative at this node
        let base = sh.powi(kappa_i as i32) * ch.powi(kappa_i as i32);
        let dbase = if kappa_i == 0 {
            T::zero()
        } else {
            sh.powi(kappa_i as i32 - 1)
                * ch.powi(kappa_i as i32 - 1)
                * (kappa * (c2 - s2) / two)
        };
        for i in 0..nb {
            let fi = base * p[i][q];
            let dfi = dbase * p[i][q] - two * sh * ch * base * dp[i][q];
            for jcol in 0..nb {
                let fj = base * p[jcol][q];
                let dfj = dbase * p[jcol][q] - two * sh * ch * base * dp[jcol][q];
                // measure d theta = dx / sin(theta)
                let conv = w / sin_theta;
                mass[i][jcol] += conv * fi * fj * r * jj;
                let mut sval = conv * dfi * dfj * (r / jj);
                if kappa_i > 0 {
                    sval += conv * kappa * kappa * fi * fj * jj / r;
                }
                stiff[i][jcol] += sval;
            }
        }
    }
    generalized_symmetric_eigs(stiff, mass)
}

/// Staggered central-difference mode operator on a torus-like profile:
/// `chi1` lives on the integer grid, `chi2` on the half grid; bonds carry
/// `+-1/h + (kappa/2) / r(midpoint)` and wrap with the sign of the profile
/// boundary condition. Interleaved, the matrix is Hermitian tridiagonal
/// with a corner.
pub(crate) fn torus_mode_operator<T: Real>(
    radius: &(dyn Fn(T) -> T + Send + Sync),
    period: T,
    n: usize,
    kappa: T,
    antiperiodic_profile: bool,
) -> Result<super::DiscreteOperator<T>> {
    let h = period / real::<T>(n as f64);
    let dim = 2 * n;
    let mut hmat = CMat::<T>::zeros(dim, dim);
    let quarter = h / real::<T>(4.0);
    let half = real::<T>(0.5);
    for j in 0..n {
        let t = h * real::<T>(j as f64);
        let r1 = radius(t + quarter);
        if r1 <= T::zero() {
            return Err(Error::Degenerate("profile radius vanishes".into()));
        }
        // bond chi1[j] -- chi2[j]
        let c = T::one() / h + half * kappa / r1;
        hmat[(2 * j, 2 * j + 1)] = ci(c);
        hmat[(2 * j + 1, 2 * j)] = ci(-c);
        // bond chi2[j] -- chi1[j+1]
        let r2 = radius(t + quarter * real::<T>(3.0));
        let c2 = -T::one() / h + half * kappa / r2;
        let jn = (j + 1) % n;
        let sgn = if antiperiodic_profile && jn == 0 { -T::one() } else { T::one() };
        hmat[(2 * jn, 2 * j + 1)] = ci(c2 * sgn);
        hmat[(2 * j + 1, 2 * jn)] = ci(-c2 * sgn);
    }
    Ok(super::DiscreteOperator { matrix: hmat, grid_n: n, mode: Some(kappa) })
}

/// Eigenvalues of a Hermitian matrix with purely imaginary entries in the
/// odd-offset pattern of the staggered schemes: a diagonal phase gauge
/// makes it real symmetric, then Householder + QL.
fn gauge_symmetric_eigenvalues<T: Real>(h: &CMat<T>) -> Vec<T> {
    let dim = h.rows();
    let unit = Complex::new(T::zero(), T::one());
    let mut phases = Vec::with_capacity(dim);
    let mut cur = Complex::new(T::one(), T::zero());
    for _ in 0..dim {
        phases.push(cur);
        cur = cur * unit;
    }
    let mut s = vec![vec![T::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let z = phases[i].conj() * h[(i, j)] * phases[j];
            debug_assert!(z.im.abs() <= real::<T>(1e-10) * (T::one() + z.re.abs()));
            s[i][j] = z.re;
        }
    }
    symmetric_eigenvalues(s)
}

/// Symmetrized 3-point scheme for the mode Laplacian on a torus-like
/// profile: `-chi'' + W chi` with
/// `W = r''/(2r) - r'^2/(4 r^2) + kappa^2 / r^2` on the periodic grid.
fn torus_laplace_eigs<T: Real>(
    radius: &(dyn Fn(T) -> T + Send + Sync),
    period: T,
    n: usize,
    kappa_i: usize,
) -> Result<Vec<T>> {
    let h = period / real::<T>(n as f64);
    let fd = period * real::<T>(1e-5);
    let kappa = real::<T>(kappa_i as f64);
    let mut w_pot = Vec::with_capacity(n);
    for j in 0..n {
        let t = h * real::<T>(j as f64);
        let r0 = radius(t);
        if r0 <= T::zero() {
            return Err(Error::Degenerate("profile radius vanishes".into()));
        }
        let rp = (radius(t + fd) - radius(t - fd)) / (fd + fd);
        let rpp = (radius(t + fd) - (r0 + r0) + radius(t - fd)) / (fd * fd);
        let two = real::<T>(2.0);
        let four = real::<T>(4.0);
        w_pot.push(rpp / (two * r0) - rp * rp / (four * r0 * r0) + kappa * kappa / (r0 * r0));
    }
    let inv_h2 = T::one() / (h * h);
    let mut s = vec![vec![T::zero(); n]; n];
    for j in 0..n {
        s[j][j] = inv_h2 + inv_h2 + w_pot[j];
        let jn = (j + 1) % n;
        s[j][jn] -= inv_h2;
        s[jn][j] -= inv_h2;
    }
    Ok(symmetric_eigenvalues(s))
}

/// Positive eigenvalues of the generalized block problem
/// `[[0, A], [A*, 0]] v = lambda diag(G1, G2) v` via Cholesky reduction and
/// the Jacobi solver.
fn generalized_block_singular_values<T: Real>(a: &CMat<T>, g1: &CMat<T>, g2: &CMat<T>) -> Vec<T> {
    let nb = a.rows();
    let l1 = g1.cholesky().expect("mass matrix must be positive definite");
    let l2 = g2.cholesky().expect("mass matrix must be positive definite");
    // A_tilde = L1^-1 A L2^-*
    let mut m = CMat::<T>::zeros(nb, nb);
    for col in 0..nb {
        let b: Vec<_> = (0..nb).map(|r| a[(r, col)]).collect();
        let y = l1.solve_lower(&b);
        for r in 0..nb {
            m[(r, col)] = y[r];
        }
    }
    // right-solve against L2^*: rows of M b via adjoint trick
    let mut mt = m.adjoint();
    for col in 0..nb {
        let b: Vec<_> = (0..nb).map(|r| mt[(r, col)]).collect();
        let y = l2.solve_lower(&b);
        for r in 0..nb {
            mt[(r, col)] = y[r];
        }
    }
    let atil = mt.adjoint();
    let mut block = CMat::<T>::zeros(2 * nb, 2 * nb);
    block.set_block(0, nb, &atil);
    block.set_block(nb, 0, &atil.adjoint());
    let eigs = hermitian_eigenvalues(&block, real(1e-13));
    eigs.into_iter().filter(|e| *e > T::zero()).collect()
}

/// Generalized symmetric eigenvalues `K c = lambda M c` via complex
/// Cholesky on the real matrices.
fn generalized_symmetric_eigs<T: Real>(stiff: Vec<Vec<T>>, mass: Vec<Vec<T>>) -> Vec<T> {
    let nb = stiff.len();
    let mut mm = CMat::<T>::zeros(nb, nb);
    for i in 0..nb {
        for j in 0..nb {
            mm[(i, j)] = cr(mass[i][j]);
        }
    }
    let l = mm.cholesky().expect("mass matrix must be positive definite");
    // S = L^-1 K L^-T
    let mut k = CMat::<T>::zeros(nb, nb);
    for i in 0..nb {
        for j in 0..nb {
            k[(i, j)] = cr(stiff[i][j]);
        }
    }
    let mut m1 = CMat::<T>::zeros(nb, nb);
    for col in 0..nb {
        let b: Vec<_> = (0..nb).map(|r| k[(r, col)]).collect();
        let y = l.solve_lower(&b);
        for r in 0..nb {
            m1[(r, col)] = y[r];
        }
    }
    let mut m2 = m1.adjoint();
    for col in 0..nb {
        let b: Vec<_> = (0..nb).map(|r| m2[(r, col)]).collect();
        let y = l.solve_lower(&b);
        for r in 0..nb {
            m2[(r, col)] = y[r];
        }
    }
    let mut s = vec![vec![T::zero(); nb]; nb];
    for i in 0..nb {
        for j in 0..nb {
            s[i][j] = m2[(i, j)].re;
        }
    }
    symmetric_eigenvalues(s)
}
