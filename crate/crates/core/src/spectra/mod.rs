//! Dirac and Laplace-Beltrami spectra: closed forms for the model
//! hypersurfaces and discretized intrinsic operators for plane curves and
//! surfaces of revolution.

mod curve;
mod revolution;
mod spin;

pub use curve::curve_dirac;
pub use revolution::{laplace_spectrum_revolution, revolution_dirac};
pub use spin::{induced_spin_structure, BoundaryCondition, SpinStructureLabel};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, CMat};
use crate::scalar::{real, Real};

/// Which operator a spectrum belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Dirac,
    Laplace,
}

/// Where a spectrum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumSource {
    ClosedForm,
    Discretized { n: usize, modes: usize },
}

/// Sorted eigenvalue/multiplicity list with a completeness window: the list
/// holds every eigenvalue with `|lambda| <= window` (Dirac) or
/// `lambda <= window` (Laplace), counted with multiplicity.
#[derive(Clone, Debug)]
pub struct Spectrum<T: Real> {
    entries: Vec<(T, usize)>,
    pub operator: OperatorKind,
    pub window: T,
    pub source: SpectrumSource,
}

impl<T: Real> Spectrum<T> {
    /// Builds a Dirac spectrum: entries are sorted by increasing `|lambda|`
    /// with the negative member of a `+-` pair listed first; duplicates
    /// within `1e-12 * max(1, |lambda|)` merge.
    pub fn dirac(values: Vec<(T, usize)>, window: T, source: SpectrumSource) -> Self {
        let entries = normalize(values, true);
        Spectrum { entries, operator: OperatorKind::Dirac, window, source }
    }

    /// Builds a Laplace spectrum: nonnegative entries sorted ascending.
    pub fn laplace(values: Vec<(T, usize)>, window: T, source: SpectrumSource) -> Self {
        let entries = normalize(values, false);
        Spectrum { entries, operator: OperatorKind::Laplace, window, source }
    }

    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    /// First `count` eigenvalues expanded with multiplicity, in spectral order.
    pub fn leading(&self, count: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(count);
        for &(v, m) in &self.entries {
            for _ in 0..m {
                if out.len() == count {
                    return out;
                }
                out.push(v);
            }
        }
        out
    }

    /// Total multiplicity stored.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Multiplicity of the eigenvalue 0 (within `tol`).
    pub fn kernel_multiplicity(&self, tol: T) -> usize {
        self.entries
            .iter()
            .filter(|(v, _)| v.abs() <= tol)
            .map(|(_, m)| m)
            .sum()
    }

    /// Smallest `|lambda|` present.
    pub fn smallest_abs(&self) -> Option<T> {
        self.entries.iter().map(|(v, _)| v.abs()).fold(None, |acc: Option<T>, x| match acc {
            None => Some(x),
            Some(a) => Some(if x < a { x } else { a }),
        })
    }

    /// Number of eigenvalues (with multiplicity) whose squared value is at
    /// most `c`.
    pub fn count_squared_below(&self, c: T) -> usize {
        self.entries.iter().filter(|(v, _)| *v * *v <= c).map(|(_, m)| m).sum()
    }

    /// Number of eigenvalues (with multiplicity) with `|lambda| <= c`.
    pub fn count_abs_below(&self, c: T) -> usize {
        self.entries.iter().filter(|(v, _)| v.abs() <= c).map(|(_, m)| m).sum()
    }

    /// CSV rendering with columns `index,lambda,mult`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,lambda,mult\n");
        for (i, (v, m)) in self.entries.iter().enumerate() {
            out.push_str(&format!("{},{:e},{}\n", i, v, m));
        }
        out
    }
}

fn normalize<T: Real>(mut values: Vec<(T, usize)>, dirac_order: bool) -> Vec<(T, usize)> {
    if dirac_order {
        values.sort_by(|a, b| {
            let ka = (a.0.abs(), a.0);
            let kb = (b.0.abs(), b.0);
            ka.partial_cmp(&kb).unwrap()
        });
    } else {
        values.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }
    let mut out: Vec<(T, usize)> = Vec::with_capacity(values.len());
    for (v, m) in values {
        if m == 0 {
            continue;
        }
        if let Some(last) = out.last_mut() {
            let tol = real::<T>(1e-12) * T::one().max(v.abs());
            if (last.0 - v).abs() <= tol {
                last.1 += m;
                continue;
            }
        }
        out.push((v, m));
    }
    out
}

/// Model hypersurfaces with exactly known Dirac spectra.
#[derive(Clone, Debug)]
pub enum DiracModel<T> {
    /// Circle of given length; `antiperiodic` is the induced-from-the-disk
    /// (nontrivial holonomy) structure.
    Circle { length: T, antiperiodic: bool },
    /// Round sphere `S^n` of radius `rho`.
    RoundSphere { n: usize, radius: T },
    /// Flat torus `R^2 / lattice` with spin structure offsets per
    /// generator (true = antiperiodic).
    FlatTorus { lattice: [[T; 2]; 2], label: [bool; 2] },
    /// Geodesic sphere of radius `r` in hyperbolic `(n+1)`-space:
    /// intrinsically the round sphere of radius `sinh r`.
    GeodesicSphereHyperbolic { n: usize, r: T },
}

/// Complete closed-form Dirac spectrum up to `window`.
pub fn model_dirac_spectrum<T: Real>(model: &DiracModel<T>, window: T) -> Result<Spectrum<T>> {
    if window <= T::zero() {
        return Err(Error::InvalidArgument("window must be positive".into()));
    }
    let two_pi = real::<T>(std::f64::consts::TAU);
    let values = match model {
        DiracModel::Circle { length, antiperiodic } => {
            let base = two_pi / *length;
            let delta = if *antiperiodic { real::<T>(0.5) } else { T::zero() };
            let mut vals = Vec::new();
            let kmax = (window / base).to_f64().unwrap_or(0.0).ceil() as i64 + 2;
            for k in -kmax..=kmax {
                let lam = base * (real::<T>(k as f64) + delta);
                if lam.abs() <= window {
                    vals.push((lam, 1));
                }
            }
            vals
        }
        DiracModel::RoundSphere { n, radius } => round_sphere_dirac(*n, *radius, window),
        DiracModel::GeodesicSphereHyperbolic { n, r } => round_sphere_dirac(*n, r.sinh(), window),
        DiracModel::FlatTorus { lattice, label } => {
            let det = lattice[0][0] * lattice[1][1] - lattice[0][1] * lattice[1][0];
            if det.abs() < real::<T>(1e-14) {
                return Err(Error::InvalidArgument("degenerate lattice".into()));
            }
            // rows of the inverse-transpose are the dual basis
            let dual = [
                [lattice[1][1] / det, -lattice[1][0] / det],
                [-lattice[0][1] / det, lattice[0][0] / det],
            ];
            let delta = [
                if label[0] { real::<T>(0.5) } else { T::zero() },
                if label[1] { real::<T>(0.5) } else { T::zero() },
            ];
            let radius = window / two_pi;
            let len_v = |v: &[T; 2]| (v[0] * v[0] + v[1] * v[1]).sqrt();
            let shift_len = len_v(&[
                delta[0] * dual[0][0] + delta[1] * dual[1][0],
                delta[0] * dual[0][1] + delta[1] * dual[1][1],
            ]);
            let m1max = ((radius + shift_len) * len_v(&lattice[0])).to_f64().unwrap_or(0.0).ceil() as i64 + 1;
            let m2max = ((radius + shift_len) * len_v(&lattice[1])).to_f64().unwrap_or(0.0).ceil() as i64 + 1;
            let mut vals = Vec::new();
            for m1 in -m1max..=m1max {
                for m2 in -m2max..=m2max {
                    let c1 = real::<T>(m1 as f64) + delta[0];
                    let c2 = real::<T>(m2 as f64) + delta[1];
                    let b = [
                        c1 * dual[0][0] + c2 * dual[1][0],
                        c1 * dual[0][1] + c2 * dual[1][1],
                    ];
                    let lam = two_pi * len_v(&b);
                    if lam > window {
                        continue;
                    }
                    if lam == T::zero() {
                        vals.push((T::zero(), 2));
                    } else {
                        vals.push((lam, 1));
                        vals.push((-lam, 1));
                    }
                }
            }
            vals
        }
    };
    Ok(Spectrum::dirac(values, window, SpectrumSource::ClosedForm))
}

fn round_sphere_dirac<T: Real>(n: usize, radius: T, window: T) -> Vec<(T, usize)> {
    // +-(1/rho)(n/2 + k) with multiplicity 2^floor(n/2) * C(k + n - 1, k)
    let mut vals = Vec::new();
    let base = T::one() / radius;
    let half_n = real::<T>(n as f64 / 2.0);
    let spin_dim = 1usize << (n / 2);
    let mut k = 0usize;
    loop {
        let lam = base * (half_n + real::<T>(k as f64));
        if lam > window {
            break;
        }
        let mult = spin_dim * binomial(k + n - 1, k);
        vals.push((lam, mult));
        vals.push((-lam, mult));
        k += 1;
        if k > 10_000 {
            break;
        }
    }
    vals
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Model manifolds with exactly known Laplace-Beltrami spectra.
#[derive(Clone, Debug)]
pub enum LaplaceModel<T> {
    Circle { length: T },
    RoundSphere { n: usize, radius: T },
    GeodesicSphereHyperbolic { n: usize, r: T },
    FlatTorus { lattice: [[T; 2]; 2] },
}

/// Complete closed-form Laplace spectrum up to `window`.
pub fn model_laplace_spectrum<T: Real>(model: &LaplaceModel<T>, window: T) -> Result<Spectrum<T>> {
    if window <= T::zero() {
        return Err(Error::InvalidArgument("window must be positive".into()));
    }
    let two_pi = real::<T>(std::f64::consts::TAU);
    let values = match model {
        LaplaceModel::Circle { length } => {
            let base = two_pi / *length;
            let mut vals = vec![(T::zero(), 1)];
            let mut k = 1usize;
            loop {
                let lam = base * real::<T>(k as f64);
                let ev = lam * lam;
                if ev > window {
                    break;
                }
                vals.push((ev, 2));
                k += 1;
            }
            vals
        }
        LaplaceModel::RoundSphere { n, radius } => round_sphere_laplace(*n, *radius, window),
        LaplaceModel::GeodesicSphereHyperbolic { n, r } => round_sphere_laplace(*n, r.sinh(), window),
        LaplaceModel::FlatTorus { lattice } => {
            let det = lattice[0][0] * lattice[1][1] - lattice[0][1] * lattice[1][0];
            let dual = [
                [lattice[1][1] / det, -lattice[1][0] / det],
                [-lattice[0][1] / det, lattice[0][0] / det],
            ];
            let len_v = |v: &[T; 2]| (v[0] * v[0] + v[1] * v[1]).sqrt();
            let radius = (window.sqrt() / two_pi + T::one()).to_f64().unwrap_or(0.0);
            let m1max = (radius * len_v(&lattice[0]).to_f64().unwrap_or(1.0)).ceil() as i64 + 1;
            let m2max = (radius * len_v(&lattice[1]).to_f64().unwrap_or(1.0)).ceil() as i64 + 1;
            let mut vals = Vec::new();
            for m1 in -m1max..=m1max {
                for m2 in -m2max..=m2max {
                    let c1 = real::<T>(m1 as f64);
                    let c2 = real::<T>(m2 as f64);
                    let b = [
                        c1 * dual[0][0] + c2 * dual[1][0],
                        c1 * dual[0][1] + c2 * dual[1][1],
                    ];
                    let ev = two_pi * two_pi * (b[0] * b[0] + b[1] * b[1]);
                    if ev <= window {
                        vals.push((ev, 1));
                    }
                }
            }
            vals
        }
    };
    Ok(Spectrum::laplace(values, window, SpectrumSource::ClosedForm))
}

fn round_sphere_laplace<T: Real>(n: usize, radius: T, window: T) -> Vec<(T, usize)> {
    // k (k + n - 1) / rho^2 with the spherical-harmonic multiplicities
    let mut vals = Vec::new();
    let rho2 = radius * radius;
    let nf = n as f64;
    let mut k = 0usize;
    loop {
        let ev = real::<T>(k as f64 * (k as f64 + nf - 1.0)) / rho2;
        if ev > window {
            break;
        }
        vals.push((ev, if k == 0 { 1 } else { laplace_mult(n, k) }));
        k += 1;
        if k > 100_000 {
            break;
        }
    }
    vals
}

fn laplace_mult(n: usize, k: usize) -> usize {
    // dim of degree-k spherical harmonics on S^n:
    // C(n + k, k) - C(n + k - 2, k - 2)
    let c1 = binomial(n + k, k);
    let c2 = if k >= 2 { binomial(n + k - 2, k - 2) } else { 0 };
    c1 - c2
}

/// Hermitian matrix with grid metadata, as assembled by the discretized
/// operators.
#[derive(Clone, Debug)]
pub struct DiscreteOperator<T: Real> {
    pub matrix: CMat<T>,
    pub grid_n: usize,
    /// Angular mode offset when the operator is one block of a Fourier
    /// decomposition.
    pub mode: Option<T>,
}

impl<T: Real> DiscreteOperator<T> {
    pub fn hermitian_residual(&self) -> T {
        self.matrix.hermitian_residual()
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations
/// (deterministic; off-diagonal norm driven below `1e-12 * ||A||`).
pub fn hermitian_eigs<T: Real>(matrix: &CMat<T>) -> Result<Vec<T>> {
    hermitian_eigs_check(matrix)?;
    Ok(crate::linalg::hermitian_eigenvalues(matrix, real(1e-12)))
}

/// As [`hermitian_eigs`], also returning the unitary eigenvector matrix.
pub fn hermitian_eigs_with_vectors<T: Real>(matrix: &CMat<T>) -> Result<(Vec<T>, CMat<T>)> {
    hermitian_eigs_check(matrix)?;
    let (vals, vecs) = hermitian_eigen(matrix, real(1e-12), true);
    Ok((vals, vecs.expect("vectors requested")))
}

fn hermitian_eigs_check<T: Real>(matrix: &CMat<T>) -> Result<()> {
    if !matrix.is_square() {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    let scale = T::one().max(matrix.max_abs());
    if matrix.hermitian_residual() > real::<T>(1e-10) * scale {
        return Err(Error::InvalidArgument("matrix is not Hermitian to 1e-10".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
