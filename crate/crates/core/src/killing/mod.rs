//! Killing spinor fields on the model ambient spaces, their restriction to
//! immersed hypersurfaces, and the Rayleigh-quotient evaluations used by
//! the eigenvalue bounds.
//!
//! Each model space carries one fixed global trivialization with explicit
//! connection coefficients:
//!
//! * Euclidean space: the flat trivialization; parallel fields are constant
//!   and the connection vanishes.
//! * Sphere: the conformal trivialization over the stereographic chart
//!   (projection from the north pole). The fields obtained by restricting
//!   flat parallel spinors along the cone construction take the closed form
//!   `(1 + |y|^2)^(-1/2) (u + 2 alpha g(y) u)` there, and the connection is
//!   `X -> <X, y>/2 + g(X) g(y) / 2` in frame components.
//! * Hyperbolic space: the conformal trivialization of the upper half-space
//!   model, connection `E_k -> delta_kN / 2 + g_k g_N / 2`; the fields are
//!   `w^(-1/2) (u + sigma i g(x') b + w b)` with `g_N u = sigma i u`,
//!   `g_N b = -sigma i b` for Killing constant `sigma i / 2`.

use num_complex::Complex;

use crate::clifford::{irreducible_rep, CliffordRep};
use crate::error::{Error, Result};
use crate::geometry::{fundamental_forms, AmbientSpace, Immersion, QuadratureGrid};
use crate::linalg::{dot, hermitian_eigen, vec_norm, CMat};
use crate::scalar::{ci, cr, pairwise_sum, pairwise_sum_c, real, C, Real};

mod splitting;
#[cfg(test)]
mod tests;

pub use splitting::{dirac_splitting_check, splitting_pointwise_norms};

enum FieldKind<T: Real> {
    EuclideanParallel { spinor: Vec<C<T>> },
    SphereStereo { spinor: Vec<C<T>> },
    HalfSpace { u: Vec<C<T>>, b: Vec<C<T>> },
}

/// An evaluable Killing spinor field with Killing constant `alpha` on a
/// model ambient space.
pub struct KillingField<T: Real> {
    pub ambient: AmbientSpace,
    pub alpha: C<T>,
    pub basis_index: usize,
    rep: CliffordRep<T>,
    kind: FieldKind<T>,
}

impl<T: Real> KillingField<T> {
    /// Spinor fibre dimension of the trivialized bundle.
    pub fn spinor_dim(&self) -> usize {
        self.rep.spinor_dim()
    }

    /// Field value at an ambient model point.
    pub fn value(&self, x: &[T]) -> Vec<C<T>> {
        match &self.kind {
            FieldKind::EuclideanParallel { spinor } => spinor.clone(),
            FieldKind::SphereStereo { spinor } => {
                let (y, _) = stereographic(x);
                let y2: T = y.iter().map(|a| *a * *a).fold(T::zero(), |p, q| p + q);
                let f = T::one() / (T::one() + y2).sqrt();
                let two_alpha = self.alpha.re + self.alpha.re;
                let gy = self.rep.gamma(&y);
                let gu = gy.mul_vec(spinor);
                spinor
                    .iter()
                    .zip(&gu)
                    .map(|(s, g)| (s + g * cr(two_alpha)) * cr(f))
                    .collect()
            }
            FieldKind::HalfSpace { u, b } => {
                let nn = x.len();
                let w = x[nn - 1];
                let sigma = if self.alpha.im > T::zero() { T::one() } else { -T::one() };
                let mut horizontal = x.to_vec();
                horizontal[nn - 1] = T::zero();
                let gb = self.rep.gamma(&horizontal).mul_vec(b);
                let scale = cr(T::one() / w.sqrt());
                u.iter()
                    .zip(&gb)
                    .zip(b)
                    .map(|((ui, gi), bi)| (ui + gi * ci(sigma) + bi * cr(w)) * scale)
                    .collect()
            }
        }
    }

    /// Clifford multiplication by an ambient tangent vector `v` at `x`, as
    /// a matrix in the trivialization.
    pub fn clifford(&self, x: &[T], v: &[T]) -> CMat<T> {
        self.rep.gamma(&self.frame_components(x, v))
    }

    /// Connection coefficient matrix of the trivialization in direction `v`
    /// (an ambient tangent vector at `x`).
    pub fn connection(&self, x: &[T], v: &[T]) -> CMat<T> {
        let d = self.rep.spinor_dim();
        match &self.kind {
            FieldKind::EuclideanParallel { .. } => CMat::zeros(d, d),
            FieldKind::SphereStereo { .. } => {
                let (y, _) = stereographic(x);
                let vf = self.frame_components(x, v);
                let vy: T = vf.iter().zip(&y).map(|(a, b)| *a * *b).fold(T::zero(), |p, q| p + q);
                let half = real::<T>(0.5);
                let gv = self.rep.gamma(&vf);
                let gy = self.rep.gamma(&y);
                CMat::identity(d).scale(cr(vy * half)).add(&gv.mul(&gy).scale(cr(half)))
            }
            FieldKind::HalfSpace { .. } => {
                let nn = x.len();
                let vf = self.frame_components(x, v);
                let half = real::<T>(0.5);
                let mut e_n = vec![T::zero(); nn];
                e_n[nn - 1] = T::one();
                let gn = self.rep.gamma(&e_n);
                let gv = self.rep.gamma(&vf);
                CMat::identity(d)
                    .scale(cr(vf[nn - 1] * half))
                    .add(&gv.mul(&gn).scale(cr(half)))
            }
        }
    }

    /// Frame components of an ambient tangent vector in the trivialization.
    fn frame_components(&self, x: &[T], v: &[T]) -> Vec<T> {
        match &self.kind {
            FieldKind::EuclideanParallel { .. } => v.to_vec(),
            FieldKind::SphereStereo { .. } => {
                let (_, dy) = stereographic_with_jacobian(x, v);
                let conf = T::one() - x[x.len() - 1]; // e^phi = 1 - x_last
                dy.iter().map(|a| *a * conf).collect()
            }
            FieldKind::HalfSpace { .. } => {
                let w = x[x.len() - 1];
                v.iter().map(|a| *a / w).collect()
            }
        }
    }

    /// Moves from `x` in tangent direction `v` by parameter `t`, staying in
    /// the model.
    fn step(&self, x: &[T], v: &[T], t: T) -> Vec<T> {
        let mut out: Vec<T> = x.iter().zip(v).map(|(a, b)| *a + t * *b).collect();
        if matches!(self.ambient, AmbientSpace::Sphere(_)) {
            let n2: Vec<T> = out.iter().map(|a| *a * *a).collect();
            let norm = pairwise_sum(&n2).sqrt();
            for o in out.iter_mut() {
                *o /= norm;
            }
        }
        out
    }

    /// Orthonormal tangent directions at `x` (model metric).
    pub fn frame_directions(&self, x: &[T]) -> Vec<Vec<T>> {
        match self.ambient {
            AmbientSpace::Euclidean(nn) => (0..nn)
                .map(|k| {
                    let mut e = vec![T::zero(); nn];
                    e[k] = T::one();
                    e
                })
                .collect(),
            AmbientSpace::Hyperbolic(nn) => {
                let w = x[nn - 1];
                (0..nn)
                    .map(|k| {
                        let mut e = vec![T::zero(); nn];
                        e[k] = w;
                        e
                    })
                    .collect()
            }
            AmbientSpace::Sphere(nn) => {
                // complement of the radial direction
                let dim = nn + 1;
                let mut frame: Vec<Vec<T>> = Vec::new();
                let mut trial = 0usize;
                while frame.len() < nn && trial < dim {
                    let mut v = vec![T::zero(); dim];
                    v[trial] = T::one();
                    trial += 1;
                    let vx: T = v.iter().zip(x).map(|(a, b)| *a * *b).fold(T::zero(), |p, q| p + q);
                    for d in 0..dim {
                        v[d] -= vx * x[d];
                    }
                    for e in &frame {
                        let ve: T = v.iter().zip(e).map(|(a, b)| *a * *b).fold(T::zero(), |p, q| p + q);
                        for d in 0..dim {
                            v[d] -= ve * e[d];
                        }
                    }
                    let n2: Vec<T> = v.iter().map(|a| *a * *a).collect();
                    let norm = pairwise_sum(&n2).sqrt();
                    if norm > real::<T>(1e-8) {
                        for d in 0..dim {
                            v[d] /= norm;
                        }
                        frame.push(v);
                    }
                }
                frame
            }
            AmbientSpace::FlatTorus3 => unreachable!("no Killing fields on the metadata ambient"),
        }
    }
}

fn stereographic<T: Real>(x: &[T]) -> (Vec<T>, T) {
    let nn = x.len() - 1;
    let denom = T::one() - x[nn];
    let y: Vec<T> = (0..nn).map(|k| x[k] / denom).collect();
    (y, denom)
}

fn stereographic_with_jacobian<T: Real>(x: &[T], v: &[T]) -> (Vec<T>, Vec<T>) {
    let nn = x.len() - 1;
    let denom = T::one() - x[nn];
    let y: Vec<T> = (0..nn).map(|k| x[k] / denom).collect();
    let dy: Vec<T> = (0..nn)
        .map(|k| v[k] / denom + x[k] * v[nn] / (denom * denom))
        .collect();
    (y, dy)
}

/// Builds the full basis of Killing fields for a supported
/// `(ambient, alpha)` pair; the list has length `nu = 2^floor(N/2)`.
pub fn killing_basis<T: Real>(ambient: AmbientSpace, alpha: C<T>) -> Result<Vec<KillingField<T>>> {
    let nn = ambient.dim();
    let half = real::<T>(0.5);
    match ambient {
        AmbientSpace::Euclidean(_) => {
            if alpha.norm() != T::zero() {
                return Err(Error::Unsupported(format!(
                    "Euclidean space carries parallel spinors only (alpha = 0), got {alpha}"
                )));
            }
            let rep = irreducible_rep::<T>(nn, 0)?;
            let d = rep.spinor_dim();
            Ok((0..d)
                .map(|j| {
                    let mut spinor = vec![Complex::new(T::zero(), T::zero()); d];
                    spinor[j] = cr(T::one());
                    KillingField {
                        ambient,
                        alpha,
                        basis_index: j,
                        rep: rep.clone(),
                        kind: FieldKind::EuclideanParallel { spinor },
                    }
                })
                .collect())
        }
        AmbientSpace::Sphere(_) => {
            if alpha.im != T::zero() || alpha.re.abs() != half {
                return Err(Error::Unsupported(format!(
                    "sphere Killing constants are +-1/2, got {alpha}"
                )));
            }
            let rep = irreducible_rep::<T>(nn, 0)?;
            let d = rep.spinor_dim();
            Ok((0..d)
                .map(|j| {
                    let mut spinor = vec![Complex::new(T::zero(), T::zero()); d];
                    spinor[j] = cr(T::one());
                    KillingField {
                        ambient,
                        alpha,
                        basis_index: j,
                        rep: rep.clone(),
                        kind: FieldKind::SphereStereo { spinor },
                    }
                })
                .collect())
        }
        AmbientSpace::Hyperbolic(_) => {
            if alpha.re != T::zero() || alpha.im.abs() != half {
                return Err(Error::Unsupported(format!(
                    "hyperbolic Killing constants are +-i/2, got {alpha}"
                )));
            }
            let rep = irreducible_rep::<T>(nn, 0)?;
            let d = rep.spinor_dim();
            let sigma = if alpha.im > T::zero() { T::one() } else { -T::one() };
            // eigenbasis of -i g_N (Hermitian, eigenvalues +-1)
            let mut e_n = vec![T::zero(); nn];
            e_n[nn - 1] = T::one();
            let m = rep.gamma(&e_n).scale(ci(-T::one()));
            let (vals, vecs) = hermitian_eigen(&m, real(1e-13), true);
            let vecs = vecs.expect("eigenvectors");
            let mut plus: Vec<Vec<C<T>>> = Vec::new();
            let mut minus: Vec<Vec<C<T>>> = Vec::new();
            for (k, v) in vals.iter().enumerate() {
                let col: Vec<C<T>> = (0..d).map(|r| vecs[(r, k)]).collect();
                if *v > T::zero() {
                    plus.push(col);
                } else {
                    minus.push(col);
                }
            }
            // g_N u = sigma i u, g_N b = -sigma i b
            let (u_space, b_space) = if sigma > T::zero() { (plus, minus) } else { (minus, plus) };
            let zero = vec![Complex::new(T::zero(), T::zero()); d];
            let mut fields = Vec::with_capacity(d);
            for (j, u) in u_space.into_iter().enumerate() {
                fields.push(KillingField {
                    ambient,
                    alpha,
                    basis_index: j,
                    rep: rep.clone(),
                    kind: FieldKind::HalfSpace { u, b: zero.clone() },
                });
            }
            let offset = fields.len();
            for (j, b) in b_space.into_iter().enumerate() {
                fields.push(KillingField {
                    ambient,
                    alpha,
                    basis_index: offset + j,
                    rep: rep.clone(),
                    kind: FieldKind::HalfSpace { u: zero.clone(), b },
                });
            }
            Ok(fields)
        }
        AmbientSpace::FlatTorus3 => Err(Error::Unsupported(
            "the flat torus ambient is metadata only; its parallel spinors enter through the closed-form spectrum"
                .into(),
        )),
    }
}

/// Max over sample points and frame directions of the defect
/// `|central_difference + Gamma(X) psi - alpha g(X) psi|`, with step `h`.
pub fn killing_residual<T: Real>(field: &KillingField<T>, points: &[Vec<T>], h: T) -> Result<T> {
    let mut worst = T::zero();
    for x in points {
        if matches!(field.ambient, AmbientSpace::Hyperbolic(_)) {
            let w = x[x.len() - 1];
            if w <= h + h {
                return Err(Error::InvalidArgument(
                    "sample point too close to the half-space boundary for the step".into(),
                ));
            }
        }
        let psi = field.value(x);
        for v in field.frame_directions(x) {
            let xp = field.step(x, &v, h);
            let xm = field.step(x, &v, -h);
            let fp = field.value(&xp);
            let fm = field.value(&xm);
            let inv2h = cr(T::one() / (h + h));
            let gamma_psi = field.clifford(x, &v).mul_vec(&psi);
            let conn_psi = field.connection(x, &v).mul_vec(&psi);
            for i in 0..psi.len() {
                let cd = (fp[i] - fm[i]) * inv2h;
                let defect = cd + conn_psi[i] - field.alpha * gamma_psi[i];
                let a = defect.norm();
                if a > worst {
                    worst = a;
                }
            }
        }
    }
    Ok(worst)
}

/// Quadrature-node restriction of an ambient spinor field to an immersion:
/// field values, `g(H) psi` values and pointwise norms.
pub struct RestrictedSpinor<T: Real> {
    pub psi: Vec<Vec<C<T>>>,
    pub gamma_h_psi: Vec<Vec<C<T>>>,
    pub norm_sq: Vec<T>,
    pub h_norm: Vec<T>,
}

/// Samples the field over the grid nodes of `imm`.
pub fn restrict<T: Real>(
    field: &KillingField<T>,
    imm: &Immersion<T>,
    grid: &QuadratureGrid<T>,
) -> Result<RestrictedSpinor<T>> {
    grid.check_matches(imm)?;
    if field.ambient != imm.ambient {
        return Err(Error::InvalidArgument("field and immersion live in different ambient spaces".into()));
    }
    let mut psi = Vec::with_capacity(grid.len());
    let mut gamma_h_psi = Vec::with_capacity(grid.len());
    let mut norm_sq = Vec::with_capacity(grid.len());
    let mut h_norm = Vec::with_capacity(grid.len());
    for u in &grid.nodes {
        let s = fundamental_forms(imm, u)?;
        let x = &s.point;
        let p = field.value(x);
        let h_amb = s.mean_curvature_ambient();
        let gh = field.clifford(x, &h_amb).mul_vec(&p);
        norm_sq.push(vec_norm(&p) * vec_norm(&p));
        h_norm.push(s.mean_curvature_norm());
        psi.push(p);
        gamma_h_psi.push(gh);
    }
    Ok(RestrictedSpinor { psi, gamma_h_psi, norm_sq, h_norm })
}

/// Rayleigh quotient of the squared twisted Dirac operator on the
/// restriction of a Killing field, evaluated through the closed forms of
/// the defining equation (`D-hat psi = -n alpha psi`): for real `alpha`
/// the quotient is `n^2 alpha^2 + (n^2/4) int |H|^2 |psi|^2 / int |psi|^2`,
/// for imaginary `alpha` the cross term
/// `-n^2 alpha (psi, g(H) psi) / ||psi||^2` is added.
pub fn rayleigh_dtilde<T: Real>(
    field: &KillingField<T>,
    imm: &Immersion<T>,
    grid: &QuadratureGrid<T>,
) -> Result<T> {
    let r = restrict(field, imm, grid)?;
    let nf = real::<T>(imm.n as f64);
    let n2 = nf * nf;
    let quarter = real::<T>(0.25);

    let weights: Vec<T> = (0..grid.len()).map(|i| grid.weights[i] * grid.sqrt_det_g[i]).collect();
    let norm_terms: Vec<T> = (0..grid.len()).map(|i| weights[i] * r.norm_sq[i]).collect();
    let h2_terms: Vec<T> =
        (0..grid.len()).map(|i| weights[i] * r.h_norm[i] * r.h_norm[i] * r.norm_sq[i]).collect();
    let norm_l2 = pairwise_sum(&norm_terms);
    let h2_l2 = pairwise_sum(&h2_terms);

    if field.alpha.im == T::zero() {
        let a = field.alpha.re;
        Ok(n2 * a * a + n2 * quarter * h2_l2 / norm_l2)
    } else {
        // cross term (psi, g(H) psi)_{L^2}
        let cross_terms: Vec<C<T>> = (0..grid.len())
            .map(|i| dot(&r.psi[i], &r.gamma_h_psi[i]) * cr(weights[i]))
            .collect();
        let cross = pairwise_sum_c(&cross_terms);
        let alpha_cross = (field.alpha * cross).re;
        let a2 = field.alpha.norm_sqr();
        Ok(n2 * a2 - n2 * alpha_cross / norm_l2 + n2 * quarter * h2_l2 / norm_l2)
    }
}

/// Both sides of the imaginary-constant cross-term estimate: the left side
/// `|alpha (psi, g(H) psi)|`, the `beta`-dependent right side
/// `(||psi||^2 / 2)(beta^2 |alpha|^2 + beta^-2 ||H||_inf^2)` and its
/// optimized value `||psi||^2 |alpha| ||H||_inf`.
pub struct CrossTermBound<T> {
    pub lhs: T,
    pub rhs: T,
    pub rhs_optimized: T,
    pub h_inf: T,
}

pub fn imaginary_cross_term_bound<T: Real>(
    field: &KillingField<T>,
    imm: &Immersion<T>,
    grid: &QuadratureGrid<T>,
    beta: T,
) -> Result<CrossTermBound<T>> {
    if field.alpha.re != T::zero() {
        return Err(Error::InvalidArgument("cross-term bound needs a purely imaginary constant".into()));
    }
    if beta <= T::zero() {
        return Err(Error::InvalidArgument("beta must be positive".into()));
    }
    let r = restrict(field, imm, grid)?;
    let weights: Vec<T> = (0..grid.len()).map(|i| grid.weights[i] * grid.sqrt_det_g[i]).collect();
    let cross_terms: Vec<C<T>> = (0..grid.len())
        .map(|i| dot(&r.psi[i], &r.gamma_h_psi[i]) * cr(weights[i]))
        .collect();
    let lhs = (field.alpha * pairwise_sum_c(&cross_terms)).norm();
    let norm_terms: Vec<T> = (0..grid.len()).map(|i| weights[i] * r.norm_sq[i]).collect();
    let norm_l2 = pairwise_sum(&norm_terms);
    let h_inf = r.h_norm.iter().fold(T::zero(), |a, b| a.max(*b));
    let aa = field.alpha.norm();
    let half = real::<T>(0.5);
    let rhs = norm_l2 * half * (beta * beta * aa * aa + h_inf * h_inf / (beta * beta));
    let rhs_optimized = norm_l2 * aa * h_inf;
    Ok(CrossTermBound { lhs, rhs, rhs_optimized, h_inf })
}

/// Gram-matrix condition number of a field list sampled at the given
/// points (pointwise linear independence check).
pub fn basis_gram_condition<T: Real>(fields: &[KillingField<T>], points: &[Vec<T>]) -> T {
    let k = fields.len();
    let mut gram = CMat::<T>::zeros(k, k);
    for x in points {
        let vals: Vec<Vec<C<T>>> = fields.iter().map(|f| f.value(x)).collect();
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] = gram[(i, j)] + dot(&vals[i], &vals[j]);
            }
        }
    }
    crate::linalg::gram_condition(&gram)
}
