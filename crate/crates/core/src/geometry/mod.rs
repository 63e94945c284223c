//! Closed immersed submanifolds of the model ambient spaces with first and
//! second fundamental forms, mean curvature, quadrature integrals and
//! extrinsic radius.

mod catalog;
mod quadrature;

pub use catalog::{catalog, catalog_names};
pub use quadrature::{build_grid, gauss_legendre, integrate, integrate_values, QuadratureGrid};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::symmetric_eigenvalues;
use crate::scalar::{pairwise_sum, real, Real};

/// Ambient model space. Spheres are realised as the unit sphere in
/// `R^(N+1)`, hyperbolic space as the upper half-space with metric
/// `dx^2 / x_N^2`. The flat 3-torus is metadata for the one non-model
/// catalog entry that needs it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbientSpace {
    Euclidean(usize),
    Sphere(usize),
    Hyperbolic(usize),
    FlatTorus3,
}

impl AmbientSpace {
    /// Dimension of the ambient manifold.
    pub fn dim(&self) -> usize {
        match self {
            AmbientSpace::Euclidean(n) | AmbientSpace::Sphere(n) | AmbientSpace::Hyperbolic(n) => *n,
            AmbientSpace::FlatTorus3 => 3,
        }
    }

    /// Number of coordinates of the chart codomain.
    pub fn coord_dim(&self) -> usize {
        match self {
            AmbientSpace::Euclidean(n) => *n,
            AmbientSpace::Sphere(n) => *n + 1,
            AmbientSpace::Hyperbolic(n) => *n,
            AmbientSpace::FlatTorus3 => 3,
        }
    }

    /// Constant sectional curvature of the model.
    pub fn curvature(&self) -> f64 {
        match self {
            AmbientSpace::Euclidean(_) | AmbientSpace::FlatTorus3 => 0.0,
            AmbientSpace::Sphere(_) => 1.0,
            AmbientSpace::Hyperbolic(_) => -1.0,
        }
    }

    pub fn label(&self) -> String {
        match self {
            AmbientSpace::Euclidean(n) => format!("euclidean({n})"),
            AmbientSpace::Sphere(n) => format!("sphere({n})"),
            AmbientSpace::Hyperbolic(n) => format!("hyperbolic({n})"),
            AmbientSpace::FlatTorus3 => "flat-torus(3)".into(),
        }
    }

    /// Geodesic distance between two points of the model.
    pub fn distance<T: Real>(&self, p: &[T], q: &[T]) -> T {
        match self {
            AmbientSpace::Euclidean(_) => {
                let s: Vec<T> = p.iter().zip(q).map(|(a, b)| (*a - *b) * (*a - *b)).collect();
                pairwise_sum(&s).sqrt()
            }
            AmbientSpace::Sphere(_) => {
                let dotv: Vec<T> = p.iter().zip(q).map(|(a, b)| *a * *b).collect();
                let c = pairwise_sum(&dotv).min(T::one()).max(-T::one());
                c.acos()
            }
            AmbientSpace::Hyperbolic(_) => {
                let n = p.len();
                let mut d2 = T::zero();
                for i in 0..n {
                    d2 += (p[i] - q[i]) * (p[i] - q[i]);
                }
                let arg = T::one() + d2 / (real::<T>(2.0) * p[n - 1] * q[n - 1]);
                (arg + (arg * arg - T::one()).sqrt()).ln()
            }
            AmbientSpace::FlatTorus3 => {
                let mut d2 = T::zero();
                for i in 0..3 {
                    let mut best = T::infinity();
                    for k in [-1.0f64, 0.0, 1.0] {
                        let d = (p[i] - q[i] + real::<T>(k)).abs();
                        if d < best {
                            best = d;
                        }
                    }
                    d2 += best * best;
                }
                d2.sqrt()
            }
        }
    }
}

/// One direction of a product domain.
#[derive(Clone, Copy, Debug)]
pub struct DomainInterval<T> {
    pub lo: T,
    pub hi: T,
    pub periodic: bool,
}

/// Chart with closed-form first and second derivatives.
pub trait Chart<T>: Send + Sync {
    fn value(&self, u: &[T]) -> Vec<T>;
    /// `jacobian(u)[a]` is the tangent vector `d x / d u_a`.
    fn jacobian(&self, u: &[T]) -> Vec<Vec<T>>;
    /// `hessian(u)[a][b]` is `d^2 x / (d u_a d u_b)`.
    fn hessian(&self, u: &[T]) -> Vec<Vec<Vec<T>>>;
}

/// Rotationally symmetric structure of a Euclidean surface of revolution,
/// consumed by the mode-decomposed intrinsic operators.
#[derive(Clone)]
pub enum RevolutionProfile<T> {
    /// Profile runs pole to pole over `(0, pi)`; the radius vanishes
    /// linearly at both ends.
    SphereLike {
        /// `f(t) / sin t`, smooth and positive on `[0, pi]`.
        radius_over_sin: Arc<dyn Fn(T) -> T + Send + Sync>,
        /// Profile speed `|d(profile)/dt|`.
        speed: Arc<dyn Fn(T) -> T + Send + Sync>,
    },
    /// Closed profile curve; radius given as a function of arclength.
    TorusLike {
        arclength_period: T,
        radius_of_arclength: Arc<dyn Fn(T) -> T + Send + Sync>,
    },
}

/// A parametrized closed submanifold of a model ambient space.
#[derive(Clone)]
pub struct Immersion<T: Real> {
    pub name: String,
    pub params: Vec<(String, f64)>,
    pub ambient: AmbientSpace,
    /// Intrinsic dimension.
    pub n: usize,
    pub domain: Vec<DomainInterval<T>>,
    pub chart: Arc<dyn Chart<T>>,
    /// Genus, for surfaces.
    pub genus: Option<u32>,
    /// Whether the submanifold bounds a relatively compact region of its
    /// ambient space.
    pub bounds_region: bool,
    /// Set for Euclidean surfaces of revolution.
    pub revolution: Option<RevolutionProfile<T>>,
}

impl<T: Real> std::fmt::Debug for Immersion<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Immersion({}, n={}, ambient={})", self.name, self.n, self.ambient.label())
    }
}

impl<T: Real> Immersion<T> {
    /// Codimension in the ambient manifold.
    pub fn codim(&self) -> usize {
        self.ambient.dim() - self.n
    }

    /// Named parameter lookup.
    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

/// Pointwise geometric data: orthonormal frames, metric, second fundamental
/// form and mean curvature vector.
#[derive(Clone, Debug)]
pub struct GeomSample<T: Real> {
    pub point: Vec<T>,
    /// Orthonormal tangent frame (ambient coordinates).
    pub tangent_frame: Vec<Vec<T>>,
    /// Orthonormal normal frame (ambient coordinates).
    pub normal_frame: Vec<Vec<T>>,
    /// First fundamental form in the chart basis.
    pub metric: Vec<Vec<T>>,
    pub det_g: T,
    /// `second_form[i][j][k] = <II(X_i, X_j), Y_k>` in the orthonormal frames.
    pub second_form: Vec<Vec<Vec<T>>>,
    /// Mean curvature vector in normal-frame components.
    pub mean_curvature: Vec<T>,
}

impl<T: Real> GeomSample<T> {
    /// Norm of the mean curvature vector (ambient model metric).
    pub fn mean_curvature_norm(&self) -> T {
        let s: Vec<T> = self.mean_curvature.iter().map(|h| *h * *h).collect();
        pairwise_sum(&s).sqrt()
    }

    /// Mean curvature vector in ambient coordinates.
    pub fn mean_curvature_ambient(&self) -> Vec<T> {
        let dim = self.point.len();
        let mut out = vec![T::zero(); dim];
        for (hk, yk) in self.mean_curvature.iter().zip(&self.normal_frame) {
            for c in 0..dim {
                out[c] += *hk * yk[c];
            }
        }
        out
    }

    /// Pointwise Frobenius norm of the second fundamental form.
    pub fn second_form_frobenius(&self) -> T {
        let mut s = T::zero();
        for row in &self.second_form {
            for col in row {
                for v in col {
                    s += *v * *v;
                }
            }
        }
        s.sqrt()
    }

    /// Principal curvatures (hypersurfaces only: shape operator spectrum).
    pub fn principal_curvatures(&self) -> Vec<T> {
        assert_eq!(self.normal_frame.len(), 1, "principal curvatures need codimension 1");
        let n = self.tangent_frame.len();
        let mut shape = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                shape[i][j] = self.second_form[i][j][0];
            }
        }
        symmetric_eigenvalues(shape)
    }

    /// Scalar curvature from the Gauss equation with constant-curvature
    /// ambient; taken as 0 for curves.
    pub fn scalar_curvature(&self, ambient_curvature: T) -> T {
        let n = self.tangent_frame.len();
        if n < 2 {
            return T::zero();
        }
        let nf = real::<T>(n as f64);
        let h2: Vec<T> = self.mean_curvature.iter().map(|h| *h * *h).collect();
        let hh = pairwise_sum(&h2);
        let ii = self.second_form_frobenius();
        nf * (nf - T::one()) * ambient_curvature + nf * nf * hh - ii * ii
    }
}

fn model_inner<T: Real>(ambient: &AmbientSpace, at: &[T], u: &[T], v: &[T]) -> T {
    let mut s = T::zero();
    for (a, b) in u.iter().zip(v) {
        s += *a * *b;
    }
    match ambient {
        AmbientSpace::Hyperbolic(_) => {
            let w = at[at.len() - 1];
            s / (w * w)
        }
        _ => s,
    }
}

/// Evaluates point, frames, metric, second fundamental form and mean
/// curvature at a domain point.
pub fn fundamental_forms<T: Real>(imm: &Immersion<T>, u: &[T]) -> Result<GeomSample<T>> {
    if u.len() != imm.n {
        return Err(Error::InvalidArgument("domain point has wrong dimension".into()));
    }
    let x = imm.chart.value(u);
    let jac = imm.chart.jacobian(u);
    let hess = imm.chart.hessian(u);
    let n = imm.n;
    let dim = x.len();
    let m = imm.ambient.dim() - n;

    // first fundamental form
    let mut g = vec![vec![T::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            g[a][b] = model_inner(&imm.ambient, &x, &jac[a], &jac[b]);
        }
    }
    let det_g = match n {
        1 => g[0][0],
        2 => g[0][0] * g[1][1] - g[0][1] * g[1][0],
        _ => {
            let eigs = symmetric_eigenvalues(g.clone());
            eigs.iter().fold(T::one(), |p, &e| p * e)
        }
    };
    let min_eig = match n {
        1 => g[0][0],
        _ => symmetric_eigenvalues(g.clone())[0],
    };
    if min_eig <= real::<T>(1e-10) {
        return Err(Error::Degenerate(format!(
            "singular metric at chart point {:?}",
            u.iter().map(|t| t.to_f64().unwrap_or(f64::NAN)).collect::<Vec<_>>()
        )));
    }

    // orthonormal tangent frame by Gram-Schmidt in the model metric;
    // coeffs[i][a]: X_i = sum_a coeffs[i][a] t_a
    let mut frame: Vec<Vec<T>> = Vec::with_capacity(n);
    let mut coeffs: Vec<Vec<T>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut v = jac[a].clone();
        let mut c = vec![T::zero(); n];
        c[a] = T::one();
        for (i, e) in frame.iter().enumerate() {
            let proj = model_inner(&imm.ambient, &x, &v, e);
            for d in 0..dim {
                v[d] -= proj * e[d];
            }
            for b in 0..n {
                c[b] -= proj * coeffs[i][b];
            }
        }
        let norm = model_inner(&imm.ambient, &x, &v, &v).sqrt();
        for d in 0..dim {
            v[d] /= norm;
        }
        for b in 0..n {
            c[b] /= norm;
        }
        frame.push(v);
        coeffs.push(c);
    }

    // normal frame: complement of the tangent span (and of the radial
    // direction for the sphere model), orthonormal in the model metric
    let mut normal: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut forbidden: Vec<Vec<T>> = frame.clone();
    if matches!(imm.ambient, AmbientSpace::Sphere(_)) {
        forbidden.push(x.clone());
    }
    let mut trial = 0usize;
    while normal.len() < m && trial < dim {
        let mut v = vec![T::zero(); dim];
        v[trial] = T::one();
        trial += 1;
        for e in forbidden.iter().chain(normal.iter()) {
            let proj = model_inner(&imm.ambient, &x, &v, e) / model_inner(&imm.ambient, &x, e, e);
            for d in 0..dim {
                v[d] -= proj * e[d];
            }
        }
        let norm2 = model_inner(&imm.ambient, &x, &v, &v);
        if norm2 > real::<T>(1e-12) {
            let norm = norm2.sqrt();
            for d in 0..dim {
                v[d] /= norm;
            }
            normal.push(v);
        }
    }
    if normal.len() != m {
        return Err(Error::Degenerate("failed to build a normal frame".into()));
    }

    // covariant chart hessian in the ambient model
    let mut cov_hess = hess;
    match imm.ambient {
        AmbientSpace::Euclidean(_) | AmbientSpace::FlatTorus3 | AmbientSpace::Sphere(_) => {
            // spherical correction is radial and dies under the normal
            // projection below
        }
        AmbientSpace::Hyperbolic(nn) => {
            let w = x[nn - 1];
            for a in 0..n {
                for b in 0..n {
                    let ta = &jac[a];
                    let tb = &jac[b];
                    let mut dotano = T::zero();
                    for d in 0..nn {
                        dotano += ta[d] * tb[d];
                    }
                    for k in 0..nn {
                        let mut gam = -ta[nn - 1] * tb[k] - tb[nn - 1] * ta[k];
                        if k == nn - 1 {
                            gam += dotano;
                        }
                        cov_hess[a][b][k] += gam / w;
                    }
                }
            }
        }
    }

    // second fundamental form in the chart basis, projected onto the
    // normal frame, then transformed to the orthonormal tangent frame
    let mut ii_chart = vec![vec![vec![T::zero(); m]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for (k, y) in normal.iter().enumerate() {
                ii_chart[a][b][k] = model_inner(&imm.ambient, &x, &cov_hess[a][b], y);
            }
        }
    }
    let mut second_form = vec![vec![vec![T::zero(); m]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                let mut s = T::zero();
                for a in 0..n {
                    for b in 0..n {
                        s += coeffs[i][a] * coeffs[j][b] * ii_chart[a][b][k];
                    }
                }
                second_form[i][j][k] = s;
            }
        }
    }

    let nf = real::<T>(n as f64);
    let mut mean = vec![T::zero(); m];
    for k in 0..m {
        let mut s = T::zero();
        for i in 0..n {
            s += second_form[i][i][k];
        }
        mean[k] = s / nf;
    }

    Ok(GeomSample {
        point: x,
        tangent_frame: frame,
        normal_frame: normal,
        metric: g,
        det_g,
        second_form,
        mean_curvature: mean,
    })
}

/// Certified upper bound for the extrinsic radius, together with the
/// center realising it.
#[derive(Clone, Debug)]
pub struct ExtrinsicRadius<T> {
    pub value: T,
    pub center: Vec<T>,
    /// Set when the center search failed to improve on the centroid.
    pub warned: bool,
}

/// Smallest enclosing-ball radius over searched centers: iteratively moves
/// a candidate center toward the farthest sample. Any candidate certifies
/// an upper bound; the best one is returned.
pub fn extrinsic_radius<T: Real>(imm: &Immersion<T>, grid: &QuadratureGrid<T>) -> Result<ExtrinsicRadius<T>> {
    grid.check_matches(imm)?;
    let points: Vec<Vec<T>> = grid.nodes.iter().map(|u| imm.chart.value(u)).collect();
    // subsample for the iteration, final certification on all points
    let stride = (points.len() / 400).max(1);
    let sub: Vec<&Vec<T>> = points.iter().step_by(stride).collect();
    let dim = points[0].len();

    // area-weighted centroid (exactly central for symmetric charts)
    let centroid = |pts: &[Vec<T>]| -> Vec<T> {
        let mut c = vec![T::zero(); dim];
        let mut total = T::zero();
        for (i, p) in pts.iter().enumerate() {
            let w = grid.weights[i] * grid.sqrt_det_g[i];
            for d in 0..dim {
                c[d] += w * p[d];
            }
            total += w;
        }
        for d in 0..dim {
            c[d] /= total;
        }
        c
    };

    let project = |c: &mut Vec<T>| match imm.ambient {
        AmbientSpace::Sphere(_) => {
            let n2: Vec<T> = c.iter().map(|x| *x * *x).collect();
            let norm = pairwise_sum(&n2).sqrt();
            for x in c.iter_mut() {
                *x /= norm;
            }
        }
        AmbientSpace::Hyperbolic(_) => {
            let last = c.len() - 1;
            if c[last] < real::<T>(1e-8) {
                c[last] = real::<T>(1e-8);
            }
        }
        _ => {}
    };

    let max_dist = |c: &[T], pts: &[&Vec<T>]| -> (T, usize) {
        let mut best = (T::neg_infinity(), 0usize);
        for (i, p) in pts.iter().enumerate() {
            let d = imm.ambient.distance(c, p);
            if d > best.0 {
                best = (d, i);
            }
        }
        best
    };

    let mut center = centroid(&points);
    project(&mut center);
    let centroid_bound = max_dist(&center, &sub).0;

    // farthest-point iteration (1-center core-set style); the distance to
    // the farthest sample is the current objective, so the best candidate
    // can be tracked for free at every step
    let mut best_center = center.clone();
    let mut best_val = centroid_bound;
    let mut c = center;
    for k in 0..20_000usize {
        let (val, far) = max_dist(&c, &sub);
        if val < best_val {
            best_val = val;
            best_center = c.clone();
        }
        let eta = real::<T>(1.0 / (k as f64 + 2.0));
        for d in 0..dim {
            c[d] = c[d] + eta * (sub[far][d] - c[d]);
        }
        project(&mut c);
    }

    let warned = best_val > centroid_bound;
    let all_refs: Vec<&Vec<T>> = points.iter().collect();
    let final_center = if warned { centroid(&points) } else { best_center };
    let value = max_dist(&final_center, &all_refs).0;
    Ok(ExtrinsicRadius { value, center: final_center, warned })
}

/// Raw geometric measurements of an immersion over a grid, consumed by the
/// bound formulas.
#[derive(Clone, Debug)]
pub struct Measurements<T> {
    pub vol: T,
    /// Integral of `|H|^2`.
    pub willmore: T,
    /// Sup norm of `|H|` over the nodes.
    pub h_inf: T,
    /// Sup of the pointwise Frobenius norm of II.
    pub ii_inf: T,
    /// Max principal curvature over nodes (hypersurfaces), else None.
    pub kmax: Option<T>,
    /// Min scalar curvature over nodes.
    pub s0: T,
}

/// Integrates volume, Willmore energy and the sup-norm quantities in one
/// pass over the grid.
pub fn measure<T: Real>(imm: &Immersion<T>, grid: &QuadratureGrid<T>) -> Result<Measurements<T>> {
    grid.check_matches(imm)?;
    let kappa0 = real::<T>(imm.ambient.curvature());
    let mut h2 = Vec::with_capacity(grid.len());
    let mut ones = Vec::with_capacity(grid.len());
    let mut h_inf = T::zero();
    let mut ii_inf = T::zero();
    let mut kmax = T::neg_infinity();
    let mut s0 = T::infinity();
    let hyper = imm.codim() == 1;
    for u in &grid.nodes {
        let s = fundamental_forms(imm, u)?;
        let h = s.mean_curvature_norm();
        h2.push(h * h);
        ones.push(T::one());
        if h > h_inf {
            h_inf = h;
        }
        let ii = s.second_form_frobenius();
        if ii > ii_inf {
            ii_inf = ii;
        }
        if hyper {
            let pcs = s.principal_curvatures();
            for p in pcs {
                if p.abs() > kmax {
                    kmax = p.abs();
                }
            }
        }
        let sc = s.scalar_curvature(kappa0);
        if sc < s0 {
            s0 = sc;
        }
    }
    let vol = integrate_values(grid, &ones);
    let willmore = integrate_values(grid, &h2);
    Ok(Measurements {
        vol,
        willmore,
        h_inf,
        ii_inf,
        kmax: if hyper { Some(kmax) } else { None },
        s0,
    })
}

#[cfg(test)]
mod tests;
