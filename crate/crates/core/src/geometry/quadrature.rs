//! Tensor-product quadrature over immersion domains: trapezoid rule on
//! periodic directions (spectrally accurate for smooth closed charts),
//! Gauss-Legendre on clamped directions (nodes stay strictly interior,
//! which keeps chart poles out of the node set).

use crate::error::{Error, Result};
use crate::scalar::{pairwise_sum, real, Real};

use super::{fundamental_forms, GeomSample, Immersion};

/// Gauss-Legendre nodes and weights on (-1, 1), by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = real::<T>(n as f64);
    for i in 0..(n + 1) / 2 {
        let mut x: T = (real::<T>(std::f64::consts::PI) * (real::<T>(i as f64) + real::<T>(0.75))
            / (nf + real::<T>(0.5)))
        .cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Legendre recurrence
            let mut p0 = T::one();
            let mut p1 = x;
            for k in 2..=n {
                let kf = real::<T>(k as f64);
                let p2 = ((real::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // derivative from the two-term relation
            dp = nf * (x * p1 - p0) / (x * x - T::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() < T::epsilon() * real::<T>(4.0) {
                break;
            }
        }
        let w = real::<T>(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[i] = -x.abs();
        nodes[n - 1 - i] = x.abs();
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    // enforce symmetric ordering for odd n (middle node at exactly 0)
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    (nodes, weights)
}

/// Quadrature grid over an immersion domain: flattened tensor product of
/// per-direction rules, with cached area-element values.
#[derive(Clone, Debug)]
pub struct QuadratureGrid<T: Real> {
    /// Chart coordinates of every node.
    pub nodes: Vec<Vec<T>>,
    /// Chart-space quadrature weight of every node.
    pub weights: Vec<T>,
    /// `sqrt(det g)` evaluated at every node.
    pub sqrt_det_g: Vec<T>,
    /// Per-direction node counts.
    pub resolution: Vec<usize>,
    immersion_name: String,
}

impl<T: Real> QuadratureGrid<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fails when the grid was built for a different immersion.
    pub fn check_matches(&self, imm: &Immersion<T>) -> Result<()> {
        if self.immersion_name != imm.name {
            return Err(Error::GridMismatch(format!(
                "grid built for '{}', used with '{}'",
                self.immersion_name, imm.name
            )));
        }
        Ok(())
    }
}

/// Builds the tensor-product grid with `resolution[d]` nodes per direction.
pub fn build_grid<T: Real>(imm: &Immersion<T>, resolution: &[usize]) -> Result<QuadratureGrid<T>> {
    if resolution.len() != imm.n {
        return Err(Error::InvalidArgument(format!(
            "resolution has {} entries for an {}-dimensional domain",
            resolution.len(),
            imm.n
        )));
    }
    let mut axes: Vec<(Vec<T>, Vec<T>)> = Vec::new();
    for (d, interval) in imm.domain.iter().enumerate() {
        let nn = resolution[d];
        if nn < 4 {
            return Err(Error::InvalidArgument("at least 4 nodes per direction".into()));
        }
        let len = interval.hi - interval.lo;
        if interval.periodic {
            let h = len / real::<T>(nn as f64);
            let nodes: Vec<T> = (0..nn).map(|k| interval.lo + h * real::<T>(k as f64)).collect();
            let weights = vec![h; nn];
            axes.push((nodes, weights));
        } else {
            let (xs, ws) = gauss_legendre::<T>(nn);
            let half = len / real::<T>(2.0);
            let mid = (interval.hi + interval.lo) / real::<T>(2.0);
            let nodes: Vec<T> = xs.iter().map(|&x| mid + half * x).collect();
            let weights: Vec<T> = ws.iter().map(|&w| w * half).collect();
            axes.push((nodes, weights));
        }
    }

    // flatten, last axis fastest
    let total: usize = resolution.iter().product();
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    let mut sqrt_det_g = Vec::with_capacity(total);
    let mut idx = vec![0usize; imm.n];
    for _ in 0..total {
        let mut u = Vec::with_capacity(imm.n);
        let mut w = T::one();
        for d in 0..imm.n {
            u.push(axes[d].0[idx[d]]);
            w *= axes[d].1[idx[d]];
        }
        let sample = fundamental_forms(imm, &u)?;
        sqrt_det_g.push(sample.det_g.sqrt());
        nodes.push(u);
        weights.push(w);
        // odometer increment
        for d in (0..imm.n).rev() {
            idx[d] += 1;
            if idx[d] < resolution[d] {
                break;
            }
            idx[d] = 0;
        }
    }

    Ok(QuadratureGrid {
        nodes,
        weights,
        sqrt_det_g,
        resolution: resolution.to_vec(),
        immersion_name: imm.name.clone(),
    })
}

/// Integrates a scalar field given per node: `sum w_i sqrt(g)_i f_i`,
/// pairwise-summed for run-to-run determinism.
pub fn integrate_values<T: Real>(grid: &QuadratureGrid<T>, values: &[T]) -> T {
    assert_eq!(values.len(), grid.len());
    let terms: Vec<T> = (0..grid.len())
        .map(|i| grid.weights[i] * grid.sqrt_det_g[i] * values[i])
        .collect();
    pairwise_sum(&terms)
}

/// Integrates a scalar field defined through the geometry sample at each node.
pub fn integrate<T: Real, F>(imm: &Immersion<T>, grid: &QuadratureGrid<T>, f: F) -> Result<T>
where
    F: Fn(&[T], &GeomSample<T>) -> T,
{
    grid.check_matches(imm)?;
    let mut values = Vec::with_capacity(grid.len());
    for u in &grid.nodes {
        let s = fundamental_forms(imm, u)?;
        values.push(f(u, &s));
    }
    Ok(integrate_values(grid, &values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre::<f64>(8);
        // degree 15 polynomial: x^14
        let q: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(14)).sum();
        assert!((q - 2.0 / 15.0).abs() < 1e-14);
        let s: f64 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
    }
}
