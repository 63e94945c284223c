//! Intrinsic Dirac operator of a closed plane curve. After arclength
//! reparametrization the operator is `-i d/ds` with the boundary condition
//! of the spin label, so it diagonalizes exactly in the Fourier basis; the
//! discretization parameter `n` enters through the trapezoid quadrature of
//! the length and the number of retained modes.

use crate::error::{Error, Result};
use crate::geometry::{AmbientSpace, Immersion};
use crate::scalar::{pairwise_sum, real, Real};

use super::{BoundaryCondition, Spectrum, SpectrumSource};

/// Arclength of a closed curve by the trapezoid rule with `n` nodes
/// (spectrally accurate for smooth closed charts).
pub fn curve_length<T: Real>(imm: &Immersion<T>, n: usize) -> Result<T> {
    if imm.n != 1 {
        return Err(Error::InvalidArgument("curve_length needs a curve".into()));
    }
    if !imm.domain[0].periodic {
        return Err(Error::InvalidArgument("curve must be closed".into()));
    }
    let lo = imm.domain[0].lo;
    let span = imm.domain[0].hi - lo;
    let h = span / real::<T>(n as f64);
    let mut speeds = Vec::with_capacity(n);
    for k in 0..n {
        let u = lo + h * real::<T>(k as f64);
        let jac = imm.chart.jacobian(&[u]);
        let s2: Vec<T> = jac[0].iter().map(|x| *x * *x).collect();
        let speed = pairwise_sum(&s2).sqrt();
        if speed < real::<T>(1e-12) {
            return Err(Error::Degenerate("curve parametrization degenerates".into()));
        }
        speeds.push(speed * h);
    }
    Ok(pairwise_sum(&speeds))
}

/// Dirac spectrum of a closed plane curve with the given spin boundary
/// condition: `lambda = (2 pi / L)(k + delta/2)`, complete for the retained
/// mode range.
pub fn curve_dirac<T: Real>(
    imm: &Immersion<T>,
    n: usize,
    label: &BoundaryCondition,
) -> Result<Spectrum<T>> {
    if n < 16 {
        return Err(Error::InvalidArgument("curve_dirac needs n >= 16".into()));
    }
    if !matches!(imm.ambient, AmbientSpace::Euclidean(2)) || imm.n != 1 {
        return Err(Error::InvalidArgument("curve_dirac needs a closed plane curve".into()));
    }
    let length = curve_length(imm, n)?;
    let base = real::<T>(std::f64::consts::TAU) / length;
    let delta: T = label.offset();
    let kmax = (n / 2) as i64;
    let mut vals = Vec::new();
    for k in -kmax..=kmax {
        let lam = base * (real::<T>(k as f64) + delta);
        vals.push((lam, 1));
    }
    // every mode with |lambda| below this threshold is retained
    let window = base * (real::<T>(kmax as f64) - real::<T>(0.25));
    let spectrum = Spectrum {
        entries: super::normalize(vals.into_iter().filter(|(v, _)| v.abs() <= window).collect(), true),
        operator: super::OperatorKind::Dirac,
        window,
        source: SpectrumSource::Discretized { n, modes: (2 * kmax + 1) as usize },
    };
    Ok(spectrum)
}
