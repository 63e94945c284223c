//! Spin structure induced on a hypersurface by an embedding, detected
//! through frame holonomy: along each generating loop the adapted frame is
//! tracked in the ambient frame bundle, and an odd rotation number means
//! the antiperiodic boundary condition.

use crate::error::{Error, Result};
use crate::geometry::{fundamental_forms, AmbientSpace, Immersion, RevolutionProfile};
use crate::scalar::{real, Real};

/// Boundary condition of one periodic domain direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryCondition {
    Periodic,
    Antiperiodic,
}

impl BoundaryCondition {
    pub fn is_antiperiodic(&self) -> bool {
        matches!(self, BoundaryCondition::Antiperiodic)
    }

    /// Fourier offset: half-integer modes for the antiperiodic condition.
    pub fn offset<T: Real>(&self) -> T {
        match self {
            BoundaryCondition::Periodic => T::zero(),
            BoundaryCondition::Antiperiodic => real(0.5),
        }
    }
}

/// One flag per periodic domain direction, in domain order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinStructureLabel {
    pub flags: Vec<BoundaryCondition>,
}

impl SpinStructureLabel {
    pub fn all_antiperiodic(count: usize) -> Self {
        SpinStructureLabel { flags: vec![BoundaryCondition::Antiperiodic; count] }
    }

    pub fn is_trivial(&self) -> bool {
        self.flags.iter().all(|f| !f.is_antiperiodic())
    }
}

/// Rotation number of a closed angle path: unwraps `atan2` increments and
/// checks integrality to `1e-6`.
fn winding_number<T: Real>(angles: &[(T, T)]) -> Result<i64> {
    let mut total = T::zero();
    let mut prev = angles[0].1.atan2(angles[0].0);
    for &(x, y) in angles.iter().skip(1).chain(std::iter::once(&angles[0])) {
        let a = y.atan2(x);
        let mut d = a - prev;
        let pi = T::PI();
        while d > pi {
            d -= pi + pi;
        }
        while d < -pi {
            d += pi + pi;
        }
        total += d;
        prev = a;
    }
    let w = total / (real::<T>(2.0) * T::PI());
    let rounded = w.to_f64().unwrap_or(f64::NAN).round();
    if (w - real::<T>(rounded)).abs() > real::<T>(1e-6) {
        return Err(Error::Degenerate(format!(
            "frame rotation number {w} is not an integer"
        )));
    }
    Ok(rounded as i64)
}

fn label_from_winding(w: i64) -> BoundaryCondition {
    if w.rem_euclid(2) == 1 {
        BoundaryCondition::Antiperiodic
    } else {
        BoundaryCondition::Periodic
    }
}

/// Determines the induced spin structure of a closed plane curve or a
/// Euclidean surface of revolution. Calibrated so the unit circle comes
/// out antiperiodic.
pub fn induced_spin_structure<T: Real>(imm: &Immersion<T>) -> Result<SpinStructureLabel> {
    match (&imm.ambient, imm.n) {
        (AmbientSpace::Euclidean(2), 1) => {
            // tangent winding of the plane curve
            let samples = 4096usize;
            let lo = imm.domain[0].lo;
            let span = imm.domain[0].hi - lo;
            let mut angles = Vec::with_capacity(samples);
            for k in 0..samples {
                let u = lo + span * real::<T>(k as f64 / samples as f64);
                let jac = imm.chart.jacobian(&[u]);
                angles.push((jac[0][0], jac[0][1]));
            }
            let w = winding_number(&angles)?;
            Ok(SpinStructureLabel { flags: vec![label_from_winding(w)] })
        }
        (AmbientSpace::Euclidean(3), 2) => {
            let profile = imm.revolution.as_ref().ok_or_else(|| {
                Error::InvalidArgument(
                    "induced spin structure needs a surface of revolution".into(),
                )
            })?;
            match profile {
                RevolutionProfile::SphereLike { .. } => {
                    // one periodic direction (the rotation angle); the
                    // adapted frame winds once about the axis
                    let w = rotation_loop_winding(imm)?;
                    Ok(SpinStructureLabel { flags: vec![label_from_winding(w)] })
                }
                RevolutionProfile::TorusLike { .. } => {
                    // domain order is (profile, angle)
                    let wp = profile_loop_winding(imm)?;
                    let wa = rotation_loop_winding(imm)?;
                    Ok(SpinStructureLabel {
                        flags: vec![label_from_winding(wp), label_from_winding(wa)],
                    })
                }
            }
        }
        _ => Err(Error::InvalidArgument(
            "induced spin structure implemented for plane curves and surfaces of revolution".into(),
        )),
    }
}

/// Winding of the adapted frame along the rotation loop, tracked through
/// the xy-projection of the normal vector. The pointwise normal comes from
/// Gram-Schmidt whose sign is not continuous along the loop, so successive
/// normals are aligned with their predecessor before unwrapping.
fn rotation_loop_winding<T: Real>(imm: &Immersion<T>) -> Result<i64> {
    let samples = 1024usize;
    let t0 = match imm.revolution.as_ref().unwrap() {
        RevolutionProfile::SphereLike { .. } => real::<T>(std::f64::consts::FRAC_PI_2),
        RevolutionProfile::TorusLike { .. } => real::<T>(0.3),
    };
    let lo = imm.domain[1].lo;
    let span = imm.domain[1].hi - lo;
    let mut normals: Vec<Vec<T>> = Vec::with_capacity(samples);
    for k in 0..samples {
        let phi = lo + span * real::<T>(k as f64 / samples as f64);
        let s = fundamental_forms(imm, &[t0, phi])?;
        let mut nrm = s.normal_frame[0].clone();
        if let Some(prev) = normals.last() {
            let mut dot = T::zero();
            for (a, b) in nrm.iter().zip(prev) {
                dot += *a * *b;
            }
            if dot < T::zero() {
                for a in nrm.iter_mut() {
                    *a = -*a;
                }
            }
        }
        normals.push(nrm);
    }
    let angles: Vec<(T, T)> = normals.iter().map(|n| (n[0], n[1])).collect();
    winding_number(&angles)
}

/// Winding of the profile tangent in the half-plane, along the profile loop.
fn profile_loop_winding<T: Real>(imm: &Immersion<T>) -> Result<i64> {
    let samples = 1024usize;
    let lo = imm.domain[0].lo;
    let span = imm.domain[0].hi - lo;
    let mut angles = Vec::with_capacity(samples);
    for k in 0..samples {
        let t = lo + span * real::<T>(k as f64 / samples as f64);
        let jac = imm.chart.jacobian(&[t, T::zero()]);
        // profile tangent in the (radial, z) half-plane at phi = 0
        angles.push((jac[0][0], jac[0][2]));
    }
    winding_number(&angles)
}
