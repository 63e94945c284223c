//! Named catalog of closed immersed submanifolds with closed-form
//! derivatives.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

use super::{AmbientSpace, Chart, DomainInterval, Immersion, RevolutionProfile};

/// Plane curve `u -> (x(u), y(u))`, closed over `[0, 2 pi)`.
struct PlaneCurve<T> {
    /// returns ((x, x', x''), (y, y', y''))
    eval: Box<dyn Fn(T) -> ([T; 3], [T; 3]) + Send + Sync>,
}

impl<T: Real> Chart<T> for PlaneCurve<T> {
    fn value(&self, u: &[T]) -> Vec<T> {
        let (x, y) = (self.eval)(u[0]);
        vec![x[0], y[0]]
    }
    fn jacobian(&self, u: &[T]) -> Vec<Vec<T>> {
        let (x, y) = (self.eval)(u[0]);
        vec![vec![x[1], y[1]]]
    }
    fn hessian(&self, u: &[T]) -> Vec<Vec<Vec<T>>> {
        let (x, y) = (self.eval)(u[0]);
        vec![vec![vec![x[2], y[2]]]]
    }
}

/// Surface of revolution about the z-axis: chart `(t, phi)` with
/// `x = (f(t) cos phi, f(t) sin phi, g(t))`.
struct Revolution<T> {
    /// returns (f, f', f'') and (g, g', g'')
    profile: Arc<dyn Fn(T) -> ([T; 3], [T; 3]) + Send + Sync>,
}

impl<T: Real> Chart<T> for Revolution<T> {
    fn value(&self, u: &[T]) -> Vec<T> {
        let (f, g) = (self.profile)(u[0]);
        let (c, s) = (u[1].cos(), u[1].sin());
        vec![f[0] * c, f[0] * s, g[0]]
    }
    fn jacobian(&self, u: &[T]) -> Vec<Vec<T>> {
        let (f, g) = (self.profile)(u[0]);
        let (c, s) = (u[1].cos(), u[1].sin());
        vec![vec![f[1] * c, f[1] * s, g[1]], vec![-f[0] * s, f[0] * c, T::zero()]]
    }
    fn hessian(&self, u: &[T]) -> Vec<Vec<Vec<T>>> {
        let (f, g) = (self.profile)(u[0]);
        let (c, s) = (u[1].cos(), u[1].sin());
        let dtt = vec![f[2] * c, f[2] * s, g[2]];
        let dtp = vec![-f[1] * s, f[1] * c, T::zero()];
        let dpp = vec![-f[0] * c, -f[0] * s, T::zero()];
        vec![vec![dtt, dtp.clone()], vec![dtp, dpp]]
    }
}

/// Distance sphere in the unit 3-sphere: `(sin tau) S^2` at height `cos tau`.
struct SmallSphere<T> {
    sin_tau: T,
    cos_tau: T,
}

impl<T: Real> Chart<T> for SmallSphere<T> {
    fn value(&self, u: &[T]) -> Vec<T> {
        let (st, ct) = (u[0].sin(), u[0].cos());
        let (cp, sp) = (u[1].cos(), u[1].sin());
        vec![self.sin_tau * st * cp, self.sin_tau * st * sp, self.sin_tau * ct, self.cos_tau]
    }
    fn jacobian(&self, u: &[T]) -> Vec<Vec<T>> {
        let (st, ct) = (u[0].sin(), u[0].cos());
        let (cp, sp) = (u[1].cos(), u[1].sin());
        vec![
            vec![self.sin_tau * ct * cp, self.sin_tau * ct * sp, -self.sin_tau * st, T::zero()],
            vec![-self.sin_tau * st * sp, self.sin_tau * st * cp, T::zero(), T::zero()],
        ]
    }
    fn hessian(&self, u: &[T]) -> Vec<Vec<Vec<T>>> {
        let (st, ct) = (u[0].sin(), u[0].cos());
        let (cp, sp) = (u[1].cos(), u[1].sin());
        let a = self.sin_tau;
        let dtt = vec![-a * st * cp, -a * st * sp, -a * ct, T::zero()];
        let dtp = vec![-a * ct * sp, a * ct * cp, T::zero(), T::zero()];
        let dpp = vec![-a * st * cp, -a * st * sp, T::zero(), T::zero()];
        vec![vec![dtt, dtp.clone()], vec![dtp, dpp]]
    }
}

/// Linear subtorus `(u, v) -> (u, v, 0)` of the flat 3-torus.
struct FlatSubtorus;

impl<T: Real> Chart<T> for FlatSubtorus {
    fn value(&self, u: &[T]) -> Vec<T> {
        vec![u[0], u[1], T::zero()]
    }
    fn jacobian(&self, _u: &[T]) -> Vec<Vec<T>> {
        vec![
            vec![T::one(), T::zero(), T::zero()],
            vec![T::zero(), T::one(), T::zero()],
        ]
    }
    fn hessian(&self, _u: &[T]) -> Vec<Vec<Vec<T>>> {
        vec![vec![vec![T::zero(); 3]; 2]; 2]
    }
}

/// Minimal flat torus in the unit 3-sphere.
struct CliffordTorus;

impl<T: Real> Chart<T> for CliffordTorus {
    fn value(&self, u: &[T]) -> Vec<T> {
        let r = T::one() / real::<T>(2.0).sqrt();
        vec![r * u[0].cos(), r * u[0].sin(), r * u[1].cos(), r * u[1].sin()]
    }
    fn jacobian(&self, u: &[T]) -> Vec<Vec<T>> {
        let r = T::one() / real::<T>(2.0).sqrt();
        vec![
            vec![-r * u[0].sin(), r * u[0].cos(), T::zero(), T::zero()],
            vec![T::zero(), T::zero(), -r * u[1].sin(), r * u[1].cos()],
        ]
    }
    fn hessian(&self, u: &[T]) -> Vec<Vec<Vec<T>>> {
        let r = T::one() / real::<T>(2.0).sqrt();
        let dtt = vec![-r * u[0].cos(), -r * u[0].sin(), T::zero(), T::zero()];
        let dtp = vec![T::zero(); 4];
        let dpp = vec![T::zero(), T::zero(), -r * u[1].cos(), -r * u[1].sin()];
        vec![vec![dtt, dtp.clone()], vec![dtp, dpp]]
    }
}


fn getf(params: &[(&str, f64)], key: &str, default: f64) -> f64 {
    params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).unwrap_or(default)
}

const TWO_PI: f64 = std::f64::consts::TAU;

fn periodic<T: Real>(hi: f64) -> DomainInterval<T> {
    DomainInterval { lo: T::zero(), hi: real(hi), periodic: true }
}

fn clamped<T: Real>(lo: f64, hi: f64) -> DomainInterval<T> {
    DomainInterval { lo: real(lo), hi: real(hi), periodic: false }
}

/// Names accepted by [`catalog`].
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "circle",
        "ellipse",
        "fourier-curve",
        "sphere",
        "ellipsoid-of-revolution",
        "torus-of-revolution",
        "small-sphere-in-sphere",
        "equatorial-sphere",
        "geodesic-sphere-hyperbolic",
        "flat-subtorus",
        "clifford-torus",
    ]
}

/// Builds a catalog immersion by name with `key = value` parameters;
/// unknown names and invalid parameters are rejected.
pub fn catalog<T: Real>(name: &str, params: &[(&str, f64)]) -> Result<Immersion<T>> {
    let positive = |key: &str, v: f64| -> Result<()> {
        if v > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{name}: parameter {key} must be positive, got {v}")))
        }
    };

    match name {
        "circle" => {
            let rf = getf(params, "r", 1.0);
            positive("r", rf)?;
            let r: T = real(rf);
            let chart = PlaneCurve {
                eval: Box::new(move |u: T| {
                    let (c, s) = (u.cos(), u.sin());
                    ([r * c, -r * s, -r * c], [r * s, r * c, -r * s])
                }),
            };
            Ok(Immersion {
                name: name.into(),
                params: vec![("r".into(), rf)],
                ambient: AmbientSpace::Euclidean(2),
                n: 1,
                domain: vec![periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: None,
                bounds_region: true,
                revolution: None,
            })
        }
        "ellipse" => {
            let af = getf(params, "a", 2.0);
            let bf = getf(params, "b", 1.0);
            positive("a", af)?;
            positive("b", bf)?;
            let (a, b): (T, T) = (real(af), real(bf));
            let chart = PlaneCurve {
                eval: Box::new(move |u: T| {
                    let (c, s) = (u.cos(), u.sin());
                    ([a * c, -a * s, -a * c], [b * s, b * c, -b * s])
                }),
            };
            Ok(Immersion {
                name: name.into(),
                params: vec![("a".into(), af), ("b".into(), bf)],
                ambient: AmbientSpace::Euclidean(2),
                n: 1,
                domain: vec![periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: None,
                bounds_region: true,
                revolution: None,
            })
        }
        "fourier-curve" => {
            // radial perturbation rho(u) = 1 + eps cos(k u)
            let kf = getf(params, "k", 2.0);
            let ef = getf(params, "eps", 0.15);
            let k_int = kf.round();
            if (kf - k_int).abs() > 1e-12 || k_int < 1.0 {
                return Err(Error::InvalidArgument(format!("{name}: harmonic k must be a positive integer")));
            }
            if ef.abs() >= 0.5 {
                return Err(Error::InvalidArgument(format!("{name}: |eps| must stay below 0.5 for a regular curve")));
            }
            let k: T = real(k_int);
            let eps: T = real(ef);
            let chart = PlaneCurve {
                eval: Box::new(move |u: T| {
                    let rho = T::one() + eps * (k * u).cos();
                    let drho = -eps * k * (k * u).sin();
                    let ddrho = -eps * k * k * (k * u).cos();
                    let (c, s) = (u.cos(), u.sin());
                    let x = [
                        rho * c,
                        drho * c - rho * s,
                        ddrho * c - (drho + drho) * s - rho * c,
                    ];
                    let y = [
                        rho * s,
                        drho * s + rho * c,
                        ddrho * s + (drho + drho) * c - rho * s,
                    ];
                    (x, y)
                }),
            };
            Ok(Immersion {
                name: name.into(),
                params: vec![("k".into(), k_int), ("eps".into(), ef)],
                ambient: AmbientSpace::Euclidean(2),
                n: 1,
                domain: vec![periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: None,
                bounds_region: true,
                revolution: None,
            })
        }
        "sphere" | "ellipsoid-of-revolution" => {
            // x = (b sin t cos phi, b sin t sin phi, a cos t)
            let (af, bf) = if name == "sphere" {
                let rho = getf(params, "rho", 1.0);
                (rho, rho)
            } else {
                (getf(params, "a", 1.2), getf(params, "b", 1.0))
            };
            positive("a", af)?;
            positive("b", bf)?;
            let (a, b): (T, T) = (real(af), real(bf));
            let profile: Arc<dyn Fn(T) -> ([T; 3], [T; 3]) + Send + Sync> = Arc::new(move |t: T| {
                let (s, c) = (t.sin(), t.cos());
                ([b * s, b * c, -b * s], [a * c, -a * s, -a * c])
            });
            let chart = Revolution { profile: profile.clone() };
            let speed = Arc::new(move |t: T| {
                let (s, c) = (t.sin(), t.cos());
                ((b * c) * (b * c) + (a * s) * (a * s)).sqrt()
            });
            let radius_over_sin = Arc::new(move |_t: T| b);
            let params_rec = if name == "sphere" {
                vec![("rho".into(), af)]
            } else {
                vec![("a".into(), af), ("b".into(), bf)]
            };
            Ok(Immersion {
                name: name.into(),
                params: params_rec,
                ambient: AmbientSpace::Euclidean(3),
                n: 2,
                domain: vec![clamped(0.0, std::f64::consts::PI), periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: Some(0),
                bounds_region: true,
                revolution: Some(RevolutionProfile::SphereLike { radius_over_sin, speed }),
            })
        }
        "torus-of-revolution" => {
            let rr = getf(params, "R", 2.0);
            let rf = getf(params, "r", 1.0);
            positive("R", rr)?;
            positive("r", rf)?;
            if rf >= rr {
                return Err(Error::InvalidArgument(format!(
                    "{name}: requires r < R, got r = {rf}, R = {rr}"
                )));
            }
            let (big_r, small_r): (T, T) = (real(rr), real(rf));
            let profile: Arc<dyn Fn(T) -> ([T; 3], [T; 3]) + Send + Sync> = Arc::new(move |t: T| {
                let (s, c) = (t.sin(), t.cos());
                (
                    [big_r + small_r * c, -small_r * s, -small_r * c],
                    [small_r * s, small_r * c, -small_r * s],
                )
            });
            let chart = Revolution { profile };
            // profile has constant speed r, so arclength s = r t
            let radius_of_arclength = Arc::new(move |s: T| big_r + small_r * (s / small_r).cos());
            Ok(Immersion {
                name: name.into(),
                params: vec![("R".into(), rr), ("r".into(), rf)],
                ambient: AmbientSpace::Euclidean(3),
                n: 2,
                domain: vec![periodic(TWO_PI), periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: Some(1),
                bounds_region: true,
                revolution: Some(RevolutionProfile::TorusLike {
                    arclength_period: real::<T>(TWO_PI) * small_r,
                    radius_of_arclength,
                }),
            })
        }
        "small-sphere-in-sphere" | "equatorial-sphere" => {
            let tauf = if name == "equatorial-sphere" {
                std::f64::consts::FRAC_PI_2
            } else {
                getf(params, "tau", std::f64::consts::FRAC_PI_4)
            };
            if !(tauf > 0.0 && tauf < std::f64::consts::PI) {
                return Err(Error::InvalidArgument(format!("{name}: tau must lie in (0, pi)")));
            }
            let chart = SmallSphere { sin_tau: real::<T>(tauf.sin()), cos_tau: real::<T>(tauf.cos()) };
            Ok(Immersion {
                name: name.into(),
                params: vec![("tau".into(), tauf)],
                ambient: AmbientSpace::Sphere(3),
                n: 2,
                domain: vec![clamped(0.0, std::f64::consts::PI), periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: Some(0),
                bounds_region: true,
                revolution: None,
            })
        }
        "geodesic-sphere-hyperbolic" => {
            // Euclidean sphere of radius sinh(r) centered at height cosh(r)
            let rf = getf(params, "r", 1.0);
            positive("r", rf)?;
            let sh: T = real(rf.sinh());
            let ch: T = real(rf.cosh());
            let profile: Arc<dyn Fn(T) -> ([T; 3], [T; 3]) + Send + Sync> = Arc::new(move |t: T| {
                let (s, c) = (t.sin(), t.cos());
                ([sh * s, sh * c, -sh * s], [ch + sh * c, -sh * s, -sh * c])
            });
            let chart = Revolution { profile };
            Ok(Immersion {
                name: name.into(),
                params: vec![("r".into(), rf)],
                ambient: AmbientSpace::Hyperbolic(3),
                n: 2,
                domain: vec![clamped(0.0, std::f64::consts::PI), periodic(TWO_PI)],
                chart: Arc::new(chart),
                genus: Some(0),
                bounds_region: true,
                revolution: None,
            })
        }
        "flat-subtorus" => Ok(Immersion {
            name: name.into(),
            params: vec![],
            ambient: AmbientSpace::FlatTorus3,
            n: 2,
            domain: vec![periodic(1.0), periodic(1.0)],
            chart: Arc::new(FlatSubtorus),
            genus: Some(1),
            bounds_region: false,
            revolution: None,
        }),
        "clifford-torus" => Ok(Immersion {
            name: name.into(),
            params: vec![],
            ambient: AmbientSpace::Sphere(3),
            n: 2,
            domain: vec![periodic(TWO_PI), periodic(TWO_PI)],
            chart: Arc::new(CliffordTorus),
            genus: Some(1),
            bounds_region: true,
            revolution: None,
        }),
        other => Err(Error::InvalidArgument(format!(
            "unknown catalog name '{other}'; known: {}",
            catalog_names().join(", ")
        ))),
    }
}
