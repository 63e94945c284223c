use super::*;
use crate::geometry::{build_grid, catalog};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;

fn random_sphere_points(n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let v: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 0.1 {
            continue;
        }
        let p: Vec<f64> = v.iter().map(|x| x / norm).collect();
        if p[3] < 0.8 {
            out.push(p);
        }
    }
    out
}

fn random_halfspace_points(n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            vec![
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.5..2.0),
            ]
        })
        .collect()
}

#[test]
fn euclidean_basis_count_and_zero_residual() {
    let fields = killing_basis::<f64>(AmbientSpace::Euclidean(3), cr(0.0)).unwrap();
    assert_eq!(fields.len(), 2);
    let pts = random_halfspace_points(10, 3);
    for f in &fields {
        let r = killing_residual(f, &pts, 1e-3).unwrap();
        assert!(r < 1e-14, "parallel field residual {r}");
    }
}

#[test]
fn sphere_basis_cone_route() {
    let fields = killing_basis::<f64>(AmbientSpace::Sphere(3), cr(0.5)).unwrap();
    assert_eq!(fields.len(), 2, "nu(S^3, 1/2) = 2");
    let pts = random_sphere_points(20, 11);
    let cond = basis_gram_condition(&fields, &pts);
    assert!(cond < 1e6, "Gram condition {cond}");

    // order-2 residual decay, and small absolute size at h = 1e-3
    for f in &fields {
        let r1 = killing_residual(f, &pts, 1e-3).unwrap();
        let r2 = killing_residual(f, &pts, 5e-4).unwrap();
        assert!(r1 <= 1e-5, "sphere residual at h=1e-3: {r1}");
        let ratio = r1 / r2;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio} (r1={r1:e}, r2={r2:e})");
    }
}

#[test]
fn sphere_fields_have_constant_length() {
    let fields = killing_basis::<f64>(AmbientSpace::Sphere(3), cr(-0.5)).unwrap();
    let pts = random_sphere_points(30, 5);
    for f in &fields {
        let norms: Vec<f64> = pts.iter().map(|p| vec_norm(&f.value(p))).collect();
        let spread = norms.iter().cloned().fold(f64::MIN, f64::max)
            - norms.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread < 1e-10, "real-constant Killing fields have constant length, spread {spread}");
    }
}

#[test]
fn hyperbolic_basis_closed_form() {
    for sign in [1.0f64, -1.0] {
        let fields = killing_basis::<f64>(AmbientSpace::Hyperbolic(3), ci(0.5 * sign)).unwrap();
        assert_eq!(fields.len(), 2, "nu(H^3, i/2) = 2");
        let pts = random_halfspace_points(20, 7);
        let cond = basis_gram_condition(&fields, &pts);
        assert!(cond < 1e6, "Gram condition {cond}");
        for f in &fields {
            let r1 = killing_residual(f, &pts, 1e-3).unwrap();
            let r2 = killing_residual(f, &pts, 5e-4).unwrap();
            assert!(r1 < 1e-4, "hyperbolic residual {r1}");
            let ratio = r1 / r2;
            assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
        }
    }
}

#[test]
fn hyperbolic_field_length_is_not_constant() {
    let fields = killing_basis::<f64>(AmbientSpace::Hyperbolic(3), ci(0.5)).unwrap();
    let f = &fields[0];
    let a = vec_norm(&f.value(&[0.0, 0.0, 0.5]));
    let b = vec_norm(&f.value(&[0.0, 0.0, 2.0]));
    assert!((a - b).abs() > 0.1);
}

#[test]
fn unsupported_pairs_are_rejected() {
    assert!(killing_basis::<f64>(AmbientSpace::Euclidean(3), cr(0.5)).is_err());
    assert!(killing_basis::<f64>(AmbientSpace::Sphere(3), ci(0.5)).is_err());
    assert!(killing_basis::<f64>(AmbientSpace::Hyperbolic(3), cr(0.5)).is_err());
}

#[test]
fn rayleigh_circle_quarter() {
    let c = catalog::<f64>("circle", &[("r", 1.0)]).unwrap();
    let grid = build_grid(&c, &[256]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Euclidean(2), cr(0.0)).unwrap();
    for f in &fields {
        let q = rayleigh_dtilde(f, &c, &grid).unwrap();
        assert!((q - 0.25).abs() < 1e-10, "Q = {q}");
    }
}

#[test]
fn rayleigh_unit_sphere_is_one() {
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let grid = build_grid(&s, &[48, 96]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Euclidean(3), cr(0.0)).unwrap();
    let mut qs = Vec::new();
    for f in &fields {
        qs.push(rayleigh_dtilde(f, &s, &grid).unwrap());
    }
    for q in &qs {
        assert!((q - 1.0).abs() < 1e-8, "Q = {q}");
    }
    // basis independence
    let spread = qs.iter().cloned().fold(f64::MIN, f64::max) - qs.iter().cloned().fold(f64::MAX, f64::min);
    assert!(spread < 1e-10);
}

#[test]
fn rayleigh_equatorial_sphere_matches_formula_exactly() {
    let m = catalog::<f64>("equatorial-sphere", &[]).unwrap();
    let grid = build_grid(&m, &[32, 64]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Sphere(3), cr(0.5)).unwrap();
    for f in &fields {
        let q = rayleigh_dtilde(f, &m, &grid).unwrap();
        // n^2 alpha^2 with H = 0: the quadrature adds exactly nothing
        assert!((q - 1.0).abs() < 1e-12, "Q = {q}");
    }
}

#[test]
fn rayleigh_small_sphere_matches_formula() {
    let tau = 0.9f64;
    let m = catalog::<f64>("small-sphere-in-sphere", &[("tau", tau)]).unwrap();
    let grid = build_grid(&m, &[48, 96]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Sphere(3), cr(0.5)).unwrap();
    let want = 1.0 + 1.0 / tau.tan().powi(2);
    for f in &fields {
        let q = rayleigh_dtilde(f, &m, &grid).unwrap();
        assert!((q - want).abs() < 1e-8, "Q = {q}, want {want}");
    }
}

#[test]
fn splitting_check_circle_and_pointwise_norm() {
    let c = catalog::<f64>("circle", &[("r", 1.0)]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Euclidean(2), cr(0.0)).unwrap();
    let res = dirac_splitting_check(&c, &fields[0], 256).unwrap();
    assert!(res <= 1e-8, "circle splitting residual {res:e}");
    let norms = splitting_pointwise_norms(&c, &fields[0], 64).unwrap();
    for v in norms {
        assert!((v - 0.5).abs() < 1e-10, "|D psi| = 1/2, got {v}");
    }
}

#[test]
fn splitting_check_ellipse_spectral_decay() {
    let e = catalog::<f64>("ellipse", &[("a", 2.0), ("b", 1.0)]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Euclidean(2), cr(0.0)).unwrap();
    let r64 = dirac_splitting_check(&e, &fields[1], 64).unwrap();
    let r128 = dirac_splitting_check(&e, &fields[1], 128).unwrap();
    let r256 = dirac_splitting_check(&e, &fields[1], 256).unwrap();
    // faster than fourth order over each doubling (spectral in practice)
    assert!(r128 < r64 / 16.0, "{r64:e} -> {r128:e}");
    assert!(r256 < r128 / 16.0 || r256 < 1e-12, "{r128:e} -> {r256:e}");
}

#[test]
fn cross_term_bound_geodesic_sphere() {
    let m = catalog::<f64>("geodesic-sphere-hyperbolic", &[("r", 1.0)]).unwrap();
    let grid = build_grid(&m, &[32, 64]).unwrap();
    let fields = killing_basis::<f64>(AmbientSpace::Hyperbolic(3), ci(0.5)).unwrap();
    for f in &fields {
        let coth = 1.0 / 1.0f64.tanh();
        let beta_opt = (coth / 0.5).sqrt();
        let at_opt = imaginary_cross_term_bound(f, &m, &grid, beta_opt).unwrap();
        assert!(at_opt.lhs <= at_opt.rhs + 1e-12, "lhs {} rhs {}", at_opt.lhs, at_opt.rhs);
        assert!(at_opt.lhs <= at_opt.rhs_optimized + 1e-12);
        // the optimized choice beats beta = 1
        let at_one = imaginary_cross_term_bound(f, &m, &grid, 1.0).unwrap();
        assert!(at_opt.rhs_optimized <= at_one.rhs + 1e-12);
        assert!((at_opt.rhs - at_opt.rhs_optimized).abs() < 1e-9, "optimized beta realises the optimum");
    }
    assert!(imaginary_cross_term_bound(&fields[0], &m, &grid, -1.0).is_err());
}

#[test]
fn cross_term_vanishing_curvature_limit() {
    // H = 0 makes both sides vanish at the optimized choice
    let lhs: f64 = 0.0;
    let h_inf: f64 = 0.0;
    let alpha_abs = 0.5;
    let norm_l2 = 3.7;
    let rhs_opt = norm_l2 * alpha_abs * h_inf;
    assert_eq!(rhs_opt, 0.0);
    assert!(lhs <= rhs_opt);
}

#[test]
fn minmax_consequence_on_catalog_cases() {
    use crate::spectra::{curve_dirac, model_dirac_spectrum, BoundaryCondition, DiracModel};
    // circle: mu = 1 entry below Q = 1/4
    let c = catalog::<f64>("circle", &[("r", 1.0)]).unwrap();
    let grid = build_grid(&c, &[256]).unwrap();
    let f = &killing_basis::<f64>(AmbientSpace::Euclidean(2), cr(0.0)).unwrap()[0];
    let q = rayleigh_dtilde(f, &c, &grid).unwrap();
    let spec = curve_dirac(&c, 256, &BoundaryCondition::Antiperiodic).unwrap();
    assert!(spec.count_squared_below(q + 1e-9) >= 1);

    // unit sphere: mu = 2 entries below Q = 1
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let gs = build_grid(&s, &[48, 96]).unwrap();
    let fe = &killing_basis::<f64>(AmbientSpace::Euclidean(3), cr(0.0)).unwrap()[0];
    let qs = rayleigh_dtilde(fe, &s, &gs).unwrap();
    let spec_s = model_dirac_spectrum::<f64>(&DiracModel::RoundSphere { n: 2, radius: 1.0 }, 3.0).unwrap();
    assert!(spec_s.count_squared_below(qs + 1e-9) >= 2);
}

#[test]
fn restriction_norm_identity() {
    // |g(H) psi| = |H| |psi| at every node
    let m = catalog::<f64>("geodesic-sphere-hyperbolic", &[("r", 0.7)]).unwrap();
    let grid = build_grid(&m, &[24, 48]).unwrap();
    let f = &killing_basis::<f64>(AmbientSpace::Hyperbolic(3), ci(0.5)).unwrap()[1];
    let r = restrict(f, &m, &grid).unwrap();
    for i in 0..grid.len() {
        let lhs = vec_norm(&r.gamma_h_psi[i]);
        let rhs = r.h_norm[i] * r.norm_sq[i].sqrt();
        assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs), "node {i}: {lhs} vs {rhs}");
    }
}
