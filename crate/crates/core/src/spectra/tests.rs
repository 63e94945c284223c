use super::*;
use crate::geometry::catalog;
use crate::scalar::{ci, cr};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;

#[test]
fn circle_closed_form_antiperiodic() {
    let s = model_dirac_spectrum::<f64>(
        &DiracModel::Circle { length: 2.0 * PI, antiperiodic: true },
        5.0,
    )
    .unwrap();
    let lead = s.leading(4);
    assert_eq!(lead.len(), 4);
    assert!((lead[0] + 0.5).abs() < 1e-14, "negative first on ties");
    assert!((lead[1] - 0.5).abs() < 1e-14);
    assert!((lead[2] + 1.5).abs() < 1e-14);
    assert!((lead[3] - 1.5).abs() < 1e-14);
    for (_, m) in s.entries() {
        assert_eq!(*m, 1, "each circle eigenvalue is simple");
    }
}

#[test]
fn circle_closed_form_periodic_has_kernel() {
    let s = model_dirac_spectrum::<f64>(
        &DiracModel::Circle { length: 2.0 * PI, antiperiodic: false },
        3.5,
    )
    .unwrap();
    assert_eq!(s.kernel_multiplicity(1e-12), 1);
}

#[test]
fn round_sphere_spectrum() {
    let s = model_dirac_spectrum::<f64>(&DiracModel::RoundSphere { n: 2, radius: 1.0 }, 3.5).unwrap();
    // +-(k+1) with multiplicity 2(k+1)
    let e = s.entries();
    assert!((e[0].0 + 1.0).abs() < 1e-14 && e[0].1 == 2);
    assert!((e[1].0 - 1.0).abs() < 1e-14 && e[1].1 == 2);
    assert!((e[2].0 + 2.0).abs() < 1e-14 && e[2].1 == 4);
    assert!((e[3].0 - 2.0).abs() < 1e-14 && e[3].1 == 4);
    // radius scaling: lambda -> lambda / rho
    let s2 = model_dirac_spectrum::<f64>(&DiracModel::RoundSphere { n: 2, radius: 2.0 }, 3.5).unwrap();
    assert!((s2.smallest_abs().unwrap() - 0.5).abs() < 1e-14);
    // n = 3: lambda = 3/2 with multiplicity 2
    let s3 = model_dirac_spectrum::<f64>(&DiracModel::RoundSphere { n: 3, radius: 1.0 }, 2.0).unwrap();
    assert!((s3.entries()[0].0 + 1.5).abs() < 1e-14);
    assert_eq!(s3.entries()[0].1, 2);
}

#[test]
fn flat_square_torus_kernel_multiplicity_two() {
    let lat = [[1.0, 0.0], [0.0, 1.0]];
    let s = model_dirac_spectrum::<f64>(&DiracModel::FlatTorus { lattice: lat, label: [false, false] }, 20.0).unwrap();
    assert_eq!(s.kernel_multiplicity(1e-12), 2);
    // next eigenvalues at 2 pi with multiplicity 4 per sign
    let e: Vec<_> = s.entries().iter().filter(|(v, _)| v.abs() > 1e-9).collect();
    assert!((e[0].0 + 2.0 * PI).abs() < 1e-12 && e[0].1 == 4);
    assert!((e[1].0 - 2.0 * PI).abs() < 1e-12 && e[1].1 == 4);
    // fully antiperiodic: no kernel
    let sa = model_dirac_spectrum::<f64>(&DiracModel::FlatTorus { lattice: lat, label: [true, true] }, 20.0).unwrap();
    assert_eq!(sa.kernel_multiplicity(1e-12), 0);
    assert!((sa.smallest_abs().unwrap() - 2.0 * PI * 0.5f64.hypot(0.5)).abs() < 1e-12);
}

#[test]
fn geodesic_sphere_matches_scaled_round_sphere() {
    let r = 0.8f64;
    let s = model_dirac_spectrum::<f64>(&DiracModel::GeodesicSphereHyperbolic { n: 2, r }, 4.0).unwrap();
    assert!((s.smallest_abs().unwrap() - 1.0 / r.sinh()).abs() < 1e-13);
}

#[test]
fn laplace_closed_forms() {
    let c = model_laplace_spectrum::<f64>(&LaplaceModel::Circle { length: 2.0 * PI }, 10.0).unwrap();
    let lead = c.leading(5);
    assert_eq!(lead.len(), 5);
    assert!(lead[0].abs() < 1e-14);
    assert!((lead[1] - 1.0).abs() < 1e-14 && (lead[2] - 1.0).abs() < 1e-14);
    assert!((lead[3] - 4.0).abs() < 1e-14 && (lead[4] - 4.0).abs() < 1e-14);

    let s = model_laplace_spectrum::<f64>(&LaplaceModel::RoundSphere { n: 2, radius: 1.0 }, 7.0).unwrap();
    let e = s.entries();
    assert!(e[0].0.abs() < 1e-14 && e[0].1 == 1);
    assert!((e[1].0 - 2.0).abs() < 1e-14 && e[1].1 == 3);
    assert!((e[2].0 - 6.0).abs() < 1e-14 && e[2].1 == 5);
}

#[test]
fn hermitian_eigs_examples() {
    let mut d = CMat::<f64>::zeros(4, 4);
    for (i, v) in [1.0, 2.0, 3.0, 4.0].iter().enumerate() {
        d[(i, i)] = cr(*v);
    }
    let vals = hermitian_eigs(&d).unwrap();
    for (v, want) in vals.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((v - want).abs() < 1e-14);
    }

    // random Hermitian d = 50: trace identities
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let n = 50;
    let mut a = CMat::<f64>::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = cr(rng.gen_range(-1.0..1.0));
        for j in (i + 1)..n {
            let z = num_complex::Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let vals = hermitian_eigs(&a).unwrap();
    let tr: f64 = (0..n).map(|i| a[(i, i)].re).sum();
    let tr2 = a.mul(&a).trace().re;
    let s1: f64 = vals.iter().sum();
    let s2: f64 = vals.iter().map(|v| v * v).sum();
    assert!((s1 - tr).abs() < 1e-10, "sum {} vs trace {}", s1, tr);
    assert!((s2 - tr2).abs() < 1e-9, "sum sq {} vs trace sq {}", s2, tr2);

    // non-Hermitian input is rejected
    let mut bad = CMat::<f64>::zeros(2, 2);
    bad[(0, 1)] = cr(1.0);
    assert!(hermitian_eigs(&bad).is_err());
}

#[test]
fn induced_structure_circle_and_ellipse_antiperiodic() {
    let c = catalog::<f64>("circle", &[("r", 1.0)]).unwrap();
    let lc = induced_spin_structure(&c).unwrap();
    assert_eq!(lc.flags, vec![BoundaryCondition::Antiperiodic]);

    let e = catalog::<f64>("ellipse", &[("a", 2.0), ("b", 1.0)]).unwrap();
    let le = induced_spin_structure(&e).unwrap();
    assert_eq!(le.flags, vec![BoundaryCondition::Antiperiodic]);

    let f = catalog::<f64>("fourier-curve", &[("k", 3.0), ("eps", 0.1)]).unwrap();
    let lf = induced_spin_structure(&f).unwrap();
    assert_eq!(lf.flags, vec![BoundaryCondition::Antiperiodic]);
}

#[test]
fn induced_structure_torus_is_nontrivial() {
    let t = catalog::<f64>("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]).unwrap();
    let l = induced_spin_structure(&t).unwrap();
    assert_eq!(l.flags.len(), 2);
    assert!(!l.is_trivial());
    assert!(l.flags.iter().any(|f| f.is_antiperiodic()));
}

#[test]
fn induced_structure_sphere_like() {
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let l = induced_spin_structure(&s).unwrap();
    assert_eq!(l.flags, vec![BoundaryCondition::Antiperiodic]);
}

#[test]
fn curve_dirac_unit_circle() {
    let c = catalog::<f64>("circle", &[("r", 1.0)]).unwrap();
    let s = curve_dirac(&c, 256, &BoundaryCondition::Antiperiodic).unwrap();
    assert!((s.smallest_abs().unwrap() - 0.5).abs() < 1e-10);
    // spectral symmetry
    let lead = s.leading(6);
    assert!((lead[0] + lead[1]).abs() < 1e-12);
    assert!((lead[2] + lead[3]).abs() < 1e-12);
}

#[test]
fn curve_dirac_ellipse_depends_only_on_length() {
    let e = catalog::<f64>("ellipse", &[("a", 2.0), ("b", 1.0)]).unwrap();
    let s = curve_dirac(&e, 512, &BoundaryCondition::Antiperiodic).unwrap();
    let len = 9.688448220547675f64;
    assert!((s.smallest_abs().unwrap() - PI / len).abs() < 1e-8);
}

#[test]
fn revolution_dirac_round_sphere() {
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let label = SpinStructureLabel::all_antiperiodic(1);
    let spec = revolution_dirac(&s, 400, 6, &label, 3.2).unwrap();
    let e = spec.entries();
    assert!((e[0].0 + 1.0).abs() < 1e-4, "lambda = -1, got {}", e[0].0);
    assert_eq!(e[0].1, 2);
    assert!((e[1].0 - 1.0).abs() < 1e-4);
    assert_eq!(e[1].1, 2);
    // next level at +-2 with multiplicity 4 (2 from each of kappa = +-1/2, +-3/2)
    let second: usize = e
        .iter()
        .filter(|(v, _)| (v.abs() - 2.0).abs() < 1e-3)
        .map(|(_, m)| m)
        .sum();
    assert_eq!(second, 8, "multiplicity 4 per sign at |lambda| = 2");
}

#[test]
fn revolution_dirac_scaled_sphere() {
    let s = catalog::<f64>("sphere", &[("rho", 2.0)]).unwrap();
    let label = SpinStructureLabel::all_antiperiodic(1);
    let spec = revolution_dirac(&s, 400, 8, &label, 1.4).unwrap();
    assert!((spec.smallest_abs().unwrap() - 0.5).abs() < 1e-4);
}

#[test]
fn revolution_dirac_sphere_converges_or_hits_floor() {
    // observed order under N -> 2N must be at least 2 unless the error
    // already sits at the accuracy floor
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let label = SpinStructureLabel::all_antiperiodic(1);
    let mut errs = Vec::new();
    for n in [100usize, 200, 400] {
        let spec = revolution_dirac(&s, n, 4, &label, 1.6).unwrap();
        errs.push((spec.smallest_abs().unwrap() - 1.0).abs());
    }
    for w in errs.windows(2) {
        let floor = 1e-10;
        let ok = (w[0] <= floor && w[1] <= floor) || w[1] <= w[0] / 4.0 + floor;
        assert!(ok, "errors {:?} not order-2 compatible", errs);
    }
}

#[test]
fn revolution_dirac_torus_has_no_kernel() {
    let t = catalog::<f64>("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]).unwrap();
    let label = induced_spin_structure(&t).unwrap();
    let spec = revolution_dirac(&t, 200, 4, &label, 1.2).unwrap();
    assert_eq!(spec.kernel_multiplicity(1e-6), 0);
    let s0 = spec.smallest_abs().unwrap();
    assert!(s0 > 0.4, "smallest |lambda| = {s0}");
    // spectral symmetry within discretization tolerance
    let e = spec.entries();
    assert!((e[0].0 + e[1].0).abs() < 1e-9);
}

#[test]
fn revolution_dirac_torus_converges_second_order() {
    let t = catalog::<f64>("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]).unwrap();
    let label = induced_spin_structure(&t).unwrap();
    let mut vals = Vec::new();
    for n in [100usize, 200, 400] {
        let spec = revolution_dirac(&t, n, 2, &label, 0.6).unwrap();
        vals.push(spec.smallest_abs().unwrap());
    }
    // Richardson: successive differences shrink by ~4
    let d1 = (vals[0] - vals[1]).abs();
    let d2 = (vals[1] - vals[2]).abs();
    assert!(d2 < d1 / 3.0, "diffs {d1:.3e} {d2:.3e}");
}

#[test]
fn revolution_window_insufficient_is_reported() {
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let label = SpinStructureLabel::all_antiperiodic(1);
    let err = revolution_dirac(&s, 100, 2, &label, 5.0);
    assert!(matches!(err, Err(crate::error::Error::WindowInsufficient(_))));
}

#[test]
fn laplace_revolution_sphere_matches_closed_form() {
    let s = catalog::<f64>("sphere", &[("rho", 1.0)]).unwrap();
    let spec = laplace_spectrum_revolution(&s, 200, 4, 7.0).unwrap();
    let e = spec.entries();
    assert!(e[0].0.abs() < 1e-9 && e[0].1 == 1, "lambda_0 = 0");
    assert!((e[1].0 - 2.0).abs() < 1e-8 && e[1].1 == 3, "{:?}", &e[..3]);
    assert!((e[2].0 - 6.0).abs() < 1e-7 && e[2].1 == 5);
}

#[test]
fn laplace_revolution_torus_first_eigenvalue_stable() {
    let t = catalog::<f64>("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]).unwrap();
    let a = laplace_spectrum_revolution(&t, 200, 3, 0.8).unwrap();
    let b = laplace_spectrum_revolution(&t, 400, 3, 0.8).unwrap();
    let l1a = a.entries().iter().find(|(v, _)| *v > 1e-6).unwrap().0;
    let l1b = b.entries().iter().find(|(v, _)| *v > 1e-6).unwrap().0;
    assert!(l1a > 0.0);
    assert!((l1a - l1b).abs() < 1e-4, "lambda_1 drift {l1a} vs {l1b}");
    assert_eq!(a.entries()[0].0, 0.0, "lambda_0 = 0 present");
}

#[test]
fn scaling_covariance_closed_forms() {
    for c in [0.5f64, 2.0] {
        let base = model_dirac_spectrum::<f64>(&DiracModel::Circle { length: 2.0 * PI, antiperiodic: true }, 4.0).unwrap();
        let scaled =
            model_dirac_spectrum::<f64>(&DiracModel::Circle { length: 2.0 * PI * c, antiperiodic: true }, 4.0 / c).unwrap();
        for (a, b) in base.leading(6).iter().zip(scaled.leading(6).iter()) {
            assert!((a / c - b).abs() < 1e-8 * a.abs().max(1.0), "Dirac scales as 1/c");
        }
        let lb = model_laplace_spectrum::<f64>(&LaplaceModel::RoundSphere { n: 2, radius: 1.0 }, 13.0).unwrap();
        let ls = model_laplace_spectrum::<f64>(&LaplaceModel::RoundSphere { n: 2, radius: c }, 13.0 / (c * c)).unwrap();
        for (a, b) in lb.leading(5).iter().zip(ls.leading(5).iter()) {
            assert!((a / (c * c) - b).abs() < 1e-8, "Laplace scales as 1/c^2");
        }
    }
}

#[test]
fn discrete_operator_is_hermitian() {
    let t = catalog::<f64>("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]).unwrap();
    if let Some(crate::geometry::RevolutionProfile::TorusLike { arclength_period, radius_of_arclength }) =
        &t.revolution
    {
        let op = super::revolution::torus_mode_operator(
            radius_of_arclength.as_ref(),
            *arclength_period,
            64,
            0.5,
            true,
        )
        .unwrap();
        assert!(op.hermitian_residual() < 1e-12);
        assert_eq!(op.grid_n, 64);
    } else {
        panic!("torus profile missing");
    }
}

#[test]
fn spectrum_ordering_tie_break() {
    let s = Spectrum::dirac(
        vec![(1.0, 1), (-1.0, 1), (0.5, 2), (-2.0, 1)],
        3.0,
        SpectrumSource::ClosedForm,
    );
    let vals: Vec<f64> = s.entries().iter().map(|(v, _)| *v).collect();
    assert_eq!(vals, vec![0.5, -1.0, 1.0, -2.0]);
}

#[test]
fn generic_scalar_f32_closed_form() {
    let s = model_dirac_spectrum(
        &DiracModel::Circle { length: 2.0 * std::f32::consts::PI, antiperiodic: true },
        3.0f32,
    )
    .unwrap();
    assert!((s.smallest_abs().unwrap() - 0.5).abs() < 1e-6);
}
