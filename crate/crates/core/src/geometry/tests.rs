use super::*;
use crate::geometry::quadrature::{build_grid, integrate, integrate_values};

const PI: f64 = std::f64::consts::PI;

fn imm(name: &str, params: &[(&str, f64)]) -> Immersion<f64> {
    catalog(name, params).unwrap()
}

#[test]
fn unit_sphere_mean_curvature_is_one() {
    let s = imm("sphere", &[("rho", 1.0)]);
    for &(t, p) in &[(0.3, 0.1), (1.2, 2.0), (2.8, 5.5)] {
        let g = fundamental_forms(&s, &[t, p]).unwrap();
        assert!((g.mean_curvature_norm() - 1.0).abs() < 1e-10);
    }
    let s2 = imm("sphere", &[("rho", 2.5)]);
    let g = fundamental_forms(&s2, &[1.0, 1.0]).unwrap();
    assert!((g.mean_curvature_norm() - 1.0 / 2.5).abs() < 1e-10);
}

#[test]
fn circle_radius_two_curvature() {
    let c = imm("circle", &[("r", 2.0)]);
    let g = fundamental_forms(&c, &[0.7]).unwrap();
    assert!((g.mean_curvature_norm() - 0.5).abs() < 1e-12);
}

#[test]
fn torus_outer_equator_mean_curvature() {
    // |H| = (R + 2r) / (2 r (R + r)) at the outer equator.
    let t = imm("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]);
    let g = fundamental_forms(&t, &[0.0, 0.3]).unwrap();
    let expect = (2.0 + 2.0) / (2.0 * (2.0 + 1.0));
    assert!((g.mean_curvature_norm() - expect).abs() < 1e-10, "got {}", g.mean_curvature_norm());
}

#[test]
fn frames_are_orthonormal_and_ii_symmetric() {
    for (name, params, u) in [
        ("torus-of-revolution", vec![("R", 2.0), ("r", 1.0)], vec![1.1, 2.2]),
        ("small-sphere-in-sphere", vec![("tau", 0.9)], vec![0.8, 0.4]),
        ("geodesic-sphere-hyperbolic", vec![("r", 0.7)], vec![1.3, 0.2]),
        ("clifford-torus", vec![], vec![0.5, 1.5]),
    ] {
        let m = imm(name, &params);
        let g = fundamental_forms(&m, &u).unwrap();
        let at = &g.point;
        for (i, x) in g.tangent_frame.iter().enumerate() {
            for (j, y) in g.tangent_frame.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((model_inner(&m.ambient, at, x, y) - want).abs() < 1e-10, "{name} tangent");
            }
            for y in &g.normal_frame {
                assert!(model_inner(&m.ambient, at, x, y).abs() < 1e-10, "{name} mixed");
            }
        }
        for (k, x) in g.normal_frame.iter().enumerate() {
            for (l, y) in g.normal_frame.iter().enumerate() {
                let want = if k == l { 1.0 } else { 0.0 };
                assert!((model_inner(&m.ambient, at, x, y) - want).abs() < 1e-10, "{name} normal");
            }
        }
        for i in 0..m.n {
            for j in 0..m.n {
                for k in 0..m.codim() {
                    assert!((g.second_form[i][j][k] - g.second_form[j][i][k]).abs() < 1e-9, "{name} II symmetry");
                }
            }
        }
    }
}

#[test]
fn sphere_volume_and_willmore() {
    let s = imm("sphere", &[("rho", 1.0)]);
    let grid = build_grid(&s, &[64, 128]).unwrap();
    let ones = vec![1.0; grid.len()];
    let vol = integrate_values(&grid, &ones);
    assert!((vol - 4.0 * PI).abs() < 1e-8, "vol {vol}");
    let w = integrate(&s, &grid, |_, g| {
        let h = g.mean_curvature_norm();
        h * h
    })
    .unwrap();
    assert!((w - 4.0 * PI).abs() < 1e-8, "willmore {w}");
}

#[test]
fn torus_willmore_closed_form() {
    // integral of H^2 over the torus = pi^2 R^2 / (r sqrt(R^2 - r^2)).
    let cases = [(2.0, 1.0), (std::f64::consts::SQRT_2, 1.0)];
    for (r_big, r_small) in cases {
        let t = imm("torus-of-revolution", &[("R", r_big), ("r", r_small)]);
        let grid = build_grid(&t, &[128, 128]).unwrap();
        let w = integrate(&t, &grid, |_, g| {
            let h = g.mean_curvature_norm();
            h * h
        })
        .unwrap();
        let exact = PI * PI * r_big * r_big / (r_small * (r_big * r_big - r_small * r_small).sqrt());
        assert!((w - exact).abs() < 1e-8, "R={r_big}: {w} vs {exact}");
    }
}

#[test]
fn quadrature_refinement_stability() {
    for (name, params, res) in [
        ("sphere", vec![("rho", 1.0)], vec![48, 96]),
        ("torus-of-revolution", vec![("R", 2.0), ("r", 1.0)], vec![64, 64]),
        ("ellipse", vec![("a", 2.0), ("b", 1.0)], vec![128]),
        ("ellipsoid-of-revolution", vec![("a", 1.2), ("b", 1.0)], vec![48, 96]),
    ] {
        let m = imm(name, &params);
        let g1 = build_grid(&m, &res).unwrap();
        let res2: Vec<usize> = res.iter().map(|k| 2 * k).collect();
        let g2 = build_grid(&m, &res2).unwrap();
        let meas1 = measure(&m, &g1).unwrap();
        let meas2 = measure(&m, &g2).unwrap();
        assert!((meas1.vol - meas2.vol).abs() < 1e-8, "{name} vol drift");
        assert!((meas1.willmore - meas2.willmore).abs() < 1e-8, "{name} willmore drift");
    }
}

#[test]
fn periodic_directions_close_smoothly() {
    let m = imm("torus-of-revolution", &[("R", 2.0), ("r", 1.0)]);
    let two_pi = 2.0 * PI;
    for v in [0.0, 1.1] {
        let a = m.chart.value(&[0.0, v]);
        let b = m.chart.value(&[two_pi, v]);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-10);
        }
        let ja = m.chart.jacobian(&[0.0, v]);
        let jb = m.chart.jacobian(&[two_pi, v]);
        for (ra, rb) in ja.iter().zip(&jb) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn geodesic_sphere_mean_curvature_is_coth() {
    for r in [0.5, 1.0, 2.0] {
        let m = imm("geodesic-sphere-hyperbolic", &[("r", r)]);
        let grid = build_grid(&m, &[24, 48]).unwrap();
        for u in grid.nodes.iter().step_by(37) {
            let g = fundamental_forms(&m, u).unwrap();
            let coth = 1.0 / r.tanh();
            assert!(
                (g.mean_curvature_norm() - coth).abs() < 1e-8,
                "r={r} |H|={} coth={coth}",
                g.mean_curvature_norm()
            );
        }
    }
}

#[test]
fn geodesic_sphere_hyperbolic_area() {
    // Area of a geodesic sphere of radius r in H^3 is 4 pi sinh^2(r).
    let r = 0.8;
    let m = imm("geodesic-sphere-hyperbolic", &[("r", r)]);
    let grid = build_grid(&m, &[48, 96]).unwrap();
    let ones = vec![1.0; grid.len()];
    let vol = integrate_values(&grid, &ones);
    let exact = 4.0 * PI * r.sinh().powi(2);
    assert!((vol - exact).abs() < 1e-8 * exact, "{vol} vs {exact}");
}

#[test]
fn equatorial_sphere_is_totally_geodesic() {
    let m = imm("equatorial-sphere", &[]);
    let grid = build_grid(&m, &[32, 64]).unwrap();
    for u in grid.nodes.iter().step_by(29) {
        let g = fundamental_forms(&m, u).unwrap();
        assert!(g.mean_curvature_norm() < 1e-10);
        assert!(g.second_form_frobenius() < 1e-10);
    }
}

#[test]
fn small_sphere_mean_curvature_is_cot_tau() {
    let tau = 0.9;
    let m = imm("small-sphere-in-sphere", &[("tau", tau)]);
    let g = fundamental_forms(&m, &[1.0, 2.0]).unwrap();
    assert!((g.mean_curvature_norm() - 1.0 / tau.tan()).abs() < 1e-9);
}

#[test]
fn clifford_torus_is_minimal_with_area_two_pi_squared() {
    let m = imm("clifford-torus", &[]);
    let grid = build_grid(&m, &[48, 48]).unwrap();
    for u in grid.nodes.iter().step_by(17) {
        let g = fundamental_forms(&m, u).unwrap();
        assert!(g.mean_curvature_norm() < 1e-10, "Clifford torus is minimal");
    }
    let ones = vec![1.0; grid.len()];
    let vol = integrate_values(&grid, &ones);
    assert!((vol - 2.0 * PI * PI).abs() < 1e-8);
}

#[test]
fn flat_subtorus_geometry() {
    let m = imm("flat-subtorus", &[]);
    assert!(!m.bounds_region);
    let grid = build_grid(&m, &[16, 16]).unwrap();
    let meas = measure(&m, &grid).unwrap();
    assert!((meas.vol - 1.0).abs() < 1e-12);
    assert!(meas.willmore.abs() < 1e-14);
    assert!(meas.h_inf.abs() < 1e-14);
}

#[test]
fn extrinsic_radius_examples() {
    let s = imm("sphere", &[("rho", 1.0)]);
    let grid = build_grid(&s, &[32, 64]).unwrap();
    let rad = extrinsic_radius(&s, &grid).unwrap();
    assert!((rad.value - 1.0).abs() < 1e-6, "sphere rad {}", rad.value);

    let c = imm("circle", &[("r", 1.7)]);
    let gc = build_grid(&c, &[256]).unwrap();
    let rc = extrinsic_radius(&c, &gc).unwrap();
    assert!((rc.value - 1.7).abs() < 1e-6, "circle rad {}", rc.value);

    let h = imm("geodesic-sphere-hyperbolic", &[("r", 0.7)]);
    let gh = build_grid(&h, &[32, 64]).unwrap();
    let rh = extrinsic_radius(&h, &gh).unwrap();
    assert!((rh.value - 0.7).abs() < 1e-4, "hyperbolic rad {}", rh.value);
}

#[test]
fn willmore_inequality_for_genus_zero_entries() {
    for (name, params) in [
        ("sphere", vec![("rho", 1.0)]),
        ("sphere", vec![("rho", 0.5)]),
        ("ellipsoid-of-revolution", vec![("a", 1.4), ("b", 1.0)]),
        ("ellipsoid-of-revolution", vec![("a", 0.6), ("b", 1.0)]),
    ] {
        let m = imm(name, &params);
        let grid = build_grid(&m, &[48, 96]).unwrap();
        let meas = measure(&m, &grid).unwrap();
        assert!(meas.willmore >= 4.0 * PI - 1e-8, "{name} {params:?}: {}", meas.willmore);
        let is_round = name == "sphere";
        if !is_round {
            assert!(meas.willmore > 4.0 * PI + 1e-4);
        } else {
            assert!((meas.willmore - 4.0 * PI).abs() < 1e-8);
        }
    }
}

#[test]
fn catalog_rejects_bad_input() {
    assert!(catalog::<f64>("moebius", &[]).is_err());
    assert!(catalog::<f64>("torus-of-revolution", &[("R", 1.0), ("r", 1.5)]).is_err());
    assert!(catalog::<f64>("circle", &[("r", -1.0)]).is_err());
}

#[test]
fn grid_mismatch_is_detected() {
    let a = imm("circle", &[("r", 1.0)]);
    let b = imm("ellipse", &[]);
    let grid = build_grid(&a, &[64]).unwrap();
    assert!(integrate(&b, &grid, |_, _| 1.0).is_err());
}

#[test]
fn ellipse_perimeter_matches_elliptic_integral() {
    // L(2, 1) = 9.688448220547675 (complete elliptic integral of the 2nd kind)
    let e = imm("ellipse", &[("a", 2.0), ("b", 1.0)]);
    let grid = build_grid(&e, &[512]).unwrap();
    let ones = vec![1.0; grid.len()];
    let len = integrate_values(&grid, &ones);
    assert!((len - 9.688448220547675).abs() < 1e-9, "{len}");
}
