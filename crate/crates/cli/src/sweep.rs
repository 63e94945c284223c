//! Parameter sweeps over catalog families, one CSV row per step.

use std::fmt::Write as _;

use dirac_bounds::bounds::{bound_imag, bound_real, SurfaceSummary};
use dirac_bounds::geometry::{build_grid, catalog, measure};
use dirac_bounds::spectra::{
    curve_dirac, induced_spin_structure, model_dirac_spectrum, revolution_dirac, DiracModel,
};
use dirac_bounds::{Error, Result};

pub struct SweepConfig {
    pub family: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub grid: usize,
}

/// Runs the sweep and renders the CSV
/// (`parameter, vol, willmore, bound, lambda1_sq, margin`).
const FAMILIES: [&str; 4] = [
    "ellipsoid-of-revolution",
    "torus-of-revolution",
    "fourier-curve",
    "geodesic-sphere-hyperbolic",
];

pub fn sweep(cfg: &SweepConfig) -> Result<String> {
    if cfg.steps < 2 {
        return Err(Error::Config("sweep needs at least 2 steps".into()));
    }
    if !FAMILIES.contains(&cfg.family.as_str()) {
        return Err(Error::Config(format!(
            "unknown sweep family '{}' ({})",
            cfg.family,
            FAMILIES.join(" | ")
        )));
    }
    let mut out = String::new();
    out.push_str("parameter,vol,willmore,bound,lambda1_sq,margin\n");
    for i in 0..cfg.steps {
        let t = cfg.from + (cfg.to - cfg.from) * (i as f64) / ((cfg.steps - 1) as f64);
        match sweep_row(cfg, t) {
            Ok(row) => {
                let _ = writeln!(
                    out,
                    "{t:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e}",
                    row.0, row.1, row.2, row.3, row.2 - row.3
                );
            }
            Err(e) => {
                let _ = writeln!(out, "{t:.12e},skipped: {e},,,,");
            }
        }
    }
    Ok(out)
}

/// One step: `(vol, willmore, bound, lambda1^2)` (for the hyperbolic family
/// the last two are `|lambda|`-mode values).
fn sweep_row(cfg: &SweepConfig, t: f64) -> Result<(f64, f64, f64, f64)> {
    match cfg.family.as_str() {
        "ellipsoid-of-revolution" => {
            let imm = catalog::<f64>("ellipsoid-of-revolution", &[("a", t), ("b", 1.0)])?;
            let grid = build_grid(&imm, &[48, 96])?;
            let meas = measure(&imm, &grid)?;
            let summary = SurfaceSummary::from_geometry(&imm, &meas, None);
            let b = bound_real(imm.ambient, 0.0, &summary)?;
            let label = induced_spin_structure(&imm)?;
            let window = (b.bound + 1.0).sqrt().max(1.6) * 1.1;
            let n = if cfg.grid == 0 { 400 } else { cfg.grid };
            let mut mode_max = 2usize;
            let spec = loop {
                match revolution_dirac(&imm, n, mode_max, &label, window) {
                    Err(Error::WindowInsufficient(_)) if mode_max < 64 => mode_max += 1,
                    other => break other?,
                }
            };
            let l1 = spec.smallest_abs().ok_or_else(|| Error::Degenerate("empty spectrum".into()))?;
            Ok((summary.vol, summary.willmore, b.bound, l1 * l1))
        }
        "torus-of-revolution" => {
            if t <= 1.0 {
                return Err(Error::InvalidArgument("aspect ratio must exceed 1".into()));
            }
            let imm = catalog::<f64>("torus-of-revolution", &[("R", t), ("r", 1.0)])?;
            let grid = build_grid(&imm, &[48, 48])?;
            let meas = measure(&imm, &grid)?;
            let summary = SurfaceSummary::from_geometry(&imm, &meas, None);
            let b = bound_real(imm.ambient, 0.0, &summary)?;
            let label = induced_spin_structure(&imm)?;
            let window = (b.bound + 0.05).sqrt().max(0.4);
            let n = if cfg.grid == 0 { 200 } else { cfg.grid };
            let mut mode_max = 1usize;
            let spec = loop {
                match revolution_dirac(&imm, n, mode_max, &label, window) {
                    Err(Error::WindowInsufficient(_)) if mode_max < 64 => mode_max += 1,
                    other => break other?,
                }
            };
            let l1 = spec.smallest_abs().ok_or_else(|| Error::Degenerate("empty spectrum".into()))?;
            Ok((summary.vol, summary.willmore, b.bound, l1 * l1))
        }
        "fourier-curve" => {
            let imm = catalog::<f64>("fourier-curve", &[("k", 2.0), ("eps", t)])?;
            let grid = build_grid(&imm, &[512])?;
            let meas = measure(&imm, &grid)?;
            let summary = SurfaceSummary::from_geometry(&imm, &meas, None);
            let b = bound_real(imm.ambient, 0.0, &summary)?;
            let label = induced_spin_structure(&imm)?;
            let n = if cfg.grid == 0 { 512 } else { cfg.grid };
            let spec = curve_dirac(&imm, n, &label.flags[0])?;
            let l1 = spec.smallest_abs().unwrap();
            Ok((summary.vol, summary.willmore, b.bound, l1 * l1))
        }
        "geodesic-sphere-hyperbolic" => {
            if t <= 0.0 {
                return Err(Error::InvalidArgument("radius must be positive".into()));
            }
            let imm = catalog::<f64>("geodesic-sphere-hyperbolic", &[("r", t)])?;
            let grid = build_grid(&imm, &[32, 64])?;
            let meas = measure(&imm, &grid)?;
            let summary = SurfaceSummary::from_geometry(&imm, &meas, None);
            let b = bound_imag(imm.ambient, 0.5, &summary)?;
            let spec = model_dirac_spectrum::<f64>(
                &DiracModel::GeodesicSphereHyperbolic { n: 2, r: t },
                (b.bound + 0.1) * 1.1,
            )?;
            let l1 = spec.smallest_abs().unwrap();
            // |lambda|-mode family: report |lambda| rather than its square
            Ok((summary.vol, summary.willmore, b.bound, l1))
        }
        other => Err(Error::Config(format!(
            "unknown sweep family '{other}' (ellipsoid-of-revolution | torus-of-revolution | fourier-curve | geodesic-sphere-hyperbolic)"
        ))),
    }
}
