//! The representation verification table and the paired min-max demo.

use std::fmt::Write as _;

use dirac_bounds::bounds::{pairing_verify, random_pairing_instance};
use dirac_bounds::clifford::{direct_sum_rep, irreducible_rep, verify_clifford, SumModules};
use dirac_bounds::linalg::CMat;
use dirac_bounds::scalar::cr;
use dirac_bounds::spectra::hermitian_eigs;
use dirac_bounds::Result;

/// Builds and verifies every sum construction with `n + m <= limit`;
/// returns the rendered residual table and whether everything passed.
pub fn verify_clifford_table(limit: usize, tol: f64) -> Result<(String, bool)> {
    let mut out = String::new();
    let mut all_pass = true;
    let _ = writeln!(out, "| n | m | case | relation | unitarity | grading | pass |");
    let _ = writeln!(out, "|---|---|------|----------|-----------|---------|------|");
    for n in 1..limit {
        for m in 1..=(limit - n) {
            let e = irreducible_rep::<f64>(n, 0)?;
            let f = irreducible_rep::<f64>(m, 0)?;
            let sum = direct_sum_rep(&e, &f)?;
            let reps: Vec<(&str, _)> = match &sum.modules {
                SumModules::Graded { rep, .. } => vec![("graded", rep.clone())],
                SumModules::Pair { module0, module1 } => {
                    vec![("module0", module0.clone()), ("module1", module1.clone())]
                }
            };
            for (tag, rep) in reps {
                let res = verify_clifford(&rep, tol);
                all_pass &= res.pass;
                let _ = writeln!(
                    out,
                    "| {} | {} | {:?}/{} | {:.3e} | {:.3e} | {:.3e} | {} |",
                    n, m, sum.case_tag, tag, res.relation, res.unitarity, res.grading, res.pass
                );
            }
        }
    }
    Ok((out, all_pass))
}

/// Runs the worked 4x4 example and the randomized suite; returns the
/// rendered summary and whether every conclusion held.
pub fn minmax_demo(seed: u64, trials: usize) -> Result<(String, bool)> {
    let mut out = String::new();
    let mut ok = true;

    // worked example: diag(1,2,3,4), sharp at C = 5/2
    let mut a = CMat::<f64>::zeros(4, 4);
    for (i, v) in [1.0, 2.0, 3.0, 4.0].iter().enumerate() {
        a[(i, i)] = cr(*v);
    }
    let h1 = vec![
        vec![cr(0.0), cr(1.0), cr(1.0), cr(0.0)],
        vec![cr(1.0), cr(0.0), cr(0.0), cr(1.0)],
    ];
    let h2 = vec![
        vec![cr(0.0), cr(1.0), cr(-1.0), cr(0.0)],
        vec![cr(-1.0), cr(0.0), cr(0.0), cr(1.0)],
    ];
    let rep = pairing_verify(&a, &h1, &h2, 2.5, 1e-12)?;
    let _ = writeln!(out, "worked 4x4 example at C = 5/2:");
    let _ = writeln!(out, "  hypotheses hold: {}", rep.hypotheses_hold);
    for (j, v, holds) in &rep.conclusion {
        let _ = writeln!(out, "  pair j = {j}: (l_j + l_(2nu-j+1))/2 = {v:.12} <= 5/2: {holds}");
    }
    let vals = hermitian_eigs(&a)?;
    let stronger = (vals[1] + vals[3]) / 2.0;
    let _ = writeln!(
        out,
        "  unpaired (l_2 + l_4)/2 = {stronger:.12} exceeds 5/2: outside the paired conclusion"
    );
    ok &= rep.hypotheses_hold && rep.conclusion_holds && stronger > 2.5;

    // randomized suite with hypotheses holding by construction
    let mut violations = 0usize;
    for t in 0..trials {
        let (a, h1, h2, c) = random_pairing_instance::<f64>(seed.wrapping_add(t as u64), 8, 2);
        let rep = pairing_verify(&a, &h1, &h2, c, 1e-8)?;
        if !rep.hypotheses_hold || !rep.conclusion_holds {
            violations += 1;
        }
    }
    let _ = writeln!(out, "randomized suite: {trials} instances, {violations} conclusion violations");
    ok &= violations == 0;
    Ok((out, ok))
}
