//! Rendering of case bundles: canonical JSON, CSV flattening (one row per
//! checked eigenvalue), and markdown tables with 12 significant digits.

use std::fmt::Write as _;

use crate::run::CaseBundle;

fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Canonical JSON (serde field order, so byte-identical for identical
/// bundles).
pub fn to_json(bundle: &CaseBundle) -> String {
    serde_json::to_string_pretty(bundle).expect("bundle serializes")
}

/// CSV flattening: one row per checked eigenvalue.
pub fn to_csv(bundle: &CaseBundle) -> String {
    let mut out = String::new();
    out.push_str("case,theorem,asserted,index,eigenvalue,margin,verdict,bound,mode,window\n");
    for row in &bundle.checks {
        let verdict = format!("{:?}", row.report.verdict).to_lowercase();
        let mode = match row.report.spec.mode {
            dirac_bounds::bounds::BoundMode::Squared => "lambda^2",
            dirac_bounds::bounds::BoundMode::Abs => "|lambda|",
        };
        if row.report.eigenvalues.is_empty() {
            let _ = writeln!(
                out,
                "{},{},{},,,,{verdict},{},{mode},{}",
                bundle.case,
                row.report.spec.theorem,
                row.asserted,
                sig12(row.report.spec.bound),
                sig12(row.report.spectrum_window),
            );
        }
        for (i, (l, m)) in row.report.eigenvalues.iter().zip(&row.report.margins).enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{verdict},{},{mode},{}",
                bundle.case,
                row.report.spec.theorem,
                row.asserted,
                i + 1,
                sig12(*l),
                sig12(*m),
                sig12(row.report.spec.bound),
                sig12(row.report.spectrum_window),
            );
        }
    }
    // spectra blocks (index,lambda,mult), separated from the check table
    for s in &bundle.spectra {
        let _ = writeln!(out, "\n# spectrum {} {} window {}", s.operator, s.source, sig12(s.window));
        out.push_str("index,lambda,mult\n");
        for (i, (l, m)) in s.entries.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", i, sig12(*l), m);
        }
    }
    out
}

/// Markdown report of one bundle.
pub fn to_md(bundle: &CaseBundle) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## case `{}`", bundle.case);
    let params: Vec<String> = bundle.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    let _ = writeln!(out, "parameters: {}", if params.is_empty() { "none".into() } else { params.join(", ") });
    if let Some(spin) = &bundle.spin_structure {
        let _ = writeln!(out, "induced spin structure: [{}]", spin.join(", "));
    }
    let s = &bundle.summary;
    let _ = writeln!(out, "\n| n | m | vol | int H^2 | sup H | rad |");
    let _ = writeln!(out, "|---|---|-----|---------|-------|-----|");
    let _ = writeln!(
        out,
        "| {} | {} | {} | {} | {} | {} |",
        s.n,
        s.m,
        sig12(s.vol),
        sig12(s.willmore),
        sig12(s.h_inf),
        s.rad.map(sig12).unwrap_or_else(|| "-".into())
    );

    if !bundle.checks.is_empty() {
        let _ = writeln!(out, "\n### bound checks\n");
        let _ = writeln!(out, "| theorem | mode | bound | mu | first margins | verdict | asserted | window |");
        let _ = writeln!(out, "|---------|------|-------|----|---------------|---------|----------|--------|");
        for row in &bundle.checks {
            let margins: Vec<String> =
                row.report.margins.iter().take(3).map(|m| sig12(*m)).collect();
            let mode = match row.report.spec.mode {
                dirac_bounds::bounds::BoundMode::Squared => "lambda^2",
                dirac_bounds::bounds::BoundMode::Abs => "|lambda|",
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {:?} | {} | {} |",
                row.report.spec.theorem,
                mode,
                sig12(row.report.spec.bound),
                row.report.spec.mu,
                margins.join(" / "),
                row.report.verdict,
                row.asserted,
                sig12(row.report.spectrum_window),
            );
        }
    }

    if let Some(p) = &bundle.pairing {
        let _ = writeln!(out, "\n### paired bound\n");
        let flag = if p.report.hypothesis_violated { " (hypothesis-violated demonstration)" } else { "" };
        let _ = writeln!(out, "bound {} with mu = {}{}", sig12(p.report.bound), p.report.mu, flag);
        let _ = writeln!(out, "| j | pair value | margin |");
        let _ = writeln!(out, "|---|-----------|--------|");
        for (j, v, m) in &p.report.pairs {
            let _ = writeln!(out, "| {} | {} | {} |", j, sig12(*v), sig12(*m));
        }
        let _ = writeln!(out, "verdict: {:?}", p.report.verdict);
    }

    if !bundle.ladder.is_empty() {
        let _ = writeln!(out, "\n### higher-eigenvalue ladder (k = 0 asserted, k >= 1 reported only)\n");
        let _ = writeln!(out, "| k | C_k | index | dirac lambda^2 | within bound |");
        let _ = writeln!(out, "|---|-----|-------|----------------|--------------|");
        for r in &bundle.ladder {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                r.k,
                sig12(r.c_k),
                r.index,
                r.dirac_sq.map(sig12).unwrap_or_else(|| "-".into()),
                r.satisfied.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
            );
        }
    }

    if !bundle.comparisons.is_empty() {
        let _ = writeln!(out, "\n### comparison bounds\n");
        let _ = writeln!(out, "| name | mode | value | note |");
        let _ = writeln!(out, "|------|------|-------|------|");
        for c in &bundle.comparisons {
            let mode = match c.mode {
                dirac_bounds::bounds::BoundMode::Squared => "lambda^2",
                dirac_bounds::bounds::BoundMode::Abs => "|lambda|",
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                c.name,
                mode,
                c.value.map(sig12).unwrap_or_else(|| "unavailable".into()),
                c.note.clone().unwrap_or_default(),
            );
        }
    }

    if !bundle.gap_checks.is_empty() {
        let _ = writeln!(out, "\n### spectral-gap inequality\n");
        let _ = writeln!(out, "| m | gap | rhs | holds |");
        let _ = writeln!(out, "|---|-----|-----|-------|");
        for g in &bundle.gap_checks {
            let _ = writeln!(out, "| {} | {} | {} | {} |", g.m, sig12(g.gap), sig12(g.rhs), g.holds);
        }
    }

    if let Some(lb) = &bundle.lower_bounds {
        let _ = writeln!(out, "\n### lower bounds\n");
        let _ = writeln!(
            out,
            "curvature lower bound: {}",
            lb.friedrich.map(sig12).unwrap_or_else(|| "inapplicable".into())
        );
        let _ = writeln!(
            out,
            "genus-zero area bound: {}",
            lb.genus_zero_area.map(sig12).unwrap_or_else(|| "inapplicable".into())
        );
    }

    if !bundle.willmore.is_empty() {
        let _ = writeln!(out, "\n### Willmore monitors\n");
        let _ = writeln!(out, "| name | lhs | rhs | margin | holds | reported-only |");
        let _ = writeln!(out, "|------|-----|-----|--------|-------|---------------|");
        for w in &bundle.willmore {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                w.name,
                sig12(w.lhs),
                sig12(w.rhs),
                sig12(w.margin),
                w.holds,
                w.reported_only
            );
        }
    }

    if !bundle.diagnostics.is_empty() {
        let _ = writeln!(out, "\n### diagnostics\n");
        let _ = writeln!(out, "| name | value | target | ok | asserted |");
        let _ = writeln!(out, "|------|-------|--------|----|----------|");
        for d in &bundle.diagnostics {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                d.name,
                sig12(d.value),
                d.target.map(sig12).unwrap_or_else(|| "-".into()),
                d.ok.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
                d.asserted
            );
        }
    }

    let _ = writeln!(out, "\nasserted failures: {}\n", bundle.asserted_failures);
    out
}
