//! Command-line harness wiring catalog geometry, spectra, Killing fields
//! and bound checks into reproducible runs, sweeps and reports.
//!
//! Exit codes: 0 when every asserted check passes, 2 when an asserted
//! check fails, 3 on configuration errors.

mod config;
mod demo;
mod render;
mod run;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{apply_overrides, parse_config_file, Format, RunConfig};
use dirac_bounds::Error;

#[derive(Parser)]
#[command(name = "dirac-bounds", version, about = "extrinsic eigenvalue bounds, checked against model spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Output format: json, csv or md
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value config file overriding defaults
    #[arg(long)]
    config: Option<PathBuf>,
    /// Grid size (per direction) of the discretized solvers
    #[arg(long, default_value_t = 0)]
    grid: usize,
    /// Angular mode cap (0 = choose automatically from the window)
    #[arg(long, default_value_t = 0)]
    modes: usize,
    /// Check tolerance
    #[arg(long, default_value_t = 1e-6, allow_negative_numbers = true)]
    tol: f64,
    /// Seed for randomized suites
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args, Clone)]
struct CaseParams {
    /// Radius (circle, geodesic spheres)
    #[arg(long)]
    r: Option<f64>,
    /// Sphere radius
    #[arg(long)]
    rho: Option<f64>,
    /// First semi-axis / polar semi-axis
    #[arg(long)]
    a: Option<f64>,
    /// Second semi-axis / equatorial radius
    #[arg(long)]
    b: Option<f64>,
    /// Major torus radius
    #[arg(long = "R")]
    big_r: Option<f64>,
    /// Latitude parameter of distance spheres in the 3-sphere
    #[arg(long)]
    tau: Option<f64>,
    /// Harmonic index of the perturbed curve
    #[arg(long)]
    k: Option<f64>,
    /// Harmonic amplitude of the perturbed curve
    #[arg(long)]
    eps: Option<f64>,
}

impl CaseParams {
    fn collect(&self) -> Vec<(String, f64)> {
        let mut out = Vec::new();
        let pairs: [(&str, Option<f64>); 8] = [
            ("r", self.r),
            ("rho", self.rho),
            ("a", self.a),
            ("b", self.b),
            ("R", self.big_r),
            ("tau", self.tau),
            ("k", self.k),
            ("eps", self.eps),
        ];
        for (k, v) in pairs {
            if let Some(v) = v {
                out.push((k.to_string(), v));
            }
        }
        out
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable bound check for one catalog case
    Check {
        /// Catalog case name
        #[arg(long)]
        case: String,
        #[command(flatten)]
        params: CaseParams,
        /// Treat reported-only rows as asserted (for demonstrations)
        #[arg(long, default_value_t = false)]
        assert_reported: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Sweep a one-parameter family and emit a CSV
    Sweep {
        /// Family: ellipsoid-of-revolution, torus-of-revolution,
        /// fourier-curve or geodesic-sphere-hyperbolic
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify the Clifford relations of every sum construction up to
    /// total dimension 8
    VerifyClifford {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Worked paired min-max example plus the randomized suite
    MinmaxDemo {
        /// Number of randomized instances
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Render bundles: either previously saved JSON files or the default
    /// catalog
    Report {
        /// JSON bundle files produced by `check --out`
        #[arg(long = "in", num_args = 0..)]
        inputs: Vec<PathBuf>,
        /// Run and render the built-in default catalog
        #[arg(long, default_value_t = false)]
        default_catalog: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn write_out(common: &CommonOpts, text: &str) -> Result<(), Error> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_config(
    case: &str,
    params: Vec<(String, f64)>,
    assert_reported: bool,
    common: &CommonOpts,
) -> Result<RunConfig, Error> {
    let mut cfg = RunConfig {
        case: case.to_string(),
        params,
        grid: common.grid,
        modes: common.modes,
        tol: common.tol,
        seed: common.seed,
        format: common.format.parse()?,
        assert_reported,
    };
    if let Some(path) = &common.config {
        let kv = parse_config_file(path)?;
        apply_overrides(&mut cfg, &kv)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    // argument errors are configuration errors (exit 3); help and version
    // remain successful
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0u8,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { case, params, assert_reported, common } => {
            let cfg = build_config(&case, params.collect(), assert_reported, &common)?;
            let bundle = run::run_case(&cfg)?;
            let text = match cfg.format {
                Format::Json => render::to_json(&bundle),
                Format::Csv => render::to_csv(&bundle),
                Format::Md => render::to_md(&bundle),
            };
            write_out(&common, &text)?;
            Ok(if bundle.asserted_failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Sweep { family, from, to, steps, common } => {
            let cfg = sweep::SweepConfig { family, from, to, steps, grid: common.grid };
            let csv = sweep::sweep(&cfg)?;
            write_out(&common, &csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyClifford { common } => {
            let (table, pass) = demo::verify_clifford_table(8, 1e-12)?;
            write_out(&common, &table)?;
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::MinmaxDemo { trials, common } => {
            let (text, ok) = demo::minmax_demo(common.seed, trials)?;
            write_out(&common, &text)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Report { inputs, default_catalog, common } => {
            let format: Format = common.format.parse()?;
            let mut rendered = String::new();
            let mut failures = 0usize;
            if default_catalog {
                for (case, params) in run::default_catalog() {
                    let cfg = RunConfig {
                        case: case.to_string(),
                        params,
                        grid: common.grid,
                        modes: common.modes,
                        tol: common.tol,
                        seed: common.seed,
                        format,
                        assert_reported: false,
                    };
                    let bundle = run::run_case(&cfg)?;
                    failures += bundle.asserted_failures;
                    match format {
                        Format::Md => rendered.push_str(&render::to_md(&bundle)),
                        Format::Csv => rendered.push_str(&render::to_csv(&bundle)),
                        Format::Json => {
                            rendered.push_str(&render::to_json(&bundle));
                            rendered.push('\n');
                        }
                    }
                }
            } else {
                if inputs.is_empty() {
                    return Err(Error::Config("report needs --in files or --default-catalog".into()));
                }
                for path in &inputs {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                    let value: serde_json::Value = serde_json::from_str(&text)
                        .map_err(|e| Error::Config(format!("{} is not a JSON bundle: {e}", path.display())))?;
                    match format {
                        Format::Json => {
                            rendered.push_str(&serde_json::to_string_pretty(&value).unwrap());
                            rendered.push('\n');
                        }
                        _ => {
                            return Err(Error::Config(
                                "re-rendering saved bundles is supported for json; use --default-catalog for md/csv"
                                    .into(),
                            ))
                        }
                    }
                }
            }
            write_out(&common, &rendered)?;
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}
