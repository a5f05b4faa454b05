//! The `okounkov-lab` command line: configuration ingestion, command dispatch
//! and serialization.
//!
//! Exit status is 0 on success, 1 when `check` finds a violated invariant, 2 for
//! usage or schema errors and 3 for computational errors.

mod check;
mod config;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::filtered::{extract_invariants, integrated_volume, ivf_mass_table, jumping_profile, mass_plus, MassMethod};
use crate::geomcore::{int, Rational, RationalPolytope};
use crate::okounkov::{gauges, nakayama_mu, okounkov_body, seshadri_estimate, BodyReport, FlagKind};

pub use check::{run_checks, CheckReport, CheckResult};
pub use config::{validate, Format, JobConfig, SeriesSpec, DEFAULT_M_MAX};
pub use output::{Output, Table};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{location}: {path}: {message}")]
    Schema { location: String, path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("invariant violations:\n  {}", .0.join("\n  "))]
    Violations(Vec<String>),
}

impl CliError {
    pub(crate) fn schema(file: Option<&str>, line: usize, path: &str, message: impl Into<String>) -> Self {
        let file = file.unwrap_or("<config>");
        let location = if line == 0 { file.to_string() } else { format!("{file}:{line}") };
        CliError::Schema { location, path: path.to_string(), message: message.into() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violations(_) => 1,
            CliError::Schema { .. } | CliError::Usage(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Okounkov body for the coordinate flag
    Body,
    /// Infinitesimal Okounkov body
    Infbody,
    /// ξ, ξ̃, μ and the Seshadri estimate
    Gauges,
    /// Jet separation per degree
    Jets,
    /// Jumping numbers and bounded mass
    Mass,
    /// Integrated volume function and extracted invariants
    Ivf,
    /// Full invariant suite
    Check,
}

#[derive(Debug, Parser)]
#[command(name = "okounkov-lab", version, about = "Exact Okounkov bodies and local positivity of monomial series")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long = "m-max")]
    pub m_max: Option<u32>,
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn body_output(report: &BodyReport) -> Result<Output, CliError> {
    let poly = report.body.to_json().map_err(compute)?;
    let json = serde_json::to_value(&poly).expect("polytope json is serializable");
    let dim = report.body.dim();
    let mut header = Vec::new();
    for k in 1..=dim {
        header.push(format!("x{k}"));
        header.push(format!("x{k}_exact"));
    }
    let mut table = Table { header, rows: Vec::new() };
    for v in report.body.vertices() {
        table.push(v.iter().flat_map(|x| [output::decimal(x), output::exact(x)]).collect());
    }
    Ok(Output { json, table })
}

fn default_grid(cfg: &JobConfig, mu: &Rational) -> Vec<Rational> {
    cfg.t_grid.clone().unwrap_or_else(|| {
        let top = (mu * int(10)).floor().to_integer();
        let top = i64::try_from(top).unwrap_or(0);
        (0..=top).map(|k| int(k) / int(10)).collect()
    })
}

/// Computes the artifact of one command; `check` also reports its violations.
pub fn execute(command: Command, cfg: &JobConfig) -> Result<(Output, Vec<String>), CliError> {
    let series = cfg.build_series();
    let n = cfg.model.dim();
    let m_max = cfg.m_max;
    let out = match command {
        Command::Body | Command::Infbody => {
            let kind = if command == Command::Body { FlagKind::Coordinate } else { FlagKind::Infinitesimal };
            let report = okounkov_body(&series, &cfg.flag(kind), m_max).map_err(compute)?;
            if !report.stabilized {
                eprintln!("note: truncated hull not stabilized between m = {} and m = {m_max}", m_max / 2);
            }
            body_output(&report)?
        }
        Command::Gauges => {
            let xi = gauges(&series, &cfg.flag(FlagKind::Coordinate), m_max).map_err(compute)?;
            let xi_tilde = gauges(&series, &cfg.flag(FlagKind::Infinitesimal), m_max).map_err(compute)?;
            let mu = nakayama_mu(&series, m_max).map_err(compute)?;
            let eps = seshadri_estimate(&series, m_max).map_err(compute)?;
            let json = json!({
                "xi": output::pair(&xi),
                "xitilde": output::pair(&xi_tilde),
                "mu": output::pair(&mu),
                "seshadri_estimate": output::pair(&eps.value),
                "seshadri_stabilized": eps.stabilized,
            });
            let mut table = Table::new(&["name", "value", "value_exact"]);
            for (name, v) in [("xi", &xi), ("xitilde", &xi_tilde), ("mu", &mu), ("seshadri_estimate", &eps.value)] {
                table.push(vec![name.into(), output::decimal(v), output::exact(v)]);
            }
            Output { json, table }
        }
        Command::Jets => {
            let eps = seshadri_estimate(&series, m_max).map_err(compute)?;
            let rows: Vec<_> = eps.jets.iter().map(|&(m, s)| json!({ "m": m, "s": s })).collect();
            let json = json!({
                "jets": rows,
                "seshadri_estimate": output::pair(&eps.value),
                "stabilized": eps.stabilized,
            });
            let mut table = Table::new(&["m", "s_m"]);
            for (m, s) in &eps.jets {
                table.push(vec![m.to_string(), s.to_string()]);
            }
            Output { json, table }
        }
        Command::Mass => {
            let profile = jumping_profile(&series, m_max).map_err(compute)?;
            let mu = nakayama_mu(&series, m_max).map_err(compute)?;
            let scale = int(m_max as i64);
            let mut table = Table::new(&["table", "index", "t", "t_exact", "value", "value_exact"]);
            for (l, e) in profile.e.iter().enumerate() {
                table.push(vec!["e".into(), (l + 1).to_string(), String::new(), String::new(), output::decimal(e), output::exact(e)]);
            }
            let mut masses = Vec::new();
            for t in default_grid(cfg, &mu) {
                let v = mass_plus(&profile, &(&t * &scale), MassMethod::Closed).map_err(compute)?;
                table.push(vec![
                    "mass".into(),
                    String::new(),
                    output::decimal(&t),
                    output::exact(&t),
                    output::decimal(&v),
                    output::exact(&v),
                ]);
                masses.push(json!({ "t": output::pair(&t), "mass": output::pair(&v) }));
            }
            let json = json!({
                "m": profile.m,
                "e": output::pairs(&profile.e),
                "alpha": output::pairs(&profile.alpha),
                "beta": profile.beta,
                "n_jumps": profile.n_jumps(),
                "mass": masses,
            });
            Output { json, table }
        }
        Command::Ivf => {
            let phi = integrated_volume(&series, m_max).map_err(compute)?;
            let inv = extract_invariants(&phi, n);
            let mu = nakayama_mu(&series, m_max).map_err(compute)?;
            let grid = default_grid(cfg, &mu);
            let mut table = Table::new(&["table", "m", "t", "t_exact", "value", "value_exact"]);
            let mut values = Vec::new();
            for t in &grid {
                let v = phi.eval(t);
                table.push(vec![
                    "phi".into(),
                    String::new(),
                    output::decimal(t),
                    output::exact(t),
                    output::decimal(&v),
                    output::exact(&v),
                ]);
                values.push(json!({ "t": output::pair(t), "value": output::pair(&v) }));
            }
            let mut approx = Vec::new();
            for t in &grid {
                for (m, v) in ivf_mass_table(&series, &cfg.degrees(), t).map_err(compute)? {
                    table.push(vec![
                        "mass_approx".into(),
                        m.to_string(),
                        output::decimal(t),
                        output::exact(t),
                        output::decimal(&v),
                        output::exact(&v),
                    ]);
                    approx.push(json!({ "m": m, "t": output::pair(t), "value": output::pair(&v) }));
                }
            }
            let json = json!({
                "phi": output::piecewise(&phi),
                "values": values,
                "mu": output::root(&inv.mu),
                "seshadri": output::root(&inv.seshadri),
                "volume": output::piecewise(&inv.volume),
                "mass_approx": approx,
            });
            Output { json, table }
        }
        Command::Check => {
            let report = run_checks(cfg)?;
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "ok": c.ok, "detail": c.detail }))
                .collect();
            let failures = report.failures();
            let json = json!({
                "passed": failures.is_empty(),
                "xi": output::pair(&report.xi),
                "xitilde": output::pair(&report.xi_tilde),
                "mu": output::pair(&report.mu),
                "epsilon": output::pair(&report.epsilon),
                "checks": checks,
            });
            let mut table = Table::new(&["name", "ok", "detail"]);
            for c in &report.checks {
                table.push(vec![c.name.into(), c.ok.to_string(), c.detail.replace(',', ";")]);
            }
            return Ok((Output { json, table }, failures));
        }
    };
    Ok((out, Vec::new()))
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => out.table.to_csv(),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("OKOUNKOV_THREADS") else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| CliError::Usage(format!("OKOUNKOV_THREADS must be a positive integer, got {raw:?}")))?;
    // a pool built earlier in the same process is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Loads the configuration, applies overrides, runs the command and writes its output.
pub fn run(args: &Args) -> Result<(), CliError> {
    configure_threads()?;
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.config.display())))?;
    let name = args.config.display().to_string();
    let mut cfg = validate(&text, Some(&name))?;
    if let Some(m) = args.m_max {
        cfg.set_m_max(m)?;
    }
    if let Some(f) = args.format {
        cfg.format = f;
    }
    if let Some(p) = &args.out {
        cfg.out = Some(p.clone());
    }
    let (out, failures) = execute(args.command, &cfg)?;
    let text = render(&out, cfg.format);
    match &cfg.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violations(failures))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Compute(format!("cannot write {}: {e}", path.display())))
}

/// Entry point shared by the binary: parses `argv`, runs, and maps errors to exit codes.
pub fn main_from<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("okounkov-lab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Parses a polytope emitted by `body` or `infbody`.
pub fn parse_polytope(text: &str) -> Result<RationalPolytope, CliError> {
    let json = serde_json::from_str(text).map_err(|e| CliError::Usage(e.to_string()))?;
    RationalPolytope::from_json(&json).map_err(compute)
}
