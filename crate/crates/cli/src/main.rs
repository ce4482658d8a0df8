//! `bessel-bounds`: evaluate functions and integrals, verify the inequality
//! registry, estimate sharp constants and reproduce the relative-error tables.
//!
//! Exit codes: 0 ok, 1 violations found, 2 usage or domain error, 3 I/O error.

mod config;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use bessel_bounds::integrals::IntegralSpec;
use bessel_bounds::registry::{find_case, list_cases, verify_cases, GridSpec, DEFAULT_TOL};
use bessel_bounds::sharp::{empirical_sup, estimate_a, estimate_b, OpenExpr, SharpConstantEstimate};
use bessel_bounds::specfun::{bessel_i, bessel_k, struve_l, struve_l_minus_i};
use bessel_bounds::tables::{reproduce_table, Table, TABLE_TOL};
use bessel_bounds::{report, EvalResult};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use config::Config;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] bessel_bounds::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

type Res<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "bessel-bounds", version, about = "Modified Bessel and Struve functions and their inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate I_ν, K_ν, L_ν or M_ν = L_ν − I_ν at one point
    Eval {
        /// I, K, L or M
        #[arg(long)]
        func: Option<Func>,
        /// Multiply by e^{−x} (I, L) or e^{x} (K)
        #[arg(long)]
        scaled: bool,
        #[command(flatten)]
        shared: Shared,
    },
    /// Evaluate a weighted Bessel integral
    Integral {
        /// lower-i: ∫₀ˣ e^{βt} t^p I_ν; upper-k: ∫ₓ^∞ e^{βt} t^p K_ν; full-line: ∫ e^{βt}|t|^ν K_ν(|t|)
        #[arg(long)]
        family: Option<FamilyArg>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Check registered inequalities on a grid
    Verify {
        /// Only `all` is defined
        #[arg(long)]
        suite: Option<String>,
        /// Comma-separated case ids (overrides --suite)
        #[arg(long)]
        case: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Estimate a best constant or an empirical supremum
    Sharp {
        /// a, b or sup
        #[arg(long = "const")]
        kind: Option<ConstArg>,
        /// open1 or open3 (with --const sup)
        #[arg(long)]
        expr: Option<OpenExpr>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Reproduce the relative-error tables
    Tables {
        /// Comma-separated table numbers
        #[arg(long)]
        which: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
}

#[derive(Args)]
struct Shared {
    /// Order ν
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
    /// Drift of the weight e^{βt}
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Decay rate; same as --beta −γ
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    /// Evaluation point (upper search limit for `sharp --const sup`)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// Exponent p of t in integrals
    #[arg(long, allow_hyphen_values = true)]
    power: Option<f64>,
    /// Order shift n for cases comparing ν and ν + n
    #[arg(long, allow_hyphen_values = true)]
    n: Option<f64>,
    /// Violation tolerance on the relative margin
    #[arg(long)]
    tol: Option<f64>,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long)]
    format: Option<Format>,
    /// key = value file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// Include reference values and differences
    #[arg(long)]
    compare: bool,
}

macro_rules! keyword_enum {
    ($name:ident, $what:literal { $($variant:ident => [$($s:literal),+]),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq)]
        enum $name { $($variant),+ }

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s.trim() {
                    $($($s)|+ => Ok($name::$variant),)+
                    other => Err(format!(concat!("unknown ", $what, " `{}`"), other)),
                }
            }
        }
    };
}

keyword_enum!(Func, "function" { I => ["I", "i"], K => ["K", "k"], L => ["L", "l"], M => ["M", "m"] });
keyword_enum!(FamilyArg, "integral family" {
    LowerI => ["lower-i", "lower_i"],
    UpperK => ["upper-k", "upper_k"],
    FullLine => ["full-line", "full_line"],
});
keyword_enum!(ConstArg, "constant" { A => ["a"], B => ["b"], Sup => ["sup"] });
keyword_enum!(Format, "format" { Csv => ["csv"], Json => ["json"] });

/// Shared flags merged with the config file.
struct Settings {
    cfg: Config,
    nu: Option<f64>,
    beta: Option<f64>,
    x: Option<f64>,
    power: Option<f64>,
    n: Option<f64>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    format: Format,
    compare: bool,
}

impl Settings {
    fn resolve(s: Shared) -> Res<Self> {
        let cfg = match &s.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let beta = cfg.pick(s.beta, "beta")?;
        let gamma = cfg.pick(s.gamma, "gamma")?;
        let beta = match (beta, gamma) {
            (Some(_), Some(_)) => return Err(CliError::Usage("give either --beta or --gamma, not both".into())),
            (b, g) => b.or(g.map(|g: f64| -g)),
        };
        Ok(Settings {
            nu: cfg.pick(s.nu, "nu")?,
            beta,
            x: cfg.pick(s.x, "x")?,
            power: cfg.pick(s.power, "power")?,
            n: cfg.pick(s.n, "n")?,
            tol: cfg.pick(s.tol, "tol")?,
            out: cfg.pick(s.out, "out")?,
            format: cfg.pick(s.format, "format")?.unwrap_or(Format::Csv),
            compare: cfg.switch(s.compare, "compare")?,
            cfg,
        })
    }

    fn require(v: Option<f64>, flag: &str) -> Res<f64> {
        v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
    }

    fn emit(&self, text: &str) -> Res<()> {
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes()).map_err(|e| CliError::io(Path::new("<stdout>"), e))
            }
        }
    }
}

/// Shortest round-trip form, or decimal-exponent form beyond f64 range.
fn scaled_json(v: bessel_bounds::ScaledReal) -> Value {
    let f = v.to_f64();
    if f.is_finite() && (f == 0.0) == v.is_zero() {
        json!(f)
    } else {
        json!(v.to_string())
    }
}

fn status_str(r: &EvalResult) -> &'static str {
    if r.is_ok() {
        "ok"
    } else {
        "reduced_accuracy"
    }
}

fn one_row_csv(head: &[&str], row: &[String]) -> String {
    format!("{}\n{}\n", head.join(","), row.join(","))
}

fn cmd_eval(func: Option<Func>, scaled: bool, st: Settings) -> Res<u8> {
    let func = st.cfg.pick(func, "func")?.ok_or_else(|| CliError::Usage("missing --func".into()))?;
    let scaled = st.cfg.switch(scaled, "scaled")?;
    let (nu, x) = (Settings::require(st.nu, "nu")?, Settings::require(st.x, "x")?);
    let r = match func {
        Func::I => bessel_i(nu, x, scaled)?,
        Func::K => bessel_k(nu, x, scaled)?,
        Func::L => struve_l(nu, x, scaled)?,
        Func::M if scaled => return Err(CliError::Usage("M has no scaled form".into())),
        Func::M => struve_l_minus_i(nu, x)?,
    };
    let name = format!("{func:?}");
    let text = match st.format {
        Format::Csv => one_row_csv(
            &["func", "nu", "x", "scaled", "value", "abs_err", "status"],
            &[
                name,
                nu.to_string(),
                x.to_string(),
                scaled.to_string(),
                report::scaled_num(r.value),
                report::scaled_num(r.abs_err),
                status_str(&r).into(),
            ],
        ),
        Format::Json => report::to_json_string(&json!({
            "func": name, "nu": nu, "x": x, "scaled": scaled,
            "value": scaled_json(r.value), "abs_err": scaled_json(r.abs_err), "status": status_str(&r),
        })),
    };
    st.emit(&text)?;
    Ok(0)
}

fn cmd_integral(family: Option<FamilyArg>, st: Settings) -> Res<u8> {
    let family = st.cfg.pick(family, "family")?.unwrap_or(FamilyArg::LowerI);
    let nu = Settings::require(st.nu, "nu")?;
    let beta = st.beta.unwrap_or(0.0);
    let spec = match family {
        FamilyArg::FullLine => IntegralSpec::full_line_k(nu, beta),
        _ => {
            let x = Settings::require(st.x, "x")?;
            // t^ν is the natural weight for both one-sided families
            let p = st.power.unwrap_or(nu);
            if family == FamilyArg::LowerI {
                IntegralSpec::lower_i(nu, beta, p, x)
            } else {
                IntegralSpec::upper_k(nu, beta, p, x)
            }
        }
    };
    let r = spec.evaluate()?;
    let fam = serde_json::to_value(spec.family).expect("family serialises");
    let fam = fam.as_str().unwrap_or_default().to_string();
    let text = match st.format {
        Format::Csv => one_row_csv(
            &["family", "nu", "beta", "power", "x", "value", "abs_err", "status"],
            &[
                fam,
                nu.to_string(),
                beta.to_string(),
                spec.p.to_string(),
                spec.x.to_string(),
                report::scaled_num(r.value),
                report::scaled_num(r.abs_err),
                status_str(&r).into(),
            ],
        ),
        Format::Json => report::to_json_string(&json!({
            "family": fam, "nu": nu, "beta": beta, "power": spec.p, "x": spec.x,
            "value": scaled_json(r.value), "abs_err": scaled_json(r.abs_err), "status": status_str(&r),
        })),
    };
    st.emit(&text)?;
    Ok(0)
}

fn cmd_verify(suite: Option<String>, case: Option<String>, st: Settings) -> Res<u8> {
    let suite: Option<String> = st.cfg.pick(suite, "suite")?;
    let case: Option<String> = st.cfg.pick(case, "case")?;
    let cases = match case {
        Some(ids) => ids.split(',').map(|id| find_case(id.trim())).collect::<Result<Vec<_>, _>>()?,
        None => match suite.as_deref().unwrap_or("all") {
            "all" => list_cases(),
            other => return Err(CliError::Usage(format!("unknown suite `{other}` (expected all)"))),
        },
    };
    let mut grid = GridSpec::default();
    for (v, axis) in [(st.nu, &mut grid.nu), (st.beta, &mut grid.beta), (st.n, &mut grid.n), (st.x, &mut grid.x)] {
        if let Some(v) = v {
            *axis = vec![v];
        }
    }
    let tol = st.tol.unwrap_or(DEFAULT_TOL);
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be a non-negative number, got {tol}")));
    }
    let rep = verify_cases(&cases, &grid, tol)?;
    let text = match st.format {
        Format::Csv => report::records_csv(&rep.records),
        Format::Json => report::to_json_string(&report::report_json(&rep)),
    };
    st.emit(&text)?;
    eprintln!(
        "{} records, {} violations, {} equality breaks, {} failures",
        rep.records.len(),
        rep.violations.len(),
        rep.equality_breaks.len(),
        rep.failures.len()
    );
    for f in &rep.failures {
        eprintln!("failure: {} at {:?}: {}", f.id, f.params, f.message);
    }
    Ok(if rep.is_clean() { 0 } else { 1 })
}

fn estimate_csv(e: &SharpConstantEstimate) -> String {
    let kind = serde_json::to_value(e.kind).expect("kind serialises");
    one_row_csv(
        &["kind", "nu", "beta", "value", "lo", "hi", "argmin_x", "label"],
        &[
            kind.as_str().unwrap_or_default().to_string(),
            e.nu.to_string(),
            e.beta.map(|b| b.to_string()).unwrap_or_default(),
            report::num(e.value),
            report::num(e.bracket[0]),
            report::num(e.bracket[1]),
            e.argmin_x.to_string(),
            e.label.unwrap_or_default().to_string(),
        ],
    )
}

fn cmd_sharp(kind: Option<ConstArg>, expr: Option<OpenExpr>, st: Settings) -> Res<u8> {
    let kind = st.cfg.pick(kind, "const")?.ok_or_else(|| CliError::Usage("missing --const".into()))?;
    let nu = Settings::require(st.nu, "nu")?;
    let est = match kind {
        ConstArg::A => estimate_a(nu)?,
        ConstArg::B => estimate_b(nu)?,
        ConstArg::Sup => {
            let expr = st.cfg.pick(expr, "expr")?.ok_or_else(|| CliError::Usage("missing --expr".into()))?;
            let beta = Settings::require(st.beta, "beta")?;
            empirical_sup(expr, nu, beta, st.x.unwrap_or(500.0))?
        }
    };
    let text = match st.format {
        Format::Csv => estimate_csv(&est),
        Format::Json => report::to_json_string(&serde_json::to_value(&est).expect("estimate serialises")),
    };
    st.emit(&text)?;
    Ok(0)
}

fn cmd_tables(which: Option<String>, st: Settings) -> Res<u8> {
    let which: String = st.cfg.pick(which, "which")?.unwrap_or_else(|| "1,2".into());
    let mut tables = Vec::new();
    for w in which.split(',') {
        let t: Table = w.parse()?;
        if !tables.contains(&t) {
            tables.push(t);
        }
    }
    let cells: Vec<_> = tables.iter().map(|&t| reproduce_table(t)).collect();
    let text = match st.format {
        Format::Csv => report::table_csv(&cells.concat(), st.compare),
        Format::Json => report::to_json_string(&report::tables_json(&cells, st.compare)),
    };
    st.emit(&text)?;
    if st.compare {
        let worst = cells.iter().flatten().filter_map(|c| c.diff()).fold(0.0, f64::max);
        eprintln!("max |diff| = {worst:.4}");
        if worst > TABLE_TOL + 1e-12 {
            return Ok(1);
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Res<u8> {
    match cli.command {
        Command::Eval { func, scaled, shared } => cmd_eval(func, scaled, Settings::resolve(shared)?),
        Command::Integral { family, shared } => cmd_integral(family, Settings::resolve(shared)?),
        Command::Verify { suite, case, shared } => cmd_verify(suite, case, Settings::resolve(shared)?),
        Command::Sharp { kind, expr, shared } => cmd_sharp(kind, expr, Settings::resolve(shared)?),
        Command::Tables { which, shared } => cmd_tables(which, Settings::resolve(shared)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
