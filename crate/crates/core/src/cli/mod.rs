//! Command surface of the `quadexp` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns the text it
//! would print together with the process exit code, so the whole surface is
//! testable without spawning a process. Exit codes: 0 success, 1 domain or
//! precondition error, 2 configuration or usage error.

mod config;
mod emit;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::analysis::{
    delta_chain, distance_d, log_distance, midpoint, midpoint_value_exponent, mirrored_chain_g,
    solve_distance_equals_value, LogDistance,
};
use crate::enclosure::{render_exp, Rendered};
use crate::error::Error;
use crate::exact::{compute_abs_a, exponent_at, parse_rational, ParamCombo};
use crate::family::{build_increasing_sequence, find_partner, invert_target, run_claims, GridBounds};

pub use config::{ConfigError, OutputFormat, RunConfig};
pub use emit::{
    emit_figure1, emit_figure2, figure1_rows, figure2_rows, Figure1Row, Figure2Row,
    FIGURE1_HEADER, FIGURE2_HEADER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quadexp", version, about = "Exact checks for quadratic exponential families")]
pub struct Cli {
    /// Flat key=value config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Decimal digits for rendered real values.
    #[arg(long, global = true)]
    precision: Option<usize>,
    #[arg(long, global = true)]
    solver_tolerance: Option<f64>,
    /// Bisection bracket width, as a rational such as 1/1000000000.
    #[arg(long, global = true)]
    bisection_tolerance: Option<String>,
    #[arg(long, global = true)]
    k_max: Option<u32>,
    #[arg(long, global = true)]
    m_max: Option<u64>,
    #[arg(long, global = true)]
    u_max: Option<i64>,
    /// csv or json (figure emitters).
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ComboArgs {
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 2)]
    m: u64,
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    u: i64,
    #[arg(long = "N", default_value_t = ParamCombo::DEFAULT_N)]
    n: u32,
}

impl ComboArgs {
    fn combo(&self) -> Result<ParamCombo, Error> {
        ParamCombo::new(self.k, self.m, self.u, self.n)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact exponent of f at x, with e^exponent rendered on demand.
    Eval {
        #[command(flatten)]
        combo: ComboArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: String,
    },
    /// Combinations with |A| equal to the target.
    Invert {
        #[arg(long)]
        n: u64,
    },
    /// The natural number sharing f(1).
    Partner {
        #[command(flatten)]
        combo: ComboArgs,
    },
    /// Midpoint theta of [1, |A|] and the exponent there.
    Midpoint {
        #[command(flatten)]
        combo: ComboArgs,
    },
    /// Mirror chain f(1 + d) = f(|A| - d) for increasing offsets.
    DeltaChain {
        #[command(flatten)]
        combo: ComboArgs,
        /// Comma-separated rationals, e.g. "1/2,1".
        #[arg(long, default_value = "")]
        deltas: String,
    },
    /// Distance |A| - 1 and enclosures of its logarithm.
    Distance {
        #[command(flatten)]
        combo: ComboArgs,
        /// Use this Z directly instead of the combination's.
        #[arg(long)]
        z: Option<String>,
        #[arg(long, default_value_t = 50)]
        terms: u32,
    },
    /// Real u, m for which the distance equals f(|A|).
    SolveDistance {
        #[arg(long)]
        z: f64,
        /// E = N·k - 2.
        #[arg(long)]
        e: u32,
    },
    /// Run every claim over the grid and report verdicts.
    Claims {
        /// "default" (config bounds) or "k_max,m_max,u_max".
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// Rows (p, k, m, u, N, x, exponent) at x = 1 and at the partner.
    EmitFigure1 {
        /// "k,m,u[,N];..." (defaults to k=1, u=2, m = 2..=m_max).
        #[arg(long)]
        combos: Option<String>,
    },
    /// Rows (p, absA, exponent_at_1) sorted by |A|.
    EmitFigure2 {
        #[arg(long)]
        combos: Option<String>,
    },
}

/// Text produced by one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Config(String),
    Domain(Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = resolve_config(&cli).and_then(|config| {
        let text = execute(&cli.command, &config)?;
        match &config.output {
            Some(path) => {
                std::fs::write(path, &text)
                    .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
                Ok(String::new())
            }
            None => Ok(text),
        }
    });
    match result {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(Failure::Config(msg)) => {
            Outcome { code: EXIT_CONFIG, stdout: String::new(), stderr: format!("config error: {msg}\n") }
        }
        Err(Failure::Domain(e)) => {
            Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(p) = cli.precision {
        config.precision = p;
    }
    if let Some(t) = cli.solver_tolerance {
        config.solver_tolerance = t;
    }
    if let Some(t) = &cli.bisection_tolerance {
        config.set("bisection_tolerance", t)?;
    }
    if let Some(k) = cli.k_max {
        config.bounds.k_max = k;
    }
    if let Some(m) = cli.m_max {
        config.bounds.m_max = m;
    }
    if let Some(u) = cli.u_max {
        config.bounds.u_max = u;
    }
    if let Some(f) = &cli.format {
        config.format = f.parse()?;
    }
    if let Some(o) = &cli.output {
        config.output = Some(o.clone());
    }
    config.validate()?;
    Ok(config)
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn interval_json(iv: &crate::enclosure::Interval, digits: usize) -> Value {
    let (lo, hi) = iv.to_decimal_pair(digits);
    json!([lo, hi])
}

/// Shortest decimal string that round-trips to the same `f64`.
fn real(x: f64) -> String {
    format!("{x}")
}

fn parse_x(s: &str) -> Result<BigRational, Failure> {
    parse_rational(s).map_err(Failure::Domain)
}

fn parse_combo_list(text: &str) -> Result<Vec<ParamCombo>, Failure> {
    let mut combos = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let fields: Vec<&str> = item.split(',').map(str::trim).collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(Failure::Config(format!("combo {item:?} must be k,m,u[,N]")));
        }
        let bad = |f: &str| Failure::Config(format!("bad number {f:?} in combo {item:?}"));
        let k = fields[0].parse().map_err(|_| bad(fields[0]))?;
        let m = fields[1].parse().map_err(|_| bad(fields[1]))?;
        let u = fields[2].parse().map_err(|_| bad(fields[2]))?;
        let n = match fields.get(3) {
            Some(f) => f.parse().map_err(|_| bad(f))?,
            None => ParamCombo::DEFAULT_N,
        };
        combos.push(ParamCombo::new(k, m, u, n)?);
    }
    Ok(combos)
}

/// Default figure data: `k = 1`, `u = 2`, `m = 2..=m_max`.
fn default_sequence(bounds: &GridBounds) -> Result<Vec<ParamCombo>, Failure> {
    (2..=bounds.m_max.max(2))
        .map(|m| ParamCombo::standard(1, m, 2).map_err(Failure::Domain))
        .collect()
}

fn parse_grid(text: &str, config: &RunConfig) -> Result<GridBounds, Failure> {
    if text == "default" {
        return Ok(config.bounds);
    }
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Failure::Config(format!("grid must be \"default\" or \"k_max,m_max,u_max\", got {text:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let bounds = GridBounds::new(
        parts[0].parse().map_err(|_| bad())?,
        parts[1].parse().map_err(|_| bad())?,
        parts[2].parse().map_err(|_| bad())?,
    );
    if bounds.k_max == 0 || bounds.m_max == 0 || bounds.u_max < 1 {
        return Err(bad());
    }
    Ok(bounds)
}

fn execute(command: &Command, config: &RunConfig) -> Result<String, Failure> {
    match command {
        Command::Eval { combo, x } => {
            let combo = combo.combo()?;
            let x = parse_x(x)?;
            let exponent = exponent_at(&combo, &x);
            let rendered = match render_exp(exponent.value(), config.precision)? {
                Rendered::Value(v) => format!("value={v}"),
                Rendered::Underflow => "(value underflows at this precision)".to_string(),
                Rendered::Overflow => "(value overflows at this precision)".to_string(),
            };
            Ok(format!("exponent={exponent} {rendered}\n"))
        }
        Command::Invert { n } => {
            if *n == 0 {
                return Err(Failure::Domain(Error::Domain("target must be at least 1".into())));
            }
            let combos = invert_target(*n, config.bounds.k_max, config.bounds.u_max);
            Ok(pretty(&json!({
                "n": n,
                "bounds": { "k_max": config.bounds.k_max, "u_max": config.bounds.u_max },
                "combos": combos,
            })))
        }
        Command::Partner { combo } => {
            let combo = combo.combo()?;
            let partner = find_partner(&combo)?;
            let one = BigRational::from_integer(BigInt::from(1));
            Ok(pretty(&json!({
                "combo": combo,
                "partner": partner.to_string(),
                "exponent": exponent_at(&combo, &one),
                "branch": compute_abs_a(&combo).branch,
            })))
        }
        Command::Midpoint { combo } => {
            let combo = combo.combo()?;
            let mid = midpoint(&combo)?;
            let value = midpoint_value_exponent(&combo)?;
            Ok(pretty(&json!({
                "combo": combo,
                "theta": mid.theta.to_string(),
                "interval": [mid.left.to_string(), mid.right.to_string()],
                "exponent_at_theta": value,
                "derivative_sign": "zero",
            })))
        }
        Command::DeltaChain { combo, deltas } => {
            let combo = combo.combo()?;
            let deltas = deltas
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(parse_x)
                .collect::<Result<Vec<_>, _>>()?;
            let chain = if combo.u() > 0 {
                delta_chain(&combo, &deltas)?
            } else {
                mirrored_chain_g(&combo, &deltas)?
            };
            Ok(pretty(&json!({ "combo": combo, "chain": chain })))
        }
        Command::Distance { combo, z, terms } => {
            let digits = config.precision;
            let log_json = |ld: &LogDistance| {
                json!({
                    "terms": ld.terms,
                    "direct": interval_json(&ld.direct, digits),
                    "series": interval_json(&ld.series, digits),
                })
            };
            if let Some(z) = z {
                let z = parse_x(z)?;
                let ld = log_distance(&z, *terms)?;
                return Ok(pretty(&json!({ "Z": z.to_string(), "log_distance": log_json(&ld) })));
            }
            let combo = combo.combo()?;
            let d = distance_d(&combo)?;
            let z = BigRational::from_integer(combo.z());
            let log = if z > BigRational::from_integer(BigInt::from(2)) {
                log_json(&log_distance(&z, *terms)?)
            } else {
                Value::Null
            };
            Ok(pretty(&json!({
                "combo": combo,
                "Z": z.to_string(),
                "D": d.to_string(),
                "log_distance": log,
            })))
        }
        Command::SolveDistance { z, e } => {
            let s = solve_distance_equals_value(*z, *e, config.solver_tolerance)?;
            Ok(pretty(&json!({
                "Z": real(s.z),
                "E": s.exponent_index,
                "u_real": real(s.u_real),
                "m_real": real(s.m_real),
                "m_closed_form": real(s.m_closed_form),
                "relative_gap": real(s.relative_gap),
                "residual": real(s.residual),
                "tolerance": real(s.tolerance),
                "within_tolerance": s.within_tolerance,
                "negative_u": s.negative_u,
                "integral_parameters": s.integral_parameters,
            })))
        }
        Command::Claims { grid } => {
            let bounds = parse_grid(grid, config)?;
            Ok(pretty(&run_claims(&bounds)?))
        }
        Command::EmitFigure1 { combos } => {
            let combos = match combos {
                Some(text) => parse_combo_list(text)?,
                None => default_sequence(&config.bounds)?,
            };
            match config.format {
                OutputFormat::Csv => Ok(emit_figure1(&combos)?),
                OutputFormat::Json => Ok(pretty(&figure1_rows(&combos)?)),
            }
        }
        Command::EmitFigure2 { combos } => {
            let combos = match combos {
                Some(text) => parse_combo_list(text)?,
                None => default_sequence(&config.bounds)?,
            };
            let seq = build_increasing_sequence(&combos)?;
            match config.format {
                OutputFormat::Csv => Ok(emit_figure2(&seq)),
                OutputFormat::Json => Ok(pretty(&figure2_rows(&seq))),
            }
        }
    }
}
