//! Command-line definitions and dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use poincare_maxwell::photon::Helicity;

use crate::config::{
    parse_angle, parse_complex, parse_grid, parse_half, parse_index_range, parse_tolerance, parse_vec3, usage,
    Format, SuiteConfig, UsageError, Variant, LMAX_LIMIT,
};
use crate::eval::{evaluate, tabulate, EvalRequest, Function, TableRequest};
use crate::report::Report;
use crate::suites::{run, Suite};

#[derive(Debug, Parser)]
#[command(name = "poincare-maxwell", version, about = "Evaluate and verify Lorentz-group harmonics and photon wave functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Tabulate a function over index ranges and coordinate grids.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub lmax: u32,
    /// Points per axis of the angle grids.
    #[arg(long, default_value_t = 5)]
    pub grid: usize,
    /// Random draws per randomized check.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Per-check tolerance, NAME=VALUE; NAME is a check or a check family.
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Speed of light.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, value_enum, default_value_t = Variant::Corrected)]
    pub variant: Variant,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub corrected_lambda: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Arguments shared by `eval` and `table`. Numbers accept multiples of
/// `pi` (`pi/2`, `-0.5pi`).
#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub phi: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub epsilon: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub theta: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub tau: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub chi: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub vareps: String,
    /// Use the dotted (complex-conjugate) series.
    #[arg(long)]
    pub dotted: bool,
    /// Wave vector `k1,k2,k3`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// `+1`, `0` or `-1` (also `+`, `-`).
    #[arg(long, allow_hyphen_values = true)]
    pub helicity: Option<String>,
    /// Spatial point `x1,x2,x3`.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0,0")]
    pub x: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub t: String,
    /// Radial argument (complex for `eval`, a real grid for `table`).
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub r: String,
    /// Integration constant of the undotted radial functions.
    #[arg(long = "C", allow_hyphen_values = true, default_value = "0")]
    pub big_c: String,
    /// Integration constant of the dotted radial functions.
    #[arg(long = "Cdot", allow_hyphen_values = true, default_value = "0")]
    pub big_c_dot: String,
    #[arg(long, value_enum, default_value_t = Variant::Corrected)]
    pub variant: Variant,
    /// Speed of light.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub function: Function,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub function: Function,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn parse_helicity(s: &str) -> anyhow::Result<Helicity> {
    match s.trim() {
        "+" | "+1" | "1" => Ok(Helicity::Plus),
        "0" => Ok(Helicity::Zero),
        "-" | "-1" => Ok(Helicity::Minus),
        other => Err(usage(format!("helicity must be +1, 0 or -1, got `{other}`"))),
    }
}

fn base_request(function: Function, p: &PointArgs) -> anyhow::Result<EvalRequest> {
    let mut req = EvalRequest::new(function);
    req.dotted = p.dotted;
    req.k = p.k.as_deref().map(parse_vec3).transpose()?;
    req.helicity = p.helicity.as_deref().map(parse_helicity).transpose()?;
    req.x = parse_vec3(&p.x)?;
    req.t = parse_angle(&p.t)?;
    req.constant = parse_complex(&p.big_c)?;
    req.constant_dot = parse_complex(&p.big_c_dot)?;
    req.variant = p.variant;
    if !(p.c.is_finite() && p.c > 0.0) {
        return Err(usage(format!("--c must be positive, got {}", p.c)));
    }
    req.c = p.c;
    Ok(req)
}

fn angle_strings(p: &PointArgs) -> [&str; 6] {
    [&p.phi, &p.epsilon, &p.theta, &p.tau, &p.chi, &p.vareps]
}

fn eval_request(args: &EvalArgs) -> anyhow::Result<EvalRequest> {
    let p = &args.point;
    let mut req = base_request(args.function, p)?;
    req.l = p.l.as_deref().map(parse_half).transpose()?;
    req.m = p.m.as_deref().map(parse_half).transpose()?;
    req.n = p.n.as_deref().map(parse_half).transpose()?;
    for (slot, s) in req.angles.iter_mut().zip(angle_strings(p)) {
        *slot = parse_angle(s)?;
    }
    req.r = parse_complex(&p.r)?;
    Ok(req)
}

fn table_request(args: &TableArgs) -> anyhow::Result<TableRequest> {
    let p = &args.point;
    let base = base_request(args.function, p)?;
    let l_spec = p.l.as_deref().ok_or_else(|| usage("`table` needs --l"))?;
    let l = parse_index_range(l_spec, poincare_maxwell::HalfInt::ZERO)?;
    if l.iter().any(|v| v.twice() < 0) {
        return Err(usage("--l must be non-negative"));
    }
    let lmax = *l.iter().max().expect("non-empty");
    let ranges = |spec: &Option<String>| -> anyhow::Result<Option<Vec<_>>> {
        match spec.as_deref() {
            None | Some("all") => Ok(None),
            Some(s) => parse_index_range(s, lmax).map(Some),
        }
    };
    let mut angles: [Vec<f64>; 6] = Default::default();
    for (slot, s) in angles.iter_mut().zip(angle_strings(p)) {
        *slot = parse_grid(s)?;
    }
    Ok(TableRequest { base, l, m: ranges(&p.m)?, n: ranges(&p.n)?, angles, r: parse_grid(&p.r)? })
}

fn suite_config(args: &VerifyArgs) -> anyhow::Result<SuiteConfig> {
    if args.lmax > LMAX_LIMIT {
        return Err(usage(format!("--lmax must lie in [0, {LMAX_LIMIT}]")));
    }
    let mut tolerances = std::collections::BTreeMap::new();
    for t in &args.tol {
        let (name, value) = parse_tolerance(t)?;
        tolerances.insert(name, value);
    }
    let cfg = SuiteConfig {
        lmax: args.lmax,
        grid: args.grid,
        samples: args.samples,
        seed: args.seed,
        c: args.c,
        variant: args.variant,
        corrected_lambda: args.corrected_lambda,
        tolerances,
        format: args.format,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// What a command printed on the data stream, its diagnostics and its exit
/// code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Eval(args) => {
            let out = evaluate(&eval_request(args)?)?;
            Ok(Outcome { stdout: out.render(args.format)?, stderr: String::new(), code: 0 })
        }
        Command::Table(args) => {
            let table = tabulate(&table_request(args)?)?;
            Ok(Outcome { stdout: table.render(args.format)?, stderr: String::new(), code: 0 })
        }
        Command::Verify(args) => {
            let cfg = suite_config(args)?;
            let output = run(args.suite, &cfg)?;
            let stderr: String = output.notes.iter().map(|n| format!("note: {n}\n")).collect();
            let report = Report::new(args.suite, &cfg, output);
            let s = report.summary;
            let stderr = stderr
                + &format!("{}: passed={} failed={} flagged={}\n", args.suite.name(), s.passed, s.failed, s.flagged);
            Ok(Outcome { stdout: report.render(args.format)?, stderr, code: s.exit_code() })
        }
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code: 0 success, 1 check failure, 2 usage error.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            eprint!("{}", out.stderr);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                // Anything else is an internal failure of a check run.
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(args: &[&str]) -> anyhow::Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("poincare-maxwell").chain(args.iter().copied()))?;
        execute(&cli)
    }

    #[test]
    fn eval_examples() {
        let out = outcome(&["eval", "z", "--l", "1", "--m", "0", "--n", "0", "--theta", "0", "--tau", "0"]).unwrap();
        assert_eq!(out.stdout, "value = 1+0i\n");
        let out = outcome(&["eval", "polarization", "--k", "0,0,1", "--helicity", "0"]).unwrap();
        assert_eq!(out.stdout, "eps_zero_1 = 0+0i\neps_zero_2 = 0+0i\neps_zero_3 = 1+0i\n");
        let out = outcome(&["eval", "radial", "--variant", "paper", "--l", "1", "--C", "0", "--r", "1"]).unwrap();
        assert!(out.stdout.contains("f_0 = 2+0i\n"), "{}", out.stdout);
    }

    #[test]
    fn negative_arguments_parse() {
        let out = outcome(&["eval", "z", "--l", "1/2", "--m", "-1/2", "--n", "1/2", "--theta", "pi/3", "--tau", "-0.4"]);
        assert!(out.is_ok());
    }

    #[test]
    fn table_cardinality() {
        let out = outcome(&["table", "z", "--l", "1", "--m", "1", "--n", "0", "--theta", "0:pi:9", "--tau", "0"]).unwrap();
        assert_eq!(out.stdout.lines().count(), 10);
        assert!(out.stdout.starts_with("l,m,n,theta,tau,value_re,value_im\n"));
        assert!(outcome(&["table", "z", "--l", "1", "--theta", "0:pi:0"]).is_err());
    }

    #[test]
    fn json_eval_emits_re_im() {
        let out = outcome(&["eval", "z", "--l", "1", "--m", "1", "--n", "1", "--theta", "0.3", "--format", "json"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v["values"]["value"]["re"].is_f64());
        assert!(v["values"]["value"]["im"].is_f64());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with(["poincare-maxwell", "eval", "nope"]), 2);
        assert_eq!(main_with(["poincare-maxwell", "eval", "z", "--l", "x"]), 2);
        assert_eq!(main_with(["poincare-maxwell", "verify", "radial", "--lmax", "7"]), 2);
        assert_eq!(main_with(["poincare-maxwell", "verify", "radial", "--tol", "radial=-1"]), 2);
        assert_eq!(outcome(&["verify", "radial", "--lmax", "2"]).unwrap().code, 0);
        let printed = outcome(&["verify", "radial", "--variant", "paper", "--lmax", "2"]).unwrap();
        assert_eq!(printed.code, 0);
        assert!(printed.stderr.contains("(s - s^2) r"));
        let strict = outcome(&["verify", "radial", "--tol", "radial.formula=0", "--lmax", "2"]).unwrap();
        assert_eq!(strict.code, 1);
    }
}
