//! Command-line front end: parses process configs, dispatches the
//! subcommands, and emits versioned JSON reports (plus a table view on
//! interactive terminals).
//!
//! Exit codes: `0` success, `2` validation or usage error, `3` numerical
//! non-convergence.  The JSON report always goes to stdout; the table
//! goes to stderr and only when stderr is a terminal, so piped output
//! stays machine-readable.

use std::collections::BTreeMap;
use std::io::{BufWriter, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{LevyError, Result};
use crate::expmart::solve_lambda;
use crate::exponent::eval_exponent;
use crate::funceq::{difference, frechet_solve};
use crate::generator::{
    apply_to_exponential, apply_to_polynomial, classify_additive, classify_multiplicative,
    AdditiveVerdict, ExpMix, MultiplicativeVerdict,
};
use crate::measure::ExtReal;
use crate::moments::{cumulants, exp_moment_domain, moment_finite, moment_polynomials, moments_at};
use crate::mtgtest::{test_additive, test_multiplicative};
use crate::poly::Polynomial;
use crate::process::{catalog_with, support_class, ProcessConfig, ProcessSpec};
use crate::quad::QuadConfig;
use crate::report::{render_table, Report};
use crate::simulate::{sample_paths_with, TimeGrid, DEFAULT_SMALL_JUMP_CUTOFF};

/// Run the command line and return the process exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let argv: Vec<String> = argv.into_iter().collect();
    if let Ok(threads) = std::env::var("LEVY_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                // Ignore the error when a pool already exists (tests call
                // run() repeatedly in one process).
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let command = cli.command.name();
    match cli.command.execute() {
        Ok((config, result)) => {
            let report = Report::new(command, argv, config, result);
            println!("{}", report.to_json());
            if std::io::stderr().is_terminal() {
                let value = serde_json::to_value(&report).expect("report serializes");
                let _ = write!(std::io::stderr(), "{}", render_table(&value));
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                LevyError::QuadratureNoConvergence { .. }
                | LevyError::NonFiniteIntegrand { .. }
                | LevyError::NonFiniteSamples { .. } => 3,
                _ => 2,
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "levy-mtg",
    version,
    about = "Martingale calculus for one-dimensional Levy processes",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a process: triplet, exponent samples, support class.
    Describe {
        /// Catalog name (shorthand for --process).
        name: Option<String>,
        #[command(flatten)]
        process: ProcessOpts,
        /// Frequencies at which to sample the characteristic exponent.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 1.0, 2.0, 4.0])]
        xi: Vec<f64>,
    },
    /// Moment polynomials, cumulants, and finiteness up to a given order.
    Moments {
        #[command(flatten)]
        process: ProcessOpts,
        /// Highest moment order.
        #[arg(long)]
        order: usize,
        /// Optionally evaluate the moments at this time.
        #[arg(long)]
        time: Option<f64>,
    },
    /// Apply the infinitesimal generator to a polynomial or exponential.
    Gen {
        #[command(flatten)]
        process: ProcessOpts,
        /// Polynomial coefficients, ascending powers (comma-separated).
        #[arg(long, value_name = "COEFFS", conflicts_with = "exp_rate")]
        poly: Option<String>,
        /// Exponential rate lambda: reports eta(lambda).
        #[arg(long)]
        exp_rate: Option<f64>,
    },
    /// Exact martingale-function classification.
    Classify {
        #[command(flatten)]
        process: ProcessOpts,
        /// Polynomial coefficients, ascending powers: additive candidate
        /// f(X_t) - E f(X_t).
        #[arg(long, value_name = "COEFFS", conflicts_with = "expmix")]
        poly: Option<String>,
        /// Mixture a,lambda1,b,lambda2: multiplicative candidate
        /// g(X_t) / E g(X_t).
        #[arg(long, value_name = "A,L1,B,L2")]
        expmix: Option<String>,
    },
    /// Polynomial forward-difference equations.
    Funceq {
        #[command(subcommand)]
        action: FunceqAction,
    },
    /// Simulate paths on a time grid and write them as CSV.
    Simulate {
        #[command(flatten)]
        process: ProcessOpts,
        /// Grid times (strictly increasing; 0 is prepended automatically).
        #[arg(long, value_name = "T1,T2,...", conflicts_with_all = ["horizon", "cells"])]
        grid: Option<String>,
        /// Horizon for a uniform grid.
        #[arg(long, requires = "cells")]
        horizon: Option<f64>,
        /// Number of uniform cells up to the horizon.
        #[arg(long, requires = "horizon")]
        cells: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        n_paths: usize,
        /// Base seed (required when the CI environment variable is set).
        #[arg(long)]
        seed: Option<u64>,
        /// Small-jump threshold for the composite sampler.
        #[arg(long, default_value_t = DEFAULT_SMALL_JUMP_CUTOFF)]
        cutoff: f64,
        /// CSV output path (header row of grid times, one row per path).
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Optional raw binary dump: column-major f64, little-endian.
        #[arg(long, value_name = "FILE")]
        binary: Option<PathBuf>,
    },
    /// Monte Carlo martingale hypothesis test.
    MtgTest {
        #[command(flatten)]
        process: ProcessOpts,
        /// additive (f(X_t) - E f(X_t)) or mult (g(X_t) / E g(X_t)).
        #[arg(long, value_parser = ["additive", "mult", "multiplicative"])]
        mode: String,
        /// Function under test: poly:<coeffs>, expmix:<a,l1,b,l2>, cosh,
        /// or cube.
        #[arg(long = "f", value_name = "SPEC")]
        func: String,
        #[arg(long, default_value_t = crate::mtgtest::DEFAULT_S)]
        s: f64,
        #[arg(long, default_value_t = crate::mtgtest::DEFAULT_T)]
        t: f64,
        #[arg(long, default_value_t = crate::mtgtest::DEFAULT_N_PATHS)]
        n_paths: usize,
        #[arg(long, default_value_t = crate::mtgtest::DEFAULT_LEVEL)]
        level: f64,
        /// Base seed (required when the CI environment variable is set).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Solve eta(lambda) = alpha for admissible exponential rates.
    ExpSolve {
        #[command(flatten)]
        process: ProcessOpts,
        #[arg(long)]
        alpha: f64,
        /// Nominal horizon, echoed into the config; the equation is
        /// solved per unit time, so this never changes the result.
        #[arg(long)]
        time: Option<f64>,
    },
}

#[derive(Subcommand)]
enum FunceqAction {
    /// Solve the forward-difference equation for q given p and the step.
    Solve {
        /// Coefficients of p, ascending powers (comma-separated).
        #[arg(long)]
        p: String,
        /// Step size y (nonzero).
        #[arg(long)]
        y: f64,
    },
}

/// Process selection shared by all process-based subcommands.
#[derive(Args)]
struct ProcessOpts {
    /// Catalog name: brownian, cpoisson-two-point, cpoisson-gauss-jumps,
    /// jump-diffusion, gamma.
    #[arg(long, conflicts_with = "config")]
    process: Option<String>,
    /// Catalog parameter override, key=value (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// JSON process-config file (fields: drift, sigma2, atoms, density,
    /// sampler, flags).
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

impl ProcessOpts {
    /// Build the [`ProcessSpec`] and its configuration echo.
    fn resolve(&self, positional: Option<&str>) -> Result<(ProcessSpec, Value)> {
        if let Some(path) = &self.config {
            if !self.params.is_empty() {
                return Err(LevyError::InvalidArgument(
                    "--param only applies to catalog processes, not --config".into(),
                ));
            }
            let text = std::fs::read_to_string(path).map_err(|e| {
                LevyError::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            let spec = ProcessConfig::from_json(&text)?.to_spec()?;
            let echo = json!({
                "catalog": Value::Null,
                "params": Value::Null,
                "spec": serde_json::to_value(spec.to_config()).expect("config serializes"),
            });
            return Ok((spec, echo));
        }
        let name = match (positional, &self.process) {
            (Some(a), Some(b)) if a != b => {
                return Err(LevyError::InvalidArgument(format!(
                    "conflicting process names '{a}' and '{b}'"
                )))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b.as_str(),
            (None, None) => {
                return Err(LevyError::InvalidArgument(
                    "no process given: use a catalog name, --process, or --config".into(),
                ))
            }
        };
        let mut params = BTreeMap::new();
        for kv in &self.params {
            let (key, val) = kv.split_once('=').ok_or_else(|| {
                LevyError::InvalidArgument(format!("--param expects key=value, got '{kv}'"))
            })?;
            let val: f64 = val.parse().map_err(|_| {
                LevyError::InvalidArgument(format!("--param {key}: '{val}' is not a number"))
            })?;
            params.insert(key.to_string(), val);
        }
        let spec = catalog_with(name, &params)?;
        let echo = json!({
            "catalog": name,
            "params": params,
            "spec": serde_json::to_value(spec.to_config()).expect("config serializes"),
        });
        Ok((spec, echo))
    }
}

/// The function mini-language for test candidates.
enum FuncSpec {
    Poly(Polynomial),
    Mix(ExpMix),
    Cosh,
    Cube,
}

fn parse_csv_f64(text: &str, what: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<f64>().map_err(|_| {
                LevyError::InvalidArgument(format!("{what}: '{part}' is not a number"))
            })
        })
        .collect()
}

fn parse_func(spec: &str) -> Result<FuncSpec> {
    if let Some(rest) = spec.strip_prefix("poly:") {
        return Ok(FuncSpec::Poly(Polynomial::new(parse_csv_f64(rest, "poly")?)));
    }
    if let Some(rest) = spec.strip_prefix("expmix:") {
        let v = parse_csv_f64(rest, "expmix")?;
        if v.len() != 4 {
            return Err(LevyError::InvalidArgument(format!(
                "expmix needs exactly a,lambda1,b,lambda2 (got {} values)",
                v.len()
            )));
        }
        return Ok(FuncSpec::Mix(ExpMix::new(v[0], v[1], v[2], v[3])?));
    }
    match spec {
        "cosh" => Ok(FuncSpec::Cosh),
        "cube" => Ok(FuncSpec::Cube),
        other => Err(LevyError::InvalidArgument(format!(
            "unknown function '{other}': use poly:<coeffs>, expmix:<a,l1,b,l2>, cosh, or cube"
        ))),
    }
}

impl FuncSpec {
    fn as_fn(&self) -> Box<dyn Fn(f64) -> f64 + '_> {
        match self {
            FuncSpec::Poly(p) => Box::new(move |x| p.eval(x)),
            FuncSpec::Mix(m) => Box::new(move |x| m.eval(x)),
            FuncSpec::Cosh => Box::new(f64::cosh),
            FuncSpec::Cube => Box::new(|x| x * x * x),
        }
    }
}

/// `--seed` is mandatory for randomized commands when the `CI` variable
/// is set (no accidental irreproducible runs on automation); elsewhere it
/// defaults to 0.
fn require_seed(seed: Option<u64>) -> Result<u64> {
    match seed {
        Some(s) => Ok(s),
        None => {
            if std::env::var_os("CI").is_some_and(|v| !v.is_empty()) {
                Err(LevyError::InvalidArgument(
                    "--seed is required when CI is set".into(),
                ))
            } else {
                Ok(0)
            }
        }
    }
}

fn ext_json(v: ExtReal) -> Value {
    match v {
        ExtReal::Finite(x) => json!(x),
        ExtReal::Infinite => json!("infinite"),
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Describe { .. } => "describe",
            Command::Moments { .. } => "moments",
            Command::Gen { .. } => "gen",
            Command::Classify { .. } => "classify",
            Command::Funceq { .. } => "funceq",
            Command::Simulate { .. } => "simulate",
            Command::MtgTest { .. } => "mtg-test",
            Command::ExpSolve { .. } => "exp-solve",
        }
    }

    fn execute(self) -> Result<(Value, Value)> {
        let cfg = QuadConfig::default();
        match self {
            Command::Describe { name, process, xi } => {
                let (spec, echo) = process.resolve(name.as_deref())?;
                let mut samples = Vec::new();
                for &x in &xi {
                    let psi = eval_exponent(&spec, x, &cfg)?;
                    samples.push(json!({"xi": x, "re": psi.re, "im": psi.im}));
                }
                let domain = exp_moment_domain(&spec, &cfg)?;
                let result = json!({
                    "nontrivial": spec.nontrivial(),
                    "support_class": serde_json::to_value(support_class(&spec)).unwrap(),
                    "activity": serde_json::to_value(spec.measure().activity()).unwrap(),
                    "exponent_samples": samples,
                    "exp_moment_domain": [domain.0, domain.1],
                });
                Ok((json!({"process": echo, "xi": xi}), result))
            }
            Command::Moments { process, order, time } => {
                let (spec, echo) = process.resolve(None)?;
                let mut finite = Vec::with_capacity(order);
                for k in 1..=order {
                    finite.push(moment_finite(&spec, k as u32, &cfg)?);
                }
                let all_finite = finite.iter().all(|&b| b);
                let (kappa, polys) = if all_finite {
                    let kappa = cumulants(&spec, order, &cfg)?;
                    let polys = moment_polynomials(&spec, order, &cfg)?;
                    (
                        json!(kappa),
                        json!(polys.iter().map(|p| p.coeffs().to_vec()).collect::<Vec<_>>()),
                    )
                } else {
                    (Value::Null, Value::Null)
                };
                let at_time = match time {
                    Some(t) if all_finite => {
                        json!({"time": t, "moments": moments_at(&spec, order, t, &cfg)?})
                    }
                    _ => Value::Null,
                };
                let result = json!({
                    "order": order,
                    "finite": finite,
                    "cumulants": kappa,
                    "moment_polynomials": polys,
                    "at_time": at_time,
                });
                Ok((json!({"process": echo, "order": order, "time": time}), result))
            }
            Command::Gen { process, poly, exp_rate } => {
                let (spec, echo) = process.resolve(None)?;
                let result = if let Some(text) = &poly {
                    let p = Polynomial::new(parse_csv_f64(text, "--poly")?);
                    let image = apply_to_polynomial(&spec, &p, &cfg)?;
                    json!({
                        "input": p.coeffs().to_vec(),
                        "image": image.coeffs().to_vec(),
                    })
                } else if let Some(rate) = exp_rate {
                    json!({
                        "rate": rate,
                        "eta": ext_json(apply_to_exponential(&spec, rate, &cfg)?),
                    })
                } else {
                    return Err(LevyError::InvalidArgument(
                        "gen needs --poly or --exp-rate".into(),
                    ));
                };
                Ok((
                    json!({"process": echo, "poly": poly, "exp_rate": exp_rate}),
                    result,
                ))
            }
            Command::Classify { process, poly, expmix } => {
                let (spec, echo) = process.resolve(None)?;
                let result = if let Some(text) = &poly {
                    let p = Polynomial::new(parse_csv_f64(text, "--poly")?);
                    let out = classify_additive(&spec, &p, &cfg)?;
                    let (verdict, alpha, witness) = match &out.verdict {
                        AdditiveVerdict::Martingale { alpha } => {
                            ("martingale-function", json!(alpha), Value::Null)
                        }
                        AdditiveVerdict::NotMartingale { nonconstant_part } => (
                            "not-martingale-function",
                            Value::Null,
                            json!(nonconstant_part.coeffs().to_vec()),
                        ),
                        AdditiveVerdict::TrivialIndeterminate => {
                            ("trivial-indeterminate", Value::Null, Value::Null)
                        }
                    };
                    json!({
                        "verdict": verdict,
                        "alpha": alpha,
                        "witness_coeffs": witness,
                        "tolerance_used": out.tolerance_used,
                    })
                } else if let Some(text) = &expmix {
                    let v = parse_csv_f64(text, "--expmix")?;
                    if v.len() != 4 {
                        return Err(LevyError::InvalidArgument(
                            "--expmix needs exactly a,lambda1,b,lambda2".into(),
                        ));
                    }
                    let mix = ExpMix::new(v[0], v[1], v[2], v[3])?;
                    let out = classify_multiplicative(&spec, &mix, &cfg)?;
                    let (verdict, alpha, witness) = match out.verdict {
                        MultiplicativeVerdict::Martingale { alpha } => {
                            ("martingale-function", json!(alpha), Value::Null)
                        }
                        MultiplicativeVerdict::NotMartingale { eta1, eta2 } => (
                            "not-martingale-function",
                            Value::Null,
                            json!([ext_json(eta1), ext_json(eta2)]),
                        ),
                        MultiplicativeVerdict::TrivialIndeterminate => {
                            ("trivial-indeterminate", Value::Null, Value::Null)
                        }
                    };
                    json!({
                        "verdict": verdict,
                        "alpha": alpha,
                        "witness_coeffs": witness,
                        "tolerance_used": out.tolerance_used,
                    })
                } else {
                    return Err(LevyError::InvalidArgument(
                        "classify needs --poly or --expmix".into(),
                    ));
                };
                Ok((
                    json!({"process": echo, "poly": poly, "expmix": expmix}),
                    result,
                ))
            }
            Command::Funceq { action } => {
                let FunceqAction::Solve { p, y } = action;
                let poly = Polynomial::new(parse_csv_f64(&p, "--p")?);
                let q = frechet_solve(&poly, y)?;
                let residual = difference(&q, y)?
                    .sub(&poly)
                    .coeffs()
                    .iter()
                    .fold(0.0f64, |m, c| m.max(c.abs()));
                let result = json!({
                    "q": q.coeffs().to_vec(),
                    "degree": q.degree(),
                    "residual": residual,
                });
                Ok((json!({"p": poly.coeffs().to_vec(), "y": y}), result))
            }
            Command::Simulate {
                process,
                grid,
                horizon,
                cells,
                n_paths,
                seed,
                cutoff,
                out,
                binary,
            } => {
                let (spec, echo) = process.resolve(None)?;
                let seed = require_seed(seed)?;
                let grid = match (&grid, horizon, cells) {
                    (Some(text), _, _) => {
                        let mut times = vec![0.0];
                        times.extend(parse_csv_f64(text, "--grid")?);
                        TimeGrid::new(times)?
                    }
                    (None, Some(h), Some(c)) => TimeGrid::uniform(h, c)?,
                    _ => {
                        return Err(LevyError::InvalidArgument(
                            "simulate needs --grid or --horizon with --cells".into(),
                        ))
                    }
                };
                let batch = sample_paths_with(&spec, &grid, n_paths, seed, cutoff)?;
                let times = grid.times().to_vec();
                let mut w = BufWriter::new(std::fs::File::create(&out).map_err(|e| {
                    LevyError::InvalidArgument(format!("cannot create {}: {e}", out.display()))
                })?);
                let fmt = |v: f64| format!("{v:.16e}");
                let io_err = |e: std::io::Error| {
                    LevyError::InvalidArgument(format!("cannot write {}: {e}", out.display()))
                };
                writeln!(
                    w,
                    "{}",
                    times.iter().map(|&t| fmt(t)).collect::<Vec<_>>().join(",")
                )
                .map_err(io_err)?;
                for p in 0..n_paths {
                    let row: Vec<String> = batch.path(p).iter().map(|&v| fmt(v)).collect();
                    writeln!(w, "{}", row.join(",")).map_err(io_err)?;
                }
                w.flush().map_err(io_err)?;
                if let Some(bin_path) = &binary {
                    let mut w = BufWriter::new(std::fs::File::create(bin_path).map_err(|e| {
                        LevyError::InvalidArgument(format!(
                            "cannot create {}: {e}",
                            bin_path.display()
                        ))
                    })?);
                    for idx in 0..times.len() {
                        for v in batch.column(idx) {
                            w.write_all(&v.to_le_bytes()).map_err(|e| {
                                LevyError::InvalidArgument(format!(
                                    "cannot write {}: {e}",
                                    bin_path.display()
                                ))
                            })?;
                        }
                    }
                    w.flush().map_err(|e| {
                        LevyError::InvalidArgument(format!("cannot write {}: {e}", bin_path.display()))
                    })?;
                }
                let result = json!({
                    "csv": out.display().to_string(),
                    "binary": binary.as_ref().map(|p| p.display().to_string()),
                    "n_paths": n_paths,
                    "times": times,
                    "heavy_tailed": batch.heavy_tailed(),
                    "spec_fingerprint": format!("{:016x}", batch.fingerprint),
                });
                let config = json!({
                    "process": echo,
                    "times": grid.times().to_vec(),
                    "n_paths": n_paths,
                    "seed": seed,
                    "cutoff": cutoff,
                });
                Ok((config, result))
            }
            Command::MtgTest { process, mode, func, s, t, n_paths, level, seed } => {
                let (spec, echo) = process.resolve(None)?;
                let seed = require_seed(seed)?;
                let parsed = parse_func(&func)?;
                let h = parsed.as_fn();
                let report = match mode.as_str() {
                    "additive" => test_additive(&spec, &h, s, t, n_paths, level, seed)?,
                    _ => test_multiplicative(&spec, &h, s, t, n_paths, level, seed)?,
                };
                let config = json!({
                    "process": echo,
                    "mode": mode,
                    "f": func,
                    "s": s,
                    "t": t,
                    "n_paths": n_paths,
                    "level": level,
                    "seed": seed,
                });
                Ok((config, serde_json::to_value(&report).expect("report serializes")))
            }
            Command::ExpSolve { process, alpha, time } => {
                let (spec, echo) = process.resolve(None)?;
                let report = solve_lambda(&spec, alpha, &cfg)?;
                let config = json!({
                    "process": echo,
                    "alpha": alpha,
                    "time": time,
                });
                Ok((config, serde_json::to_value(&report).expect("report serializes")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn function_mini_language_parses() {
        assert!(matches!(parse_func("cosh").unwrap(), FuncSpec::Cosh));
        assert!(matches!(parse_func("cube").unwrap(), FuncSpec::Cube));
        match parse_func("poly:0,0,1").unwrap() {
            FuncSpec::Poly(p) => assert_eq!(p.coeffs(), &[0.0, 0.0, 1.0]),
            _ => panic!("expected a polynomial"),
        }
        match parse_func("expmix:0.5,-1,0.5,1").unwrap() {
            FuncSpec::Mix(m) => assert!((m.eval(0.3) - 0.3f64.cosh()).abs() < 1e-15),
            _ => panic!("expected a mixture"),
        }
        assert!(parse_func("sinh").is_err());
        assert!(parse_func("expmix:1,2,3").is_err());
        assert!(parse_func("poly:a,b").is_err());
    }

    #[test]
    fn named_functions_evaluate() {
        let cube = parse_func("cube").unwrap();
        assert_eq!((cube.as_fn())(2.0), 8.0);
        let cosh = parse_func("cosh").unwrap();
        assert_eq!((cosh.as_fn())(0.0), 1.0);
    }

    #[test]
    fn process_resolution_validates() {
        let opts = ProcessOpts { process: None, params: vec![], config: None };
        assert!(opts.resolve(None).is_err());
        let opts = ProcessOpts {
            process: Some("brownian".into()),
            params: vec!["sigma2=4".into()],
            config: None,
        };
        let (spec, echo) = opts.resolve(None).unwrap();
        assert_eq!(spec.triplet.sigma2, 4.0);
        assert_eq!(echo["catalog"], "brownian");
        let opts = ProcessOpts {
            process: Some("brownian".into()),
            params: vec!["sigma2".into()],
            config: None,
        };
        assert!(opts.resolve(None).is_err(), "missing '=' must be rejected");
        let opts = ProcessOpts { process: Some("x".into()), params: vec![], config: None };
        assert!(opts.resolve(Some("y")).is_err(), "conflicting names");
    }

    #[test]
    fn seed_requirement_follows_ci_env() {
        // Can't mutate the environment safely in parallel tests; just
        // check the explicit-seed path, which is environment-independent.
        assert_eq!(require_seed(Some(7)).unwrap(), 7);
    }
}
