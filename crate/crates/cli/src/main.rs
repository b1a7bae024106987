//! Command-line front end: ingest weight specs from JSON, run the
//! oracle/asymptotics/convergence studies, and emit CSV or JSON reports.
//!
//! Exit codes: 0 success, 1 a convergence study failed its target rate,
//! 2 configuration error (JSON error object on stderr), 3 numerical error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::json;

use modjac::convergence::ConvergenceReport;
use modjac::ortho_oracle::{eval_monic, polynomial_zeros, stieltjes_recurrence, RecurrenceTable};
use modjac::rh_asymptotics::{
    asym_coeffs, bulk_prediction, edge_prediction, largest_zero_prediction, outer_prediction,
    study_an, study_bn, study_bulk, study_edge, study_gamma, study_hankel, study_outer,
    zero_convergence_check,
};
use modjac::szego_maps::SzegoData;
use modjac::weight::WeightSpec;
use modjac::Error;

#[derive(Parser)]
#[command(name = "modjac", version, about = "Asymptotics of orthogonal polynomials for modified Jacobi weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Path to the JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output path (stdout if omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Convergence quantity (overrides the config).
    #[arg(long, global = true, value_enum)]
    quantity: Option<Quantity>,
    /// Expansion order for the outer prediction (overrides the config).
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Accepted for interface compatibility; every run is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Recurrence coefficients a_n, b_n and log γ_n from the quadrature oracle.
    Recurrence,
    /// All closed-form expansion constants of the weight.
    Asymptotics,
    /// Rate study of a predicted quantity against the oracle.
    Convergence,
    /// Zeros of π_n with the endpoint Bessel-zero predictions.
    Zeros,
    /// Evaluate π_n at a point: oracle value and predictions.
    Eval,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Quantity {
    Outer,
    Gamma,
    An,
    Bn,
    Hankel,
    Bulk,
    Edge,
    Zeros,
}

/// Run configuration; `weight` is required, everything else has defaults.
#[derive(Deserialize)]
struct RunConfig {
    weight: serde_json::Value,
    /// Table depth for the recurrence command.
    n_max: Option<usize>,
    /// Sample degrees for convergence studies (strictly increasing).
    n_list: Option<Vec<usize>>,
    quantity: Option<Quantity>,
    order: Option<usize>,
    /// Outer/eval point [re, im].
    z: Option<[f64; 2]>,
    /// Interior sample point for the bulk study.
    x: Option<f64>,
    /// Zero index (1 = largest).
    k: Option<usize>,
    /// Degree for the zeros and eval commands.
    n: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            let (code, kind) = classify(&e);
            let msg = json!({ "error": kind, "message": e.to_string() });
            eprintln!("{msg}");
            code
        }
    }
}

enum CliError {
    Config(String),
    Lib(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn classify(e: &CliError) -> (ExitCode, &'static str) {
    match e {
        CliError::Config(_) => (ExitCode::from(2), "config"),
        CliError::Lib(le) => match le {
            Error::Evaluation(_) | Error::Numerical(_) => (ExitCode::from(3), "numerical"),
            _ => (ExitCode::from(2), "config"),
        },
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let config = load_config(cli)?;
    let weight = parse_weight(&config)?;
    let format = cli.format.unwrap_or(match cli.command {
        Command::Recurrence | Command::Zeros => Format::Csv,
        _ => Format::Json,
    });
    let (body, code) = match cli.command {
        Command::Recurrence => (cmd_recurrence(&weight, &config, format)?, ExitCode::SUCCESS),
        Command::Asymptotics => (cmd_asymptotics(&weight, format)?, ExitCode::SUCCESS),
        Command::Convergence => cmd_convergence(cli, &weight, &config, format)?,
        Command::Zeros => (cmd_zeros(&weight, &config, format)?, ExitCode::SUCCESS),
        Command::Eval => (cmd_eval(cli, &weight, &config, format)?, ExitCode::SUCCESS),
    };
    emit(cli, &body)?;
    Ok(code)
}

fn load_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("--config <path> is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("invalid config JSON: {e}")))
}

fn parse_weight(config: &RunConfig) -> Result<WeightSpec, CliError> {
    let text = config.weight.to_string();
    WeightSpec::from_json(&text).map_err(CliError::Lib)
}

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| CliError::Config(format!("cannot write stdout: {e}")))
        }
    }
}

/// 17 significant digits; round-trips binary64 exactly.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn cmd_recurrence(weight: &WeightSpec, config: &RunConfig, format: Format) -> Result<String, CliError> {
    let n_max = config.n_max.unwrap_or(20);
    if n_max == 0 {
        return Err(CliError::Config("n_max must be ≥ 1".into()));
    }
    let table = stieltjes_recurrence(weight, n_max + 1)?;
    let a: Vec<f64> = (0..=n_max).map(|n| if n == 0 { 0.0 } else { table.a(n) }).collect();
    let b: Vec<f64> = (0..=n_max).map(|n| table.b(n)).collect();
    let lg: Vec<f64> = (0..=n_max).map(|n| table.log_gamma(n)).collect();
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("n,a_n,b_n,log_gamma_n\n");
            for n in 0..=n_max {
                s.push_str(&format!("{n},{},{},{}\n", num(a[n]), num(b[n]), num(lg[n])));
            }
            s
        }
        Format::Json => {
            let v = json!({ "n": (0..=n_max).collect::<Vec<_>>(), "a": a, "b": b, "log_gamma": lg });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}

fn cmd_asymptotics(weight: &WeightSpec, format: Format) -> Result<String, CliError> {
    let data = SzegoData::new(weight)?;
    let co = asym_coeffs(&data);
    let fields: Vec<(&str, f64)> = vec![
        ("Gamma1", co.gamma1),
        ("Gamma2", co.gamma2),
        ("A2", co.a2),
        ("A3", co.a3),
        ("A4", co.a4),
        ("B2", co.b2),
        ("B3", co.b3),
        ("B4", co.b4),
        ("hankel_exponent", co.hankel_exponent),
        ("D_inf", co.d_inf),
        ("c0", co.c0),
        ("d0", co.d0),
    ];
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("name,value\n");
            for (k, v) in &fields {
                s.push_str(&format!("{k},{}\n", num(*v)));
            }
            s
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (k, v) in &fields {
                map.insert((*k).to_string(), json!(v));
            }
            format!("{}\n", serde_json::to_string_pretty(&serde_json::Value::Object(map)).unwrap())
        }
    })
}

fn default_ns(q: Quantity) -> Vec<usize> {
    match q {
        Quantity::Outer | Quantity::Gamma | Quantity::An | Quantity::Bn => (1..=12).map(|k| 8 * k).collect(),
        Quantity::Hankel => (1..=10).map(|k| 10 * k).collect(),
        Quantity::Bulk | Quantity::Edge => (1..=8).map(|k| 10 * k).collect(),
        Quantity::Zeros => vec![20, 30, 40, 50],
    }
}

fn table_for(weight: &WeightSpec, ns: &[usize]) -> Result<RecurrenceTable, CliError> {
    let max = *ns.last().unwrap();
    Ok(stieltjes_recurrence(weight, max + 2)?)
}

fn cmd_convergence(
    cli: &Cli,
    weight: &WeightSpec,
    config: &RunConfig,
    format: Format,
) -> Result<(String, ExitCode), CliError> {
    let quantity = cli
        .quantity
        .or(config.quantity)
        .ok_or_else(|| CliError::Config("convergence needs a quantity (--quantity or config)".into()))?;
    let ns = match &config.n_list {
        Some(list) => {
            if list.len() < 2 || list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Config("n_list must be strictly increasing with ≥ 2 entries".into()));
            }
            list.clone()
        }
        None => default_ns(quantity),
    };
    let table = table_for(weight, &ns)?;
    let data = SzegoData::new(weight)?;
    let report: ConvergenceReport = match quantity {
        Quantity::Outer => {
            let z = config.z.map(|p| Complex64::new(p[0], p[1])).unwrap_or(Complex64::new(1.5, 0.5));
            let order = cli.order.or(config.order).unwrap_or(2);
            study_outer(&data, &table, z, order, &ns)?
        }
        Quantity::Gamma => study_gamma(&data, &table, &ns)?,
        Quantity::An => study_an(&data, &table, &ns)?,
        Quantity::Bn => study_bn(&data, &table, &ns)?,
        Quantity::Hankel => study_hankel(&data, &table, &ns)?,
        Quantity::Bulk => study_bulk(&data, &table, config.x.unwrap_or(0.2), &ns)?,
        Quantity::Edge => study_edge(&data, &table, &ns)?,
        Quantity::Zeros => zero_convergence_check(&table, weight.alpha, &ns, config.k.unwrap_or(1))?,
    };
    if report.error.iter().any(|e| !e.is_finite()) {
        return Err(CliError::Lib(Error::Evaluation("non-finite error sample in report".into())));
    }
    let body = match format {
        Format::Csv => {
            let mut s = String::from("quantity,n,error,fitted_slope,target_slope,constant_estimate,pass\n");
            for (n, e) in report.n.iter().zip(report.error.iter()) {
                s.push_str(&format!(
                    "{},{n},{},{},{},{},{}\n",
                    report.quantity,
                    num(*e),
                    num(report.fitted_slope),
                    num(report.target_slope),
                    num(report.constant_estimate),
                    report.pass
                ));
            }
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
    };
    let code = if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) };
    Ok((body, code))
}

fn cmd_zeros(weight: &WeightSpec, config: &RunConfig, format: Format) -> Result<String, CliError> {
    let n = config.n.unwrap_or(50);
    let table = stieltjes_recurrence(weight, n.max(1))?;
    let zeros = polynomial_zeros(&table, n)?;
    let k_pred = 5.min(n / 4);
    let preds: Vec<f64> = (1..=k_pred)
        .map(|k| largest_zero_prediction(weight.alpha, n, k))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("k,zero,predicted\n");
            for (i, z) in zeros.iter().enumerate() {
                let p = if i < preds.len() { num(preds[i]) } else { String::new() };
                s.push_str(&format!("{},{},{p}\n", i + 1, num(*z)));
            }
            s
        }
        Format::Json => {
            let v = json!({ "n": n, "zeros": zeros, "predicted_largest": preds });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}

fn cmd_eval(cli: &Cli, weight: &WeightSpec, config: &RunConfig, format: Format) -> Result<String, CliError> {
    let n = config.n.unwrap_or(60);
    let data = SzegoData::new(weight)?;
    let table = stieltjes_recurrence(weight, n.max(1))?;
    let z = config.z.map(|p| Complex64::new(p[0], p[1])).unwrap_or(Complex64::new(1.5, 0.5));
    if z.im == 0.0 && z.re.abs() < 1.0 {
        // interior point: leading bulk/edge prediction vs the oracle value
        let x = z.re;
        let orac = modjac::ortho_oracle::eval_monic_real(&table, n, x)?;
        let (regime, pred) = if x.abs() < 1.0 - modjac::rh_asymptotics::DELTA {
            ("bulk", bulk_prediction(&data, x, n)?)
        } else if x > 0.0 {
            ("edge", edge_prediction(&data, x, n)?)
        } else {
            return Err(CliError::Config(format!(
                "x = {x} lies in the left edge window; evaluate the reflected weight at −x"
            )));
        };
        return Ok(match format {
            Format::Csv => format!(
                "n,x,regime,oracle,prediction\n{n},{},{regime},{},{}\n",
                num(x),
                num(orac),
                num(pred)
            ),
            Format::Json => {
                let v = json!({ "n": n, "x": x, "regime": regime, "oracle": orac, "prediction": pred });
                format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
            }
        });
    }
    let order = cli.order.or(config.order).unwrap_or(2);
    let orac = eval_monic(&table, n, z)?;
    let pred = outer_prediction(&data, z, n, order)?;
    let ratio = (pred.log_abs - orac.log_abs).exp() * pred.unit / orac.unit;
    let rel = (ratio - 1.0).norm();
    if !rel.is_finite() {
        return Err(CliError::Lib(Error::Evaluation("non-finite relative error".into())));
    }
    Ok(match format {
        Format::Csv => format!(
            "n,re,im,order,oracle_log_abs,oracle_arg,pred_log_abs,pred_arg,rel_error\n{n},{},{},{order},{},{},{},{},{}\n",
            num(z.re),
            num(z.im),
            num(orac.log_abs),
            num(orac.unit.arg()),
            num(pred.log_abs),
            num(pred.unit.arg()),
            num(rel)
        ),
        Format::Json => {
            let v = json!({
                "n": n,
                "z": [z.re, z.im],
                "order": order,
                "oracle": { "log_abs": orac.log_abs, "unit": [orac.unit.re, orac.unit.im] },
                "prediction": { "log_abs": pred.log_abs, "unit": [pred.unit.re, pred.unit.im] },
                "rel_error": rel,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}
