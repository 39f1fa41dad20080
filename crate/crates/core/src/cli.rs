//! The `cartan` command-line surface.
//!
//! Every command writes to a caller-supplied sink and returns an exit code,
//! so the binary is a thin wrapper and tests can drive commands in-process.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::elliptic::{complete_k, Modulus};
use crate::engel::{compare, cut_time_curves, engel_cut_time, zeta, Family};
use crate::expmap::{exp_at_times, project_engel_cov, GroupPoint, TrajectorySample, EXP_TOL};
use crate::maxwell::{critical_moduli, cut_time, normalization, open_grid, t1z, t2v, table};
use crate::pendulum::{classify, modulus_in, Covector, EllipticCoords, Stratum};
use crate::shooting::{solve, SolverConfig};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

/// Name of the environment variable read as the default for `--tol`.
pub const TOL_ENV: &str = "CARTAN_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Parsed invocation: the command plus global options.
#[derive(Debug, Clone, Parser)]
#[command(name = "cartan", version, about = "Geodesics, cut times and distances on the Cartan group")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command has its own default.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Integrator tolerance. Defaults per command (1e-12 for trajectories,
    /// 1e-14 for shooting).
    #[arg(long, env = TOL_ENV, global = true)]
    pub tol: Option<f64>,

    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    /// Seed for commands that sample at random.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct CovectorArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
}

impl CovectorArgs {
    fn covector(&self) -> crate::Result<Covector> {
        Covector::new(self.theta, self.c, self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Normalized Engel and Cartan cut times per family.
    Cut,
    /// Normalized Maxwell times `t1z`, `t1v`, `t2v` and their combination.
    Maxwell,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Stratum, energy and elliptic modulus of a covector.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[command(flatten)]
        lambda: CovectorArgs,
        /// Width of the bands treated as the lower-dimensional strata.
        #[arg(long, default_value_t = 1e-12)]
        band: f64,
    },
    /// Sampled geodesic `Exp(λ, t)` on `[0, t]`.
    #[command(allow_negative_numbers = true)]
    Exp {
        #[command(flatten)]
        lambda: CovectorArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Number of intervals; `samples + 1` rows are written.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Longest optimal elasticae, marking the Engel-optimal and
    /// Cartan-optimal arcs.
    Elastica {
        /// Moduli to draw; defaults to an open grid of `--grid` points.
        #[arg(long, value_delimiter = ',')]
        k: Vec<f64>,
        #[arg(long, default_value_t = 9)]
        grid: usize,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Intervals per curve on `[0, t_cut^C]`.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// `k0`, `k1`, `t1z(0)`, `t2v(0)` and `ζ`, computed from scratch.
    Constants,
    /// Normalized cut-time or Maxwell-time curves on an open k-grid.
    Tables {
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = TableKind::Cut)]
        kind: TableKind,
    },
    /// Engel and Cartan cut times for random covectors in C1, C2 and C6.
    Compare {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Minimizer `(λ, t)` from the identity to `q`.
    #[command(allow_negative_numbers = true)]
    Shoot {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, allow_hyphen_values = true)]
        w: f64,
        /// Max-norm residual tolerance on the canonical scale.
        #[arg(long, default_value_t = SolverConfig::default().tol)]
        residual_tol: f64,
        #[arg(long, default_value_t = SolverConfig::default().max_starts)]
        max_starts: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Inflectional,
    NonInflectional,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::NonFinite(_) | Error::Stratum(_) | Error::NotInDomain { .. } => EXIT_DOMAIN,
        Error::NoConvergence { .. } | Error::NoRoot { .. } | Error::Bracket(_) | Error::Divergent => {
            EXIT_CONVERGENCE
        }
        Error::Violation { .. } => EXIT_INTERNAL,
    }
}

fn error_kind(code: i32) -> &'static str {
    match code {
        EXIT_DOMAIN => "domain",
        EXIT_CONVERGENCE => "convergence",
        EXIT_PARSE => "parse",
        _ => "internal",
    }
}

/// Structured error object written to the error sink.
pub fn error_json(code: i32, message: &str, detail: Value) -> Value {
    json!({ "error": error_kind(code), "code": code, "message": message, "detail": detail })
}

fn error_detail(e: &Error) -> Value {
    match e {
        Error::NotInDomain { zv } => json!({ "zv": zv }),
        Error::NoConvergence { starts, best_residual } => json!({ "starts": starts, "best_residual": best_residual }),
        Error::Violation { engel, cartan, zeta } => json!({ "engel": engel, "cartan": cartan, "zeta": zeta }),
        _ => Value::Null,
    }
}

fn report(err: &mut dyn Write, code: i32, message: &str, detail: Value) -> i32 {
    let _ = writeln!(err, "{}", error_json(code, message, detail));
    code
}

/// Parse `args` (including the program name) and run the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            report(err, EXIT_PARSE, e.render().to_string().trim_end(), Value::Null)
        }
    }
}

/// Run a parsed configuration.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(tol) = cfg.tol {
        if !(tol.is_finite() && tol > 0.0) {
            return report(err, EXIT_PARSE, &format!("tolerance {tol} must be positive"), Value::Null);
        }
    }
    let mut file;
    let sink: &mut dyn Write = match &cfg.output {
        Some(p) => match File::create(p) {
            Ok(f) => {
                file = BufWriter::new(f);
                &mut file
            }
            Err(e) => return report(err, EXIT_INTERNAL, &format!("{}: {e}", p.display()), Value::Null),
        },
        None => out,
    };
    let res = dispatch(cfg, sink).and_then(|code| sink.flush().map(|_| code).map_err(CliError::Io));
    match res {
        Ok(code) => code,
        Err(CliError::Lib(e)) => report(err, exit_code(&e), &e.to_string(), error_detail(&e)),
        Err(CliError::Io(e)) => report(err, EXIT_INTERNAL, &e.to_string(), Value::Null),
    }
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type CliResult = std::result::Result<i32, CliError>;

fn dispatch(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    match &cfg.command {
        Command::Classify { lambda, band } => cmd_classify(&lambda.covector()?, *band, cfg.format.unwrap_or(Format::Json), out),
        Command::Exp { lambda, t, samples } => cmd_exp(
            &lambda.covector()?,
            *t,
            *samples,
            cfg.tol.unwrap_or(EXP_TOL),
            cfg.format.unwrap_or(Format::Csv),
            out,
        ),
        Command::Elastica { k, grid, family, samples } => {
            let ks = if k.is_empty() { open_grid(*grid) } else { k.clone() };
            let families = match family {
                Some(FamilyArg::Inflectional) => vec![Family::Inflectional],
                Some(FamilyArg::NonInflectional) => vec![Family::NonInflectional],
                None => vec![Family::Inflectional, Family::NonInflectional],
            };
            cmd_elastica(&ks, &families, *samples, cfg.tol.unwrap_or(EXP_TOL), cfg.format.unwrap_or(Format::Csv), out)
        }
        Command::Constants => cmd_constants(cfg.format.unwrap_or(Format::Json), out),
        Command::Tables { grid, kind } => cmd_tables(*grid, *kind, cfg.format.unwrap_or(Format::Csv), out),
        Command::Compare { samples } => cmd_compare(*samples, cfg.seed, cfg.format.unwrap_or(Format::Csv), out),
        Command::Shoot { x, y, z, v, w, residual_tol, max_starts } => {
            let mut sc = SolverConfig {
                tol: *residual_tol,
                max_starts: *max_starts,
                ..SolverConfig::default()
            };
            if let Some(t) = cfg.tol {
                sc.integrator_tol = t;
            }
            cmd_shoot(&GroupPoint::new(*x, *y, *z, *v, *w), &sc, cfg.format.unwrap_or(Format::Json), out)
        }
    }
}

/// Decimal with 15 significant digits, `inf`/`-inf`/`nan` for non-finite.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&e) {
        trim_zeros(format!("{:.*}", (14 - e) as usize, x))
    } else {
        format!("{}e{e}", trim_zeros(mant.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, v: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub stratum: Stratum,
    #[serde(rename = "E")]
    pub energy: f64,
    /// Elliptic modulus on `C1 ∪ C2 ∪ C3`.
    pub k: Option<f64>,
}

pub fn classify_report(lambda: &Covector, band: f64) -> crate::Result<ClassifyReport> {
    let stratum = classify(lambda, band);
    let k = match stratum {
        Stratum::C1 | Stratum::C2 => Some(modulus_in(lambda, stratum)?.value()),
        Stratum::C3 => Some(1.0),
        _ => None,
    };
    Ok(ClassifyReport {
        stratum,
        energy: lambda.energy(),
        k,
    })
}

pub fn cmd_classify(lambda: &Covector, band: f64, format: Format, out: &mut dyn Write) -> CliResult {
    let r = classify_report(lambda, band)?;
    match format {
        Format::Json => write_json(out, &r)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["stratum", "E", "k"])?;
            w.write_record([r.stratum.label().to_string(), fmt_num(r.energy), r.k.map(fmt_num).unwrap_or_default()])?;
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SampleRow {
    t: f64,
    x: f64,
    y: f64,
    z: f64,
    v: f64,
    w: f64,
    theta: f64,
}

impl From<&TrajectorySample> for SampleRow {
    fn from(s: &TrajectorySample) -> Self {
        SampleRow {
            t: s.t,
            x: s.q.x,
            y: s.q.y,
            z: s.q.z,
            v: s.q.v,
            w: s.q.w,
            theta: s.theta,
        }
    }
}

fn sample_fields(s: &TrajectorySample) -> [String; 7] {
    [s.t, s.q.x, s.q.y, s.q.z, s.q.v, s.q.w, s.theta].map(fmt_num)
}

const SAMPLE_HEADER: [&str; 7] = ["t", "x", "y", "z", "v", "w", "theta"];

fn uniform_times(t_end: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..=n).map(|i| if i == n { t_end } else { t_end * i as f64 / n as f64 }).collect()
}

pub fn cmd_exp(lambda: &Covector, t: f64, samples: usize, tol: f64, format: Format, out: &mut dyn Write) -> CliResult {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Domain(format!("time t = {t} must be finite and non-negative")).into());
    }
    let traj = exp_at_times(lambda, &uniform_times(t, samples), tol)?;
    match format {
        Format::Json => {
            let rows: Vec<SampleRow> = traj.samples.iter().map(SampleRow::from).collect();
            write_json(
                out,
                &json!({
                    "lambda": lambda,
                    "stratum": lambda.stratum(),
                    "tol": tol,
                    "samples": rows,
                }),
            )?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(SAMPLE_HEADER)?;
            for s in &traj.samples {
                w.write_record(sample_fields(s))?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// One elastica of the family drawn by `elastica`.
#[derive(Debug, Clone)]
pub struct ElasticaCurve {
    pub family: Family,
    pub k: f64,
    pub lambda: Covector,
    /// `μ_λ`, so that `μ t` is the normalized time.
    pub mu: f64,
    pub t_engel: f64,
    pub t_cartan: f64,
    pub samples: Vec<TrajectorySample>,
}

impl ElasticaCurve {
    /// `true` while the arc is still optimal for the Engel projection.
    pub fn in_engel_arc(&self, t: f64) -> bool {
        t <= self.t_engel * (1.0 + 1e-12)
    }
}

/// Elastica with `α = 1`, `β = 0` started at its point of least absolute
/// curvature, sampled up to the Cartan cut time. The Engel cut time is
/// inserted as a sample so that the arc split is exact.
pub fn elastica_curve(family: Family, k: f64, samples: usize, tol: f64) -> crate::Result<ElasticaCurve> {
    let m = Modulus::new(k)?;
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!("modulus k = {k} must lie in (0, 1)")));
    }
    let kk = complete_k(m)?;
    let (stratum, phi) = match family {
        Family::Inflectional => (Stratum::C1, kk),
        Family::NonInflectional => (Stratum::C2, k * kk),
    };
    let lambda = EllipticCoords::from_parts(stratum, k, phi, 1.0, 0.0, 1.0)?;
    let mu = normalization(&lambda)?.ok_or(Error::Stratum(stratum))?;
    let t_cartan = cut_time(&lambda)?;
    let t_engel = engel_cut_time(&project_engel_cov(&lambda))?;
    let mut times = uniform_times(t_cartan, samples);
    if t_engel < t_cartan && !times.contains(&t_engel) {
        let at = times.partition_point(|&t| t < t_engel);
        times.insert(at, t_engel);
    }
    let samples = exp_at_times(&lambda, &times, tol)?.samples;
    Ok(ElasticaCurve {
        family,
        k,
        lambda,
        mu,
        t_engel,
        t_cartan,
        samples,
    })
}

fn family_label(f: Family) -> &'static str {
    match f {
        Family::Inflectional => "inflectional",
        Family::NonInflectional => "non-inflectional",
    }
}

fn arc_label(curve: &ElasticaCurve, t: f64) -> &'static str {
    if curve.in_engel_arc(t) {
        "engel"
    } else {
        "cartan"
    }
}

pub fn cmd_elastica(
    ks: &[f64],
    families: &[Family],
    samples: usize,
    tol: f64,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let jobs: Vec<(Family, f64)> = families.iter().flat_map(|&f| ks.iter().map(move |&k| (f, k))).collect();
    let curves = jobs
        .par_iter()
        .map(|&(f, k)| elastica_curve(f, k, samples, tol))
        .collect::<crate::Result<Vec<_>>>()?;
    match format {
        Format::Json => {
            let cs: Vec<Value> = curves
                .iter()
                .map(|c| {
                    let rows: Vec<Value> = c
                        .samples
                        .iter()
                        .map(|s| {
                            let mut r = serde_json::to_value(SampleRow::from(s)).expect("serializable row");
                            r["mu_t"] = json!(c.mu * s.t);
                            r["arc"] = json!(arc_label(c, s.t));
                            r
                        })
                        .collect();
                    json!({
                        "family": c.family,
                        "k": c.k,
                        "lambda": c.lambda,
                        "mu": c.mu,
                        "t_engel": c.t_engel,
                        "t_cartan": c.t_cartan,
                        "samples": rows,
                    })
                })
                .collect();
            write_json(out, &json!({ "curves": cs }))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["family", "k", "t", "mu_t", "x", "y", "z", "v", "w", "theta", "arc"])?;
            for c in &curves {
                for s in &c.samples {
                    let mut rec = vec![family_label(c.family).to_string(), fmt_num(c.k), fmt_num(s.t), fmt_num(c.mu * s.t)];
                    rec.extend(sample_fields(s).into_iter().skip(1));
                    rec.push(arc_label(c, s.t).to_string());
                    w.write_record(&rec)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Constants {
    pub k0: f64,
    pub k1: f64,
    pub t1z0: f64,
    pub t2v0: f64,
    pub zeta: f64,
    pub zeta_below_two: bool,
}

pub fn constants() -> crate::Result<Constants> {
    let (k0, k1) = critical_moduli()?;
    let m0 = Modulus::new(0.0)?;
    let z = zeta()?;
    Ok(Constants {
        k0,
        k1,
        t1z0: t1z(m0)?,
        t2v0: t2v(m0)?,
        zeta: z.value,
        zeta_below_two: z.value < 2.0,
    })
}

pub fn cmd_constants(format: Format, out: &mut dyn Write) -> CliResult {
    let c = constants()?;
    match format {
        Format::Json => write_json(out, &c)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["name", "value"])?;
            for (name, v) in [("k0", c.k0), ("k1", c.k1), ("t1z0", c.t1z0), ("t2v0", c.t2v0), ("zeta", c.zeta)] {
                w.write_record([name.to_string(), format!("{v:.6}")])?;
            }
            w.write_record(["zeta_below_two", if c.zeta_below_two { "true" } else { "false" }])?;
            w.flush()?;
        }
    }
    if !c.zeta_below_two {
        return Err(Error::Violation {
            engel: 1.0,
            cartan: c.zeta,
            zeta: 2.0,
        }
        .into());
    }
    Ok(EXIT_OK)
}

pub fn cmd_tables(grid: usize, kind: TableKind, format: Format, out: &mut dyn Write) -> CliResult {
    let ks = open_grid(grid);
    let (header, rows): (Vec<&str>, Vec<Vec<Value>>) = match kind {
        TableKind::Cut => (
            vec!["family", "k", "engel", "cartan"],
            cut_time_curves(&ks)?
                .iter()
                .map(|r| vec![json!(family_label(r.family)), json!(r.k), json!(r.engel), json!(r.cartan)])
                .collect(),
        ),
        TableKind::Maxwell => (
            vec!["k", "t1z", "t1v", "t2v", "t1"],
            table(&ks)?
                .iter()
                .map(|r| vec![json!(r.k), json!(r.t1z), json!(r.t1v), json!(r.t2v), json!(r.t1_combined)])
                .collect(),
        ),
    };
    write_rows(&header, &rows, format, out)?;
    Ok(EXIT_OK)
}

/// Rows of numbers and labels as CSV or as `{"rows": [{..}, ..]}`.
fn write_rows(header: &[&str], rows: &[Vec<Value>], format: Format, out: &mut dyn Write) -> std::result::Result<(), CliError> {
    match format {
        Format::Json => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r.iter().cloned()).collect()))
                .collect();
            write_json(out, &json!({ "rows": objs }))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(header)?;
            for r in rows {
                w.write_record(r.iter().map(|v| match v {
                    Value::Number(n) => fmt_num(n.as_f64().unwrap_or(f64::NAN)),
                    Value::String(s) => s.clone(),
                    Value::Null => "inf".to_string(),
                    other => other.to_string(),
                }))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Random covector: uniform over `{C1, C2, C6}`, `k ∈ (0.01, 0.99)`, phase
/// uniform over a period, `α` log-uniform in `(0.2, 5)`, `β` uniform.
pub fn random_covector<R: Rng>(rng: &mut R) -> crate::Result<Covector> {
    use std::f64::consts::TAU;
    let beta = rng.random_range(0.0..TAU);
    let alpha = (rng.random_range(0.2f64.ln()..5.0f64.ln())).exp();
    match rng.random_range(0..3) {
        0 | 1 => {
            let st = if rng.random_bool(0.5) { Stratum::C1 } else { Stratum::C2 };
            let k = rng.random_range(0.01..0.99);
            let dir = if st == Stratum::C2 && rng.random_bool(0.5) { -1.0 } else { 1.0 };
            let kk = complete_k(Modulus::new(k)?)?;
            let period = match st {
                Stratum::C1 => 4.0 * kk,
                _ => 2.0 * k * kk,
            } / alpha.sqrt();
            let phi = rng.random_range(0.0..period);
            EllipticCoords::from_parts(st, k, phi, alpha, beta, dir)
        }
        _ => {
            let c = alpha * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            Covector::new(rng.random_range(0.0..TAU), c, 0.0, beta)
        }
    }
}

pub fn cmd_compare(samples: usize, seed: u64, format: Format, out: &mut dyn Write) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambdas = (0..samples).map(|_| random_covector(&mut rng)).collect::<crate::Result<Vec<_>>>()?;
    let cmp = lambdas.par_iter().map(compare).collect::<crate::Result<Vec<_>>>()?;
    let rows: Vec<Vec<Value>> = lambdas
        .iter()
        .zip(&cmp)
        .map(|(l, c)| {
            vec![
                json!(l.stratum().label()),
                json!(l.theta),
                json!(l.c),
                json!(l.alpha),
                json!(l.beta),
                json!(c.engel),
                json!(c.cartan),
                json!(c.ratio),
            ]
        })
        .collect();
    write_rows(&["stratum", "theta", "c", "alpha", "beta", "engel", "cartan", "ratio"], &rows, format, out)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ShootReport {
    pub theta: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub t: f64,
    pub residual: f64,
    pub distance: f64,
    pub homogeneous_residual: f64,
    pub iterations: usize,
    pub starts_tried: usize,
    pub rcond: f64,
    pub ill_conditioned: bool,
}

pub fn cmd_shoot(q: &GroupPoint, cfg: &SolverConfig, format: Format, out: &mut dyn Write) -> CliResult {
    let r = solve(q, cfg)?;
    let rep = ShootReport {
        theta: r.lambda.theta,
        c: r.lambda.c,
        alpha: r.lambda.alpha,
        beta: r.lambda.beta,
        t: r.t,
        residual: r.residual,
        distance: r.distance,
        homogeneous_residual: r.homogeneous_residual,
        iterations: r.iterations,
        starts_tried: r.starts_tried,
        rcond: r.rcond,
        ill_conditioned: r.ill_conditioned,
    };
    match format {
        Format::Json => write_json(out, &rep)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "theta",
                "c",
                "alpha",
                "beta",
                "t",
                "residual",
                "distance",
                "homogeneous_residual",
                "iterations",
                "starts_tried",
                "rcond",
                "ill_conditioned",
            ])?;
            let mut rec: Vec<String> = [rep.theta, rep.c, rep.alpha, rep.beta, rep.t, rep.residual, rep.distance, rep.homogeneous_residual]
                .map(fmt_num)
                .to_vec();
            rec.extend([rep.iterations.to_string(), rep.starts_tried.to_string(), fmt_num(rep.rcond), rep.ill_conditioned.to_string()]);
            w.write_record(&rec)?;
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}
