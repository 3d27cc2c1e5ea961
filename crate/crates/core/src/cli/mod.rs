//! Command-line front end: argument model, dispatch, output envelope.
//!
//! Everything the binary does goes through [`run`], so tests can drive the
//! CLI in-process. Payloads are built as `serde_json::Value` (object keys
//! sorted), which keeps output byte-stable and makes cached and freshly
//! computed payloads print identically.

mod cache;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::gl11::{self, Gl11ModuleSpec};
use crate::glrep::{build_generator_matrices, check_superalgebra_relations};
use crate::qaffine::{self, QFnJson, QVerifyOptions};
use crate::report::Report;
use crate::tableaux::{enumerate_tableaux, SkewShape};
use crate::yangian::{self, VerifyOptions};

pub use cache::{Cache, CACHE_FORMAT};

pub const CACHE_ENV: &str = "GTSKEW_CACHE_DIR";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "gtskew", version, about = "Skew representations of super Yangians and quantum affine superalgebras in Gelfand-Tsetlin bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// List the admissible GT tableaux of a skew shape
    Enumerate,
    /// gl(m|n) generator matrices on the GT basis
    Matrices,
    /// Drinfeld currents of the Yangian skew module
    Currents,
    /// q-character (ℓ-weights with multiplicities)
    Qchar,
    /// Full Yangian verification pipeline
    Verify,
    /// Thin/tame verdict for a tensor product of gl(1|1) evaluation modules
    Gl11,
    /// Quantum affine currents and their verification
    Quantum,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub r: usize,
    /// comma list, top row of the GT pattern
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<i64>,
    /// comma list, bottom row (length r)
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub mu: Vec<i64>,
    /// gl(1|1) spec as a JSON list of [a, b] pairs, e.g. '[[3,0],[-1,0]]'
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub spec: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// series truncation order
    #[arg(long, global = true, default_value_t = 6)]
    pub order: usize,
    #[arg(long, global = true, default_value_t = 20)]
    pub samples: usize,
    /// mode window for the quantum relation checks
    #[arg(long, global = true, default_value_t = 4)]
    pub window: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// write to a file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// include wall-clock timing (makes output run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,
}

/// The configuration echoed in every envelope. Output path and cache
/// location are deliberately absent: they do not affect results.
#[derive(Clone, Debug, Serialize)]
pub struct JobConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<SkewShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<Gl11ModuleSpec>,
    pub seed: u64,
    pub truncation_order: usize,
    pub samples: usize,
    pub mode_window: i64,
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// A finished run: the serialized envelope and whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub envelope: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn parse_spec(text: &str) -> Result<Gl11ModuleSpec, CliError> {
    let bad = |e: String| CliError::Usage(format!("--spec: {e}"));
    let raw: Vec<[Value; 2]> = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let as_str = |v: &Value| match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(bad(format!("expected an integer or a rational string, got {other}"))),
    };
    let pairs = raw
        .iter()
        .map(|[a, b]| Ok([as_str(a)?, as_str(b)?]))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Gl11ModuleSpec::try_from(pairs)?)
}

impl JobConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let c = &cli.common;
        let (mut shape, mut spec) = (None, None);
        if cli.command == Command::Gl11 {
            let text = c.spec.as_deref().ok_or_else(|| CliError::Usage("gl11 needs --spec".into()))?;
            spec = Some(parse_spec(text)?);
        } else {
            let (Some(m), Some(n)) = (c.m, c.n) else {
                return Err(CliError::Usage(format!("{:?} needs --m, --n and --lambda", cli.command).to_lowercase()));
            };
            shape = Some(SkewShape::new(m, n, c.r, c.lambda.clone(), c.mu.clone())?);
        }
        if c.window < 1 {
            return Err(CliError::Usage("--window must be at least 1".into()));
        }
        Ok(JobConfig {
            command: cli.command,
            shape,
            spec,
            seed: c.seed,
            truncation_order: c.order,
            samples: c.samples,
            mode_window: c.window,
            format: c.format,
        })
    }

    fn shape(&self) -> &SkewShape {
        self.shape.as_ref().expect("shape commands carry a shape")
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payloads serialize")
}

fn checks(report: &Report) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                let mut o = json!({"name": c.name, "status": if c.passed { "pass" } else { "fail" }});
                if let Some(d) = &c.detail {
                    o["detail"] = json!(d);
                }
                o
            })
            .collect(),
    )
}

fn flag(report: &mut Report, name: &str, ok: bool, detail: &str) {
    report.record(name, ok, (!ok).then(|| detail.to_string()));
}

fn currents_payload(shape: &SkewShape) -> Result<Value, CliError> {
    Ok(to_value(&yangian::build_current_rep(shape)?))
}

fn q_currents_payload(shape: &SkewShape, window: i64) -> Result<Value, CliError> {
    let rep = qaffine::build_q_current_rep(shape)?;
    let d: Vec<Vec<QFnJson>> = rep.d.iter().map(|col| col.iter().map(QFnJson::from).collect()).collect();
    Ok(json!({
        "shape": to_value(&rep.shape),
        "basis": to_value(&rep.basis),
        "d": to_value(&d),
        "x_modes": to_value(&rep.x_modes(window)),
    }))
}

fn yangian_report(shape: &SkewShape, cfg: &JobConfig) -> Result<Report, CliError> {
    let opts = VerifyOptions {
        samples: cfg.samples,
        order: cfg.truncation_order,
        seed: cfg.seed,
    };
    let mut report = check_superalgebra_relations(&build_generator_matrices(shape)?);
    let rep = yangian::build_current_rep(shape)?;
    report.extend(yangian::verify_drinfeld_relations(&rep, &opts)?);
    let (central, _) = yangian::verify_central_series(&rep, cfg.truncation_order)?;
    report.extend(central);
    flag(&mut report, "thin", yangian::is_thin(&rep), "two basis vectors share an ℓ-weight");
    let cert = yangian::is_irreducible(&rep);
    flag(&mut report, "irreducible", cert.irreducible, "transformation graph is not strongly connected");
    report.extend(yangian::check_nonvanishing(&rep));
    Ok(report)
}

fn quantum_report(shape: &SkewShape, cfg: &JobConfig) -> Result<Report, CliError> {
    let g = qaffine::q_gt_action(shape)?;
    let mut report = qaffine::check_q_superalgebra_relations(&g);
    flag(
        &mut report,
        "classical limit of the quantum action",
        qaffine::q_gt_classical_limit(&g)?,
        "some matrix element differs from the classical one at q = 1",
    );
    let rep = qaffine::build_q_current_rep(shape)?;
    let opts = QVerifyOptions {
        window: cfg.mode_window,
        samples: cfg.samples,
        seed: cfg.seed,
    };
    report.extend(qaffine::verify_q_relations(&rep, &opts)?);
    flag(&mut report, "central series is scalar", qaffine::q_central_series(&rep).is_some(), "not scalar");
    flag(&mut report, "thin", qaffine::is_q_thin(&rep), "two basis vectors share an ℓ-weight");
    let cert = qaffine::is_q_irreducible(&rep);
    flag(&mut report, "irreducible", cert.irreducible, "transformation graph is not strongly connected");
    report.extend(qaffine::check_q_nonvanishing(&rep));
    let r = qaffine::build_q_r_matrix(shape.m(), shape.n())?;
    report.extend(qaffine::ybe_spot_check(&r, &crate::exactmath::int(2), 5, cfg.seed, true));
    Ok(report)
}

fn cached(
    cache: Option<&Cache>,
    kind: &str,
    key: &Value,
    compute: impl FnOnce() -> Result<Value, CliError>,
) -> Result<Value, CliError> {
    let Some(cache) = cache else {
        return compute();
    };
    if let Some(v) = cache.get(kind, key) {
        return Ok(v);
    }
    let v = compute()?;
    cache.put(kind, key, &v)?;
    Ok(v)
}

/// Runs one job. `Err` is a usage or input error (exit 2); a finished run
/// with a failed check has `passed = false` (exit 1).
pub fn run(cfg: &JobConfig, cache: Option<&Cache>, timing: bool) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut passed = true;
    let payload = match cfg.command {
        Command::Enumerate => {
            let basis = enumerate_tableaux(cfg.shape());
            json!({"count": basis.len(), "tableaux": to_value(&basis)})
        }
        Command::Matrices => to_value(&build_generator_matrices(cfg.shape())?),
        Command::Currents => {
            let key = to_value(cfg.shape());
            cached(cache, "currents", &key, || currents_payload(cfg.shape()))?
        }
        Command::Qchar => {
            let rep = yangian::build_current_rep(cfg.shape())?;
            let q: Vec<Value> = yangian::q_character(&rep)
                .iter()
                .map(|(w, k)| json!({"weight": to_value(w), "multiplicity": k}))
                .collect();
            json!({"dim": rep.basis.len(), "qchar": q})
        }
        Command::Verify => {
            let report = yangian_report(cfg.shape(), cfg)?;
            passed = report.passed();
            json!({"status": if passed { "pass" } else { "fail" }, "checks": checks(&report)})
        }
        Command::Gl11 => {
            let spec = cfg.spec.as_ref().expect("gl11 carries a spec");
            let v = gl11::analyze_tameness(spec)?;
            let flipped = gl11::parity_flip_tameness(spec)?;
            json!({
                "dim": 1usize << spec.k(),
                "thin": v.thin,
                "tame": v.tame,
                "flipped_tame": flipped.tame,
                "witness": v.witness,
            })
        }
        Command::Quantum => {
            let key = json!({"shape": to_value(cfg.shape()), "window": cfg.mode_window});
            let currents = cached(cache, "quantum", &key, || q_currents_payload(cfg.shape(), cfg.mode_window))?;
            let report = quantum_report(cfg.shape(), cfg)?;
            passed = report.passed();
            json!({"status": if passed { "pass" } else { "fail" }, "checks": checks(&report), "currents": currents})
        }
    };
    let mut envelope = json!({
        "version": VERSION,
        "config": to_value(cfg),
        "payload": payload,
    });
    if timing {
        envelope["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    Ok(Outcome { envelope, passed })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(o) => o.iter().for_each(|(k, x)| flatten(&join(prefix, k), x, out)),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            out.push((prefix.into(), a.iter().map(scalar).collect::<Vec<_>>().join(" ")))
        }
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&join(prefix, &i.to_string()), x, out)),
        other => out.push((prefix.into(), scalar(other))),
    }
}

fn join(prefix: &str, k: &str) -> String {
    if prefix.is_empty() {
        k.into()
    } else {
        format!("{prefix}.{k}")
    }
}

/// Human-readable rendering: check lists as a status table, everything
/// else as `path  value` lines.
pub fn render_table(envelope: &Value) -> String {
    let mut out = format!("gtskew {}\n", scalar(&envelope["version"]));
    let payload = &envelope["payload"];
    if let Some(cs) = payload["checks"].as_array() {
        let width = cs.iter().filter_map(|c| c["name"].as_str()).map(|s| s.chars().count()).max().unwrap_or(0);
        for c in cs {
            let name = c["name"].as_str().unwrap_or_default();
            let pad = width - name.chars().count();
            out += &format!("{name}{}  {}", " ".repeat(pad), scalar(&c["status"]));
            if let Some(d) = c["detail"].as_str() {
                out += &format!("  ({d})");
            }
            out.push('\n');
        }
        out += &format!("overall  {}\n", scalar(&payload["status"]));
        return out;
    }
    let mut rows = Vec::new();
    flatten("", payload, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        let pad = width - k.chars().count();
        out += &format!("{k}{}  {v}\n", " ".repeat(pad));
    }
    out
}

/// Text written to the output for a finished run.
pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.envelope).expect("json");
            s.push('\n');
            s
        }
        Format::Table => render_table(&outcome.envelope),
    }
}

/// Parses, runs, writes; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = JobConfig::from_cli(&cli).and_then(|cfg| {
        let cache = cli.common.cache_dir.as_ref().map(|d| Cache::new(d.clone()));
        let outcome = run(&cfg, cache.as_ref(), cli.common.timing)?;
        let text = render(&outcome, cfg.format);
        match &cli.common.output {
            Some(p) => std::fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(outcome.exit_code())
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gtskew: {e}");
            e.exit_code()
        }
    }
}
