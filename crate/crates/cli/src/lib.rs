//! Command-line front end: tables, verification suites, expansions and reports.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use treesym::arrangements as arr;
use treesym::genfun::{self, check_bound};
use treesym::pathtree::{phi_forward, psi_inverse};
use treesym::symfunc::Basis;
use treesym::trees::parse_word;
use treesym::verify::{self, CheckRecord, Suite};
use treesym::{gamma, nested, ArrangementKind, Gen, LabeledTree, RibbonSum, SymFunc, TreeShape};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] treesym::Error),
    #[error("cache: {0}")]
    Cache(String),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Target {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "G", alias = "g")]
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Expr {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "G_canopy", alias = "g_canopy")]
    GCanopy,
    Semiorder,
    Linial,
    Shi,
    Zonal,
}

fn max_degree_parser(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(k) => Ok(k),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "treesym", version, about = "Ascent/descent statistics of labeled binary trees as symmetric functions")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = genfun::DEFAULT_MAX_DEGREE, value_parser = max_degree_parser)]
    pub max_degree: usize,
    /// Directory for cached results.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
pub enum Command {
    /// Tables of B_n or G_n for n = 1..=N.
    Tables {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// Run verification suites for sizes up to N.
    Verify {
        /// all, or one of: functional ribbon bijection theta specialization arrangements positivity gamma symmetry
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Expand a symmetric function in a basis.
    Expand {
        #[arg(long, value_enum)]
        expr: Expr,
        #[arg(long)]
        n: usize,
        /// m, h, e, s, or r (ribbons, for G, G_canopy and semiorder)
        #[arg(long, default_value = "m")]
        basis: String,
        /// U/D word of length n-1, for G_canopy.
        #[arg(long)]
        canopy: Option<String>,
        /// Integer assignments such as lb=1,l=0,rb=1,r=0,q=2.
        #[arg(long)]
        params: Option<String>,
    },
    /// Region count and Frobenius checks for one arrangement.
    Arrangement {
        /// braid, catalan, shi, linial, semiorder, p_semiorder(p) or p_catalan(p)
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Right-edge distribution of LBS trees and its gamma-vector.
    Gamma {
        #[arg(long)]
        n: usize,
    },
}

/// Settings that affect results; part of every cache key.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub max_degree: usize,
    pub seed: u64,
}

/// A command result: the JSON payload plus its text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub pass: bool,
}

fn text_lines(value: &Value) -> Vec<String> {
    value["text"].as_array().into_iter().flatten().filter_map(|l| l.as_str().map(String::from)).collect()
}

fn parse_params(s: Option<&str>) -> CliResult<BTreeMap<Gen, BigInt>> {
    let mut out = BTreeMap::new();
    for item in s.unwrap_or_default().split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| CliError::Usage(format!("bad parameter {item:?}")))?;
        let gen = Gen::from_name(k.trim()).ok_or_else(|| CliError::Usage(format!("unknown parameter {k:?}")))?;
        let v: BigInt = v.trim().parse().map_err(|_| CliError::Usage(format!("non-integer value in {item:?}")))?;
        out.insert(gen, v);
    }
    Ok(out)
}

fn usage_bound(n: usize, max_degree: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    check_bound(n, max_degree).map_err(|e| CliError::Usage(e.to_string()))
}

fn tables(target: Target, n_max: usize, cfg: &RunConfig) -> CliResult<Outcome> {
    usage_bound(n_max, cfg.max_degree)?;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for n in 1..=n_max {
        let body = match target {
            Target::B => genfun::compute_b_abgd(n, cfg.max_degree)?.to_string(),
            Target::G => genfun::render_abgd_ribbons(&genfun::collect_ribbons(&nested::ribbon_expansion_formal(n))?),
        };
        let name = if target == Target::B { "B" } else { "G" };
        text.push(format!("{name}_{n} = {body}"));
        rows.push(json!({ "n": n, "value": body }));
    }
    let target = if target == Target::B { "B" } else { "G" };
    Ok(Outcome { value: json!({ "target": target, "rows": rows, "text": text }), pass: true })
}

fn parse_suites(s: &str) -> CliResult<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.split(',')
        .map(|x| x.trim().parse::<Suite>().map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

/// Φ/Ψ round trips on random word-labeled trees just beyond the exhaustive range.
fn sampled_round_trips(n_max: usize, seed: u64) -> CheckRecord {
    let n = (n_max + 2).min(9);
    let shapes = TreeShape::all(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for _ in 0..200 {
        let shape = shapes.choose(&mut rng).expect("nonempty").clone();
        let labels: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=n as u32)).collect();
        let t = LabeledTree::new(shape, labels).expect("positive labels");
        if psi_inverse(&phi_forward(&t)) != t {
            failure = Some(format!("tree {t}"));
            break;
        }
    }
    let pass = failure.is_none();
    CheckRecord {
        suite: Suite::Bijection,
        name: "sampled_round_trips".into(),
        n,
        pass,
        detail: Some(failure.unwrap_or_else(|| format!("200 samples, seed {seed}"))),
    }
}

fn verify_cmd(suite: &str, n_max: usize, cfg: &RunConfig) -> CliResult<Outcome> {
    let suites = parse_suites(suite)?;
    usage_bound(n_max, cfg.max_degree)?;
    let mut records = verify::run_suites(&suites, n_max, cfg.max_degree)?;
    if suites.contains(&Suite::Bijection) {
        let at = records.iter().rposition(|r| r.suite == Suite::Bijection).map_or(records.len(), |i| i + 1);
        records.insert(at, sampled_round_trips(n_max, cfg.seed));
    }
    let pass = records.iter().all(|r| r.pass);
    let first_failure = records.iter().find(|r| !r.pass).cloned();
    let mut text: Vec<String> = records
        .iter()
        .map(|r| {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let detail = match (&r.detail, r.pass) {
                (Some(d), false) => format!(": {d}"),
                _ => String::new(),
            };
            format!("{status} {}/{} n={}{detail}", r.suite, r.name, r.n)
        })
        .collect();
    for r in records.iter().filter(|r| r.pass && r.name == "schur_positive") {
        text.push(format!("G_{} = {}", r.n, r.detail.clone().unwrap_or_default()));
    }
    let passed = records.iter().filter(|r| r.pass).count();
    text.push(format!("{passed}/{} checks passed", records.len()));
    let value = json!({
        "suites": suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
        "n": n_max,
        "pass": pass,
        "checks": records,
        "first_failure": first_failure,
        "text": text,
    });
    Ok(Outcome { value, pass })
}

fn ribbon_value(f: &RibbonSum, point: &BTreeMap<Gen, BigInt>) -> (Vec<Value>, String) {
    let f = f.map_coeffs(|c| c.specialize(point));
    let terms = f.terms().map(|(a, c)| json!({ "index": a.subscript(), "coeff": c.to_string() })).collect();
    (terms, f.to_string())
}

fn sym_value(f: &SymFunc, basis: Basis, point: &BTreeMap<Gen, BigInt>) -> CliResult<(Vec<Value>, String)> {
    let f = f.specialize(point);
    let coeffs = f.to_basis(basis).map_err(|e| CliError::Usage(format!("basis {}: {e}", basis.letter())))?;
    let terms =
        coeffs.iter().rev().map(|(l, c)| json!({ "index": l.subscript(), "coeff": c.to_string() })).collect();
    Ok((terms, f.render_in(basis)?))
}

fn expand(
    expr: Expr,
    n: usize,
    basis: &str,
    canopy: Option<&str>,
    params: Option<&str>,
    cfg: &RunConfig,
) -> CliResult<Outcome> {
    usage_bound(n, cfg.max_degree)?;
    let basis = Basis::from_letter(basis).ok_or_else(|| CliError::Usage(format!("unknown basis {basis:?}")))?;
    let point = parse_params(params)?;
    if canopy.is_some() != (expr == Expr::GCanopy) {
        return Err(CliError::Usage("--canopy is required for G_canopy and accepted only there".into()));
    }
    let nu = canopy.map(parse_word).transpose().map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(nu) = &nu {
        if nu.len() + 1 != n {
            return Err(CliError::Usage(format!("canopy must have length {}", n - 1)));
        }
    }
    let (terms, rendered) = if basis == Basis::R {
        let f = match expr {
            Expr::G => nested::ribbon_expansion_formal(n),
            Expr::GCanopy => nested::ribbon_expansion_canopy_formal(n, nu.as_deref().unwrap_or_default())?,
            Expr::Semiorder => arr::semiorder_frobenius(n)?.ribbon_form,
            _ => return Err(CliError::Usage("ribbon basis is available for G, G_canopy and semiorder".into())),
        };
        ribbon_value(&f, &point)
    } else {
        let f = match expr {
            Expr::G => genfun::compute_g(n, cfg.max_degree)?,
            Expr::GCanopy => genfun::compute_g_canopy(n, nu.as_deref().unwrap_or_default(), cfg.max_degree)?,
            Expr::Semiorder => arr::semiorder_frobenius(n)?.h_form,
            Expr::Linial => arr::linial_h_expansion(n),
            Expr::Shi => arr::shi_parking_expansion(n),
            Expr::Zonal => arr::linial_zonal_expansion(n).to_sym()?,
        };
        sym_value(&f, basis, &point)?
    };
    let params: BTreeMap<&str, String> = point.iter().map(|(g, v)| (g.name(), v.to_string())).collect();
    let value = json!({
        "expr": format!("{expr:?}"),
        "n": n,
        "basis": basis.letter(),
        "canopy": canopy,
        "params": params,
        "terms": terms,
        "text": [rendered],
    });
    Ok(Outcome { value, pass: true })
}

fn checks_pass(v: &Value) -> bool {
    v["checks"].as_array().into_iter().flatten().all(|c| c["pass"] == true)
}

fn check_lines(v: &Value) -> Vec<String> {
    v["checks"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|c| format!("{} {}", if c["pass"] == true { "PASS" } else { "FAIL" }, c["name"].as_str().unwrap_or("")))
        .collect()
}

fn arrangement(kind: &str, n: usize, cfg: &RunConfig) -> CliResult<Outcome> {
    let kind: ArrangementKind = kind.parse().map_err(|e: treesym::Error| CliError::Usage(e.to_string()))?;
    if kind == ArrangementKind::Semiorder || matches!(kind, ArrangementKind::Linial | ArrangementKind::Shi) {
        usage_bound(n, cfg.max_degree)?;
    }
    let mut v = arr::arrangement_report(kind, n, cfg.max_degree)?;
    let mut text = vec![format!("{kind} n={n}: {} regions", v["region_count"].as_str().unwrap_or(""))];
    text.extend(check_lines(&v));
    let pass = checks_pass(&v);
    v["text"] = json!(text);
    Ok(Outcome { value: v, pass })
}

fn gamma_cmd(n: usize) -> CliResult<Outcome> {
    let mut v = gamma::gamma_report(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let join = |k: &str| v[k].as_array().into_iter().flatten().filter_map(Value::as_str).collect::<Vec<_>>().join(", ");
    let mut text = vec![format!("distribution: [{}]", join("distribution")), format!("gamma: [{}]", join("gamma"))];
    text.extend(check_lines(&v));
    let d = &v["diagnostics"];
    text.push(format!("sign changes on grid (diagnostic): {} for degree {}", d["sign_changes_on_grid"], d["degree"]));
    let pass = checks_pass(&v);
    v["text"] = json!(text);
    Ok(Outcome { value: v, pass })
}

fn compute(cmd: &Command, cfg: &RunConfig) -> CliResult<Outcome> {
    match cmd {
        Command::Tables { target, n } => tables(*target, *n, cfg),
        Command::Verify { suite, n } => verify_cmd(suite, *n, cfg),
        Command::Expand { expr, n, basis, canopy, params } => {
            expand(*expr, *n, basis, canopy.as_deref(), params.as_deref(), cfg)
        }
        Command::Arrangement { kind, n } => arrangement(kind, *n, cfg),
        Command::Gamma { n } => gamma_cmd(*n),
    }
}

/// Hex digest of `(operation, arguments, library version)`.
pub fn cache_key(cmd: &Command, cfg: &RunConfig) -> String {
    let payload = json!({ "op": cmd, "config": cfg, "version": env!("CARGO_PKG_VERSION") });
    hex::encode(Sha256::digest(payload.to_string().as_bytes()))
}

fn cached(dir: &Path, cmd: &Command, cfg: &RunConfig) -> CliResult<Outcome> {
    let path = dir.join(format!("{}.json", cache_key(cmd, cfg)));
    if let Ok(bytes) = std::fs::read(&path) {
        if let Ok(v) = serde_json::from_slice::<Value>(&bytes) {
            if let (Some(value), Some(pass)) = (v.get("value"), v["pass"].as_bool()) {
                return Ok(Outcome { value: value.clone(), pass });
            }
        }
    }
    let out = compute(cmd, cfg)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::Cache(e.to_string()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::Cache(e.to_string()))?;
    let body = json!({ "value": out.value, "pass": out.pass });
    tmp.write_all(body.to_string().as_bytes()).map_err(|e| CliError::Cache(e.to_string()))?;
    tmp.persist(&path).map_err(|e| CliError::Cache(e.to_string()))?;
    Ok(out)
}

pub fn render(out: &Outcome, format: Format) -> String {
    match format {
        Format::Text => text_lines(&out.value).into_iter().map(|l| l + "\n").collect(),
        Format::Json => {
            let mut v = out.value.clone();
            if let Some(obj) = v.as_object_mut() {
                obj.remove("text");
            }
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    let cfg = RunConfig { max_degree: cli.max_degree, seed: cli.seed };
    let result = match &cli.cache_dir {
        Some(dir) => cached(dir, &cli.command, &cfg),
        None => compute(&cli.command, &cfg),
    };
    match result {
        Ok(out) => {
            let _ = stdout.write_all(render(&out, cli.format).as_bytes());
            if out.pass {
                EXIT_PASS
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
