//! `np1cc`: construct, verify and analyse nearly perfect binary 1-covering codes.
//!
//! Exit codes: 0 success, 1 the input failed verification, 2 usage or I/O error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use np1cc::balanced::{base_pairs, build_balanced, is_balanced, recursion_pairs, type1_coordinate_counts};
use np1cc::bounds::{bound, BoundName, BoundReport};
use np1cc::census::census;
use np1cc::construct::{build, Recipe};
use np1cc::extend::{extend_np1cc, puncture_scan};
use np1cc::np1cc::{structure_violations, verify_np1cc, Violation};
use np1cc::perfect::Lambda;
use np1cc::spectra::{is_distance_invariant, rational_text, spectrum, WeightCase};
use np1cc::{translate, Code, Word};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "np1cc", version, about = "Nearly perfect binary 1-covering codes")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a named recipe and write it as a .code file.
    Construct {
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        r: usize,
        /// λ′ table for glue-c, lines of `<word> <0|1>`.
        #[arg(long)]
        lambda_file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the NP1CC conditions and every structural statement.
    Verify { file: PathBuf },
    /// Report the type (A, B or C) and Type I pair count.
    Classify { file: PathBuf },
    /// Weight and distance distributions with their transforms.
    Spectrum {
        file: PathBuf,
        /// Analyse the translate `e + C` instead.
        #[arg(long)]
        translate: Option<String>,
    },
    /// List partner pairs and midwords.
    Pairs { file: PathBuf },
    /// Balanced code from self-dual sequences.
    Balanced {
        #[arg(long)]
        r: usize,
        /// Write the sequences, one per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Puncture profile of the extended code.
    ExtendScan { file: PathBuf },
    /// Enumerate every NP1CC of length 2 or 4.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical size bounds for length n and radius R.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long = "R")]
        radius: u32,
        #[arg(long = "M")]
        m: Option<u64>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Library(#[from] np1cc::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Serialize)]
struct Report {
    schema_version: u32,
    command: &'static str,
    inputs: Value,
    results: Value,
}

struct Outcome {
    report: Report,
    /// Text rendering, when it differs from the generic one.
    text: Option<String>,
    failed: bool,
}

impl Outcome {
    fn ok(command: &'static str, inputs: Value, results: Value) -> Self {
        Self::new(command, inputs, results, false)
    }

    fn new(command: &'static str, inputs: Value, results: Value, failed: bool) -> Self {
        Outcome {
            report: Report { schema_version: SCHEMA_VERSION, command, inputs, results },
            text: None,
            failed,
        }
    }
}

fn read_code(path: &Path) -> Result<Code, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Code::parse_code(&text)?)
}

/// Writes via a temporary sibling and a rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn violations_json(v: &[Violation]) -> Value {
    Value::Array(v.iter().map(|x| json!({"check": x.check, "detail": x.detail})).collect())
}

fn file_input(path: &Path) -> Value {
    json!({ "file": path.display().to_string() })
}

fn cmd_construct(recipe: &str, r: usize, lambda_file: Option<&Path>, out: &Path) -> Result<Outcome, CliError> {
    let recipe: Recipe = recipe.parse()?;
    let lambda = match lambda_file {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            Some(Lambda::parse(&text)?)
        }
        None => None,
    };
    let code = build(recipe, r, lambda.as_ref())?;
    write_atomic(out, &code.to_code_string())?;
    let report = verify_np1cc(&code);
    Ok(Outcome::new(
        "construct",
        json!({
            "recipe": recipe.as_str(),
            "r": r,
            "lambda_file": lambda_file.map(|p| p.display().to_string()),
            "out": out.display().to_string(),
        }),
        json!({
            "n": code.length(),
            "M": code.size(),
            "zeroed": code.is_zeroed(),
            "is_np1cc": report.is_np1cc,
            "type": report.code_type,
            "k": report.k,
        }),
        !report.is_np1cc,
    ))
}

fn cmd_verify(path: &Path) -> Result<Outcome, CliError> {
    let code = read_code(path)?;
    let report = verify_np1cc(&code);
    let mut violations: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({"check": "np1cc", "detail": f}))
        .collect();
    if report.is_np1cc {
        if let Value::Array(v) = violations_json(&structure_violations(&code)?) {
            violations.extend(v);
        }
    }
    let pairs: Vec<Value> = report
        .pair_partition
        .as_ref()
        .map(|p| {
            p.pairs
                .iter()
                .map(|p| json!({"c": p.first, "c'": p.second, "type": p.kind}))
                .collect()
        })
        .unwrap_or_default();
    let failed = !report.is_np1cc || !violations.is_empty();
    Ok(Outcome::new(
        "verify",
        file_input(path),
        json!({
            "n": report.n,
            "M": report.m,
            "r": report.r,
            "is_np1cc": report.is_np1cc,
            "type": report.code_type,
            "k": report.k,
            "pairs": pairs,
            "midword_count": report.midwords.len(),
            "violations": violations,
        }),
        failed,
    ))
}

fn cmd_classify(path: &Path) -> Result<Outcome, CliError> {
    let code = read_code(path)?;
    let report = verify_np1cc(&code);
    let type2 = report.pair_partition.as_ref().map_or(0, |p| p.type2_count());
    Ok(Outcome::new(
        "classify",
        file_input(path),
        json!({
            "n": report.n,
            "M": report.m,
            "is_np1cc": report.is_np1cc,
            "type": report.code_type,
            "k": report.k,
            "type2_pairs": type2,
            "failures": report.failures,
        }),
        !report.is_np1cc,
    ))
}

fn cmd_spectrum(path: &Path, shift: Option<&str>) -> Result<Outcome, CliError> {
    let mut code = read_code(path)?;
    if let Some(e) = shift {
        let e: Word = e.parse()?;
        code = translate(&code, &e)?;
    }
    let s = spectrum(&code)?;
    let case = WeightCase::from_a0_a1(s.a[0] as i64, s.a[1] as i64).ok();
    let invariant = if code.is_zeroed() { Some(is_distance_invariant(&code)?) } else { None };
    let results = json!({
        "n": s.n,
        "M": s.m,
        "A": s.a,
        "B": s.b.iter().map(rational_text).collect::<Vec<_>>(),
        "A_prime": s.a_prime.iter().map(rational_text).collect::<Vec<_>>(),
        "B_prime": s.b_prime.iter().map(rational_text).collect::<Vec<_>>(),
        "external_distance": s.external_distance,
        "table1_case": case.map(|c| json!({"case": c, "A0": c.a0_a1().0, "A1": c.a0_a1().1})),
        "distance_invariant": invariant,
    });
    let mut text = String::new();
    let _ = writeln!(text, "n = {}, M = {}, s' = {}", s.n, s.m, s.external_distance);
    let _ = writeln!(text, "{:>3} {:>8} {:>12} {:>12} {:>12}", "i", "A_i", "B_i", "A'_i", "B'_i");
    for i in 0..=s.n {
        let _ = writeln!(
            text,
            "{:>3} {:>8} {:>12} {:>12} {:>12}",
            i,
            s.a[i],
            rational_text(&s.b[i]),
            rational_text(&s.a_prime[i]),
            rational_text(&s.b_prime[i])
        );
    }
    match case {
        Some(c) => {
            let (a0, a1) = c.a0_a1();
            let _ = writeln!(text, "case: {c:?} (A0, A1) = ({a0}, {a1})");
        }
        None => {
            let _ = writeln!(text, "case: none");
        }
    }
    if let Some(inv) = invariant {
        let _ = writeln!(text, "distance invariant: {inv}");
    }
    let mut out = Outcome::ok("spectrum", json!({"file": path.display().to_string(), "translate": shift}), results);
    out.text = Some(text);
    Ok(out)
}

fn cmd_pairs(path: &Path) -> Result<Outcome, CliError> {
    let code = read_code(path)?;
    let report = verify_np1cc(&code);
    let Some(partition) = report.pair_partition.as_ref() else {
        return Ok(Outcome::new(
            "pairs",
            file_input(path),
            json!({"is_np1cc": false, "failures": report.failures}),
            true,
        ));
    };
    let pairs: Vec<Value> = partition
        .pairs
        .iter()
        .map(|p| json!({"c": p.first, "c'": p.second, "type": p.kind}))
        .collect();
    Ok(Outcome::ok(
        "pairs",
        file_input(path),
        json!({
            "is_np1cc": true,
            "type1": partition.type1_count(),
            "type2": partition.type2_count(),
            "pairs": pairs,
            "midwords": report.midwords,
        }),
    ))
}

fn cmd_balanced(r: usize, out: Option<&Path>) -> Result<Outcome, CliError> {
    let pairs = match r {
        3 => vec![base_pairs().swap_remove(0)],
        4 => recursion_pairs(&base_pairs()[0])?,
        _ => return Err(CliError::Usage(format!("--r must be 3 or 4, got {r}"))),
    };
    let sequences: Vec<String> = pairs
        .iter()
        .flat_map(|p| [p.first.to_string(), p.second.to_string()])
        .collect();
    if let Some(path) = out {
        let mut text = sequences.join("\n");
        text.push('\n');
        write_atomic(path, &text)?;
    }
    let code = build_balanced(r)?;
    let balanced = is_balanced(&code)?;
    Ok(Outcome::new(
        "balanced",
        json!({"r": r, "out": out.map(|p| p.display().to_string())}),
        json!({
            "n": code.length(),
            "M": code.size(),
            "pairs": pairs.len(),
            "is_balanced": balanced,
            "per_coordinate_counts": type1_coordinate_counts(&code)?,
            "sequences": sequences,
        }),
        !balanced,
    ))
}

fn cmd_extend_scan(path: &Path) -> Result<Outcome, CliError> {
    let code = read_code(path)?;
    let n = code.length();
    let ec = if n >= 3 && (n - 1).is_power_of_two() { code } else { extend_np1cc(&code)? };
    let profile = puncture_scan(&ec)?;
    let key = Sha256::digest(ec.to_code_string().as_bytes());
    let class_key: String = key.iter().map(|b| format!("{b:02x}")).collect();
    Ok(Outcome::ok(
        "extend-scan",
        file_input(path),
        json!({
            "profile": profile.tags,
            "nA": profile.n_a,
            "nB": profile.n_b,
            "nC": profile.n_c,
            "class_key": class_key,
        }),
    ))
}

fn cmd_census(n: usize, out: Option<&Path>, threads: usize) -> Result<Outcome, CliError> {
    let result = census(n, threads)?;
    if let Some(path) = out {
        let mut text = serde_json::to_string_pretty(&result).expect("census serializes");
        text.push('\n');
        write_atomic(path, &text)?;
    }
    Ok(Outcome::new(
        "census",
        json!({"n": n, "out": out.map(|p| p.display().to_string())}),
        json!({
            "n": result.n,
            "total": result.total,
            "by_type": result.by_type,
            "k_histogram": result.k_histogram,
            "profile_histogram": result.profile_histogram,
            "theorem_violations": result.theorem_violations,
        }),
        !result.theorem_violations.is_empty(),
    ))
}

fn bound_json(b: &BoundReport) -> Value {
    let approx = b.value.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
        / b.value.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    json!({
        "name": b.name,
        "direction": b.direction,
        "value": rational_text(&b.value),
        "approx": approx,
        "satisfied": b.satisfied,
        "tight": b.tight,
    })
}

fn cmd_bounds(n: u32, radius: u32, m: Option<u64>) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for name in BoundName::ALL {
        match bound(name, n, radius, m) {
            Ok(b) => rows.push(bound_json(&b)),
            Err(e) => skipped.push(json!({"name": name, "reason": e.to_string()})),
        }
    }
    let failed = rows
        .iter()
        .any(|r| r["direction"] == json!("at_least") && r["satisfied"] == json!(false));
    Ok(Outcome::new(
        "bounds",
        json!({"n": n, "R": radius, "M": m}),
        json!({"bounds": rows, "skipped": skipped}),
        failed,
    ))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            let _ = writeln!(out, "{pad}  - {}", inline(item));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}={}", inline(x)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Stdout writes ignore a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let threads = cli.threads.unwrap_or_else(rayon::current_num_threads);
    match &cli.command {
        Command::Construct { recipe, r, lambda_file, out } => {
            cmd_construct(recipe, *r, lambda_file.as_deref(), out)
        }
        Command::Verify { file } => cmd_verify(file),
        Command::Classify { file } => cmd_classify(file),
        Command::Spectrum { file, translate } => cmd_spectrum(file, translate.as_deref()),
        Command::Pairs { file } => cmd_pairs(file),
        Command::Balanced { r, out } => cmd_balanced(*r, out.as_deref()),
        Command::ExtendScan { file } => cmd_extend_scan(file),
        Command::Census { n, out } => cmd_census(*n, out.as_deref(), threads),
        Command::Bounds { n, radius, m } => cmd_bounds(*n, *radius, *m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            match format {
                Format::Json => {
                    let mut text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
                    text.push('\n');
                    emit(&text);
                }
                Format::Text => {
                    let mut text = format!("{}\n", outcome.report.command);
                    match &outcome.text {
                        Some(t) => text.push_str(t),
                        None => render_text(&outcome.report.results, 0, &mut text),
                    }
                    emit(&text);
                }
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
