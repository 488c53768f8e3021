//! The `monoproof` command line.
//!
//! [`run`] parses arguments and writes to caller-supplied streams, so the
//! binary is a one-liner and tests can drive commands in-process.
//!
//! Exit codes: `0` success, `1` verification mismatch or exhausted proof,
//! `2` usage or I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::equilibria::{hull_vertices, stable_equilibria, unstable_equilibria, ConfigDocument, ConfigKind};
use crate::expansion::{enumerate_systems, system_count};
use crate::prover::{prove_unsolvable, ProofReport, SearchConfig};
use crate::report::{DatasetChecksum, ProofDocument, RowRecord, RunManifest, Timing, VerificationDocument};
use crate::table::{check_sha256, read_text, verify_table, BundledDataset, CertificateTable, RowCheck, BUNDLED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "monoproof", version, about = "Exact certificates for mono-unstable polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute every row of a certificate table exactly.
    Verify(VerifyArgs),
    /// Search certificates for every shadowing system with V vertices.
    Prove(ProveArgs),
    /// Count unstable (or, with --faces, stable) equilibria of a configuration.
    Count(CountArgs),
    /// Count or list the shadowing systems for V vertices.
    Systems(SystemsArgs),
    /// Report which points of a configuration are vertices of its convex hull.
    CheckHull(HullArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// CSV table `j_3..j_V,c_2..c_V,min_f`.
    #[arg(long, value_name = "FILE", required_unless_present = "bundled", conflicts_with = "bundled")]
    table: Option<PathBuf>,
    /// Use the table compiled into the binary for this V (4 to 7).
    #[arg(long, value_name = "V")]
    bundled: Option<usize>,
    /// Refuse the table unless its SHA-256 equals this digest.
    #[arg(long, value_name = "HEX")]
    sha256: Option<String>,
    /// Only print mismatching rows and the summary.
    #[arg(long)]
    quiet: bool,
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Also write a JSON report.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ProveArgs {
    #[arg(long = "vertices", value_name = "V")]
    v: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    coeff_min: u64,
    #[arg(long, default_value_t = 101)]
    coeff_max: u64,
    #[arg(long, default_value_t = 100_000)]
    max_trials: u64,
    /// Re-search exhausted systems with up to this many fresh base seeds.
    #[arg(long, default_value_t = 0)]
    retries: u32,
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Write the JSON report here and print a summary; otherwise the
    /// report goes to stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Input holds face vectors; count stable equilibria.
    #[arg(long)]
    faces: bool,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SystemsArgs {
    #[arg(long = "vertices", value_name = "V")]
    v: usize,
    /// One JSON object per system, in canonical order.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct HullArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
}

/// Seed used by retry `k` (1-based) of a run with base seed `seed`.
pub fn retry_seed(seed: u64, k: u32) -> u64 {
    seed.wrapping_add(u64::from(k) << 32)
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug)]
struct Failure(i32, String);

impl Failure {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Failure(EXIT_USAGE, msg.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn io(e: std::io::Error) -> Failure {
    Failure::usage(format!("write failed: {e}"))
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Prove(a) => cmd_prove(&a, out),
        Command::Count(a) => cmd_count(&a, out, err),
        Command::Systems(a) => cmd_systems(&a, out),
        Command::CheckHull(a) => cmd_check_hull(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn fmt_list<T: ToString>(xs: &[T]) -> String {
    format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn describe(c: &RowCheck) -> String {
    let computed = match &c.computed {
        Some(m) => m.to_string(),
        None => "none (Hessian not positive definite)".to_string(),
    };
    format!(
        "row {} j={} c={}: expected {}, computed {}",
        c.row,
        fmt_list(c.system.tail()),
        fmt_list(&c.coeffs),
        c.expected,
        computed
    )
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let jobs = a.jobs.unwrap_or_else(default_jobs);
    let (name, text, arguments) = match (&a.table, a.bundled) {
        (_, Some(v)) => {
            let d = BundledDataset::get(v).map_err(Failure::usage)?;
            check_sha256(d.name, d.text.as_bytes(), d.sha256).map_err(Failure::usage)?;
            (d.name.to_string(), d.text.to_string(), vec!["--bundled".to_string(), v.to_string()])
        }
        (Some(path), None) => {
            let text = read_text(path).map_err(Failure::usage)?;
            (display_name(path), text, vec!["--table".to_string(), path.display().to_string()])
        }
        (None, None) => return Err(Failure::usage("one of --table or --bundled is required")),
    };
    let dataset = DatasetChecksum::of(&name, text.as_bytes());
    if let Some(expected) = &a.sha256 {
        if let Err(e) = check_sha256(&name, text.as_bytes(), expected) {
            writeln!(err, "refusing to verify: {e}").map_err(io)?;
            return Ok(EXIT_FAILED);
        }
    }
    if let Some(bundled) = BUNDLED.iter().find(|d| d.name == name) {
        if dataset.matches_bundled.is_none() {
            writeln!(
                err,
                "warning: {name} differs from the bundled dataset of the same name (sha256 {} vs {})",
                dataset.sha256, bundled.sha256
            )
            .map_err(io)?;
        }
    }

    let table = CertificateTable::parse_str(&text).map_err(|e| Failure::usage(format!("{name}: {e}")))?;
    let checks = verify_table(&table, jobs).map_err(Failure::usage)?;
    let verified = checks.iter().filter(|c| c.ok()).count();
    for c in &checks {
        if !c.ok() {
            writeln!(out, "MISMATCH {}", describe(c)).map_err(io)?;
        } else if !a.quiet {
            writeln!(out, "ok {}", describe(c)).map_err(io)?;
        }
    }
    writeln!(out, "{verified}/{} verified", checks.len()).map_err(io)?;
    if let Some(first) = checks.iter().find(|c| !c.ok()) {
        writeln!(err, "first mismatch: {}", describe(first)).map_err(io)?;
    }

    if let Some(path) = &a.out {
        let doc = VerificationDocument {
            manifest: RunManifest::new("verify", arguments).with_dataset(dataset),
            v: table.v,
            verified,
            total: checks.len(),
            rows: checks.iter().map(RowRecord::from).collect(),
            timing: Timing::new(start.elapsed(), jobs),
        };
        write_file(path, &doc.to_json())?;
    }
    Ok(if verified == checks.len() { EXIT_OK } else { EXIT_FAILED })
}

fn display_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_prove(a: &ProveArgs, out: &mut dyn Write) -> Outcome {
    if a.v < 4 {
        return Err(Failure::usage(format!("--vertices must be at least 4, got {}", a.v)));
    }
    let jobs = a.jobs.unwrap_or_else(default_jobs);
    let cfg =
        SearchConfig { coeff_min: a.coeff_min, coeff_max: a.coeff_max, max_trials: a.max_trials, base_seed: a.seed };
    cfg.validate().map_err(Failure::usage)?;
    let start = Instant::now();
    let mut report: ProofReport = prove_unsolvable(a.v, &cfg, jobs).map_err(Failure::usage)?;
    for k in 1..=a.retries {
        if report.is_proven() {
            break;
        }
        report.retry_exhausted(retry_seed(a.seed, k), jobs).map_err(Failure::usage)?;
    }
    let elapsed = start.elapsed();

    let mut arguments = vec![
        "--vertices".to_string(),
        a.v.to_string(),
        "--seed".to_string(),
        a.seed.to_string(),
        "--coeff-min".to_string(),
        a.coeff_min.to_string(),
        "--coeff-max".to_string(),
        a.coeff_max.to_string(),
        "--max-trials".to_string(),
        a.max_trials.to_string(),
    ];
    if a.retries > 0 {
        arguments.extend(["--retries".to_string(), a.retries.to_string()]);
    }
    let proven = report.is_proven();
    let doc = ProofDocument {
        manifest: RunManifest::new("prove", arguments).with_seed(a.seed),
        report,
        timing: Timing::new(elapsed, jobs),
    };
    match &a.out {
        Some(path) => {
            write_file(path, &doc.to_json())?;
            let r = &doc.report;
            writeln!(
                out,
                "V = {}: {}/{} systems certified ({:?}) in {:.1} s",
                r.v,
                r.certified(),
                r.systems.len(),
                r.verdict,
                elapsed.as_secs_f64()
            )
            .map_err(io)?;
            for s in r.exhausted() {
                writeln!(
                    out,
                    "exhausted system {} j={}: {} trials, {} negative minima, {} indefinite",
                    s.system_id,
                    fmt_list(&s.j[1..]),
                    s.trials,
                    s.negative_minima_seen,
                    s.non_pd_seen
                )
                .map_err(io)?;
            }
        }
        None => writeln!(out, "{}", doc.to_json()).map_err(io)?,
    }
    Ok(if proven { EXIT_OK } else { EXIT_FAILED })
}

fn load_document(path: &Path) -> Result<ConfigDocument, Failure> {
    let text = read_text(path).map_err(Failure::usage)?;
    ConfigDocument::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let doc = load_document(&a.input)?;
    let (label, element, report) = if a.faces {
        let cfg = doc.into_faces().map_err(Failure::usage)?;
        ("S", "face", stable_equilibria(&cfg))
    } else {
        let cfg = doc.into_points().map_err(|e| match e {
            crate::equilibria::EquilibriaError::KindMismatch { found: ConfigKind::Faces, .. } => {
                Failure::usage(format!("{e}; pass --faces for face vectors"))
            }
            other => Failure::usage(other),
        })?;
        ("U", "vertex", unstable_equilibria(&cfg))
    };
    if !report.generic {
        writeln!(err, "warning: configuration is not generic (two norms coincide)").map_err(io)?;
    }
    if a.json {
        let json = serde_json::to_string_pretty(&report).expect("reports always serialize");
        writeln!(out, "{json}").map_err(io)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{label} = {}", report.count).map_err(io)?;
    for (i, eq) in report.equilibria.iter().enumerate() {
        let status = if *eq { "equilibrium" } else { "shadowed" };
        writeln!(out, "{element} {i}: {status}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_systems(a: &SystemsArgs, out: &mut dyn Write) -> Outcome {
    if a.v < 4 {
        return Err(Failure::usage(format!("--vertices must be at least 4, got {}", a.v)));
    }
    if a.list {
        for sys in enumerate_systems(a.v).map_err(Failure::usage)? {
            writeln!(out, "{}", serde_json::to_string(&sys).expect("systems always serialize")).map_err(io)?;
        }
    } else {
        writeln!(out, "V = {}: {} systems", a.v, system_count(a.v)).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_check_hull(a: &HullArgs, out: &mut dyn Write) -> Outcome {
    let cfg = load_document(&a.input)?.into_points().map_err(Failure::usage)?;
    let hull = hull_vertices(&cfg);
    for (i, h) in hull.iter().enumerate() {
        let status = if *h { "hull vertex" } else { "inside hull" };
        writeln!(out, "vertex {i}: {status}").map_err(io)?;
    }
    writeln!(out, "{}/{} on hull", hull.iter().filter(|&&h| h).count(), hull.len()).map_err(io)?;
    Ok(EXIT_OK)
}
