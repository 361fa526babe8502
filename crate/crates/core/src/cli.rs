//! Command-line front end.
//!
//! Exit codes: 0 completed (conjecture findings included), 1 usage or parse
//! error, 2 internal oracle disagreement, 3 resource cap refusal.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::greene::GreeneOracle;
use crate::matrices::Matrix;
use crate::minimal::{minimal_hankel_candidates, minimal_inversion_formula};
use crate::partitions::Partition;
use crate::rsk::rsk_forward;
use crate::search::{
    brute_force_minimum, sweep_partitions, Caps, SearchError, SweepSpec, VerificationRecord,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_ORACLE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

pub const MAX_WEIGHT_ENV: &str = "RSKLAB_MAX_WEIGHT";

/// Matrix whose commonly printed RSK pair (shape (4,2,1)) cannot come from row insertion.
const DISCREPANT_EXAMPLE: [u32; 9] = [1, 1, 0, 0, 2, 1, 1, 0, 1];

#[derive(Debug, Parser)]
#[command(
    name = "rsklab",
    version,
    about = "RSK, inversions and minimal matrices of a fixed shape"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the RSK tableau pair and shape of a matrix.
    Rsk {
        /// Rows separated by ';', entries by ',' (e.g. "1,0,2;0,2,0;1,1,0"), or JSON.
        matrix: String,
        /// Also compute the shape from Greene invariants and require agreement.
        #[arg(long)]
        check_greene: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print the inversion count of a matrix.
    Inversions { matrix: String },
    /// Minimal-inversion matrices of a shape: Hankel construction, closed form, brute force.
    Minimal {
        /// Comma-separated parts, e.g. "4,2,2,1".
        partition: String,
        #[arg(long)]
        formula: bool,
        #[arg(long)]
        construct: bool,
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Verify every partition of a weight range and part counts; writes one record per partition.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest matrix weight searched exhaustively (overrides RSKLAB_MAX_WEIGHT and the defaults).
    #[arg(long)]
    pub weight_cap: Option<u32>,
    /// Largest matrix size searched exhaustively.
    #[arg(long, default_value_t = crate::search::DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_weight: u32,
    /// Smallest weight swept; defaults to 1.
    #[arg(long, default_value_t = 1)]
    pub min_weight: u32,
    /// Part counts, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub parts: Vec<usize>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Jsonl)]
    pub format: OutputFormat,
    /// Additionally write a CSV summary to this path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Skip partitions already present in the JSONL output file and append the rest.
    #[arg(long)]
    pub resume: bool,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Csv,
    Text,
}

/// Parses `args` and runs the command, reading the weight-cap override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_cap = std::env::var(MAX_WEIGHT_ENV).ok();
    run_with_env(args, env_cap.as_deref(), out, err)
}

pub fn run_with_env<I, T>(
    args: I,
    env_cap: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, env_cap, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            e.downcast_ref::<Failure>()
                .map_or(EXIT_USAGE, Failure::code)
        }
    }
}

/// Errors that map to a specific exit code.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Cap(_) => EXIT_CAP,
        }
    }
}

fn resolve_caps(args: &CapArgs, env_cap: Option<&str>) -> Result<Caps> {
    let env = env_cap
        .map(|v| {
            v.trim().parse::<u32>().map_err(|_| {
                Failure::Usage(format!(
                    "{MAX_WEIGHT_ENV}={v:?} is not a nonnegative integer"
                ))
            })
        })
        .transpose()?;
    if args.max_n == 0 {
        return Err(Failure::Usage("--max-n must be positive".into()).into());
    }
    let max_weight = args.weight_cap.or(env);
    if max_weight == Some(0) {
        return Err(Failure::Usage("weight cap must be positive".into()).into());
    }
    Ok(Caps {
        max_weight,
        max_n: args.max_n,
    })
}

fn parse_matrix(text: &str) -> Result<Matrix> {
    Matrix::parse(text).map_err(|e| Failure::Usage(e.to_string()).into())
}

fn parse_partition(text: &str) -> Result<Partition> {
    text.parse::<Partition>()
        .map_err(|e| Failure::Usage(format!("{text:?}: {e}")).into())
}

fn cap_failure(e: SearchError) -> anyhow::Error {
    match e {
        SearchError::SizeCap { .. } | SearchError::WeightCap { .. } | SearchError::Greene(_) => {
            Failure::Cap(e.to_string()).into()
        }
        other => anyhow::Error::new(other),
    }
}

fn dispatch(
    command: Command,
    env_cap: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    match command {
        Command::Rsk {
            matrix,
            check_greene,
            caps,
        } => {
            let caps = resolve_caps(&caps, env_cap)?;
            cmd_rsk(&parse_matrix(&matrix)?, check_greene, &caps, out, err)
        }
        Command::Inversions { matrix } => {
            let m = parse_matrix(&matrix)?;
            writeln!(out, "{}", m.inversion_count())?;
            Ok(EXIT_OK)
        }
        Command::Minimal {
            partition,
            formula,
            construct,
            brute,
            caps,
        } => {
            let caps = resolve_caps(&caps, env_cap)?;
            let p = parse_partition(&partition)?;
            let all = !(formula || construct || brute);
            cmd_minimal(
                &p,
                formula || all,
                construct || all,
                brute || all,
                &caps,
                out,
            )
        }
        Command::Verify(args) => cmd_verify(&args, env_cap, out, err),
    }
}

pub fn cmd_rsk(
    m: &Matrix,
    check_greene: bool,
    caps: &Caps,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let pair = rsk_forward(m);
    let shape = pair.shape();
    write!(out, "P:\n{}Q:\n{}", pair.p, pair.q)?;
    writeln!(out, "shape: {shape}")?;
    if m.entries() == DISCREPANT_EXAMPLE {
        writeln!(
            out,
            "notice: this input is a documented discrepant worked example. Its commonly \
             printed tableaux have shape (4,2,1); the pair above is what row insertion \
             produces, and its shape agrees with the Greene invariants of the matrix."
        )?;
    }
    if check_greene {
        let oracle = GreeneOracle::new(caps.weight_cap(m.n()) as usize);
        let greene = oracle.shape(m).map_err(|e| Failure::Cap(e.to_string()))?;
        writeln!(out, "greene shape: {greene}")?;
        if greene != shape {
            writeln!(
                err,
                "oracle disagreement: RSK shape {shape} but Greene shape {greene}"
            )?;
            return Ok(EXIT_ORACLE);
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_minimal(
    p: &Partition,
    formula: bool,
    construct: bool,
    brute: bool,
    caps: &Caps,
    out: &mut dyn Write,
) -> Result<u8> {
    let mut values: Vec<(&str, u64)> = Vec::new();
    if construct {
        let candidates = minimal_hankel_candidates(p);
        writeln!(out, "hankel candidates for {p}: {}", candidates.len())?;
        for c in &candidates {
            let shape = crate::rsk::shape_of_matrix(c);
            let flag = if shape == *p {
                ""
            } else {
                "  [shape mismatch]"
            };
            writeln!(
                out,
                "  {c}  inversions={}  shape={shape}{flag}",
                c.inversion_count()
            )?;
        }
        if let Some(best) = candidates.iter().map(Matrix::inversion_count).min() {
            values.push(("hankel", best));
        }
    }
    if formula {
        let value = minimal_inversion_formula(p);
        writeln!(out, "formula: {value}")?;
        values.push(("formula", value));
    }
    if brute {
        let minimal = brute_force_minimum(p, caps).map_err(cap_failure)?;
        writeln!(
            out,
            "brute force minimum: {} ({} matrices)",
            minimal.min_inversions,
            minimal.matrices.len()
        )?;
        for m in &minimal.matrices {
            writeln!(out, "  {m}")?;
        }
        values.push(("brute", minimal.min_inversions));
    }
    if values.len() > 1 {
        writeln!(out, "{:<8} value", "source")?;
        for (name, value) in &values {
            writeln!(out, "{name:<8} {value}")?;
        }
        let agree = values.iter().all(|(_, v)| *v == values[0].1);
        writeln!(out, "{}", if agree { "AGREE" } else { "DISAGREE" })?;
    }
    Ok(EXIT_OK)
}

/// Summary counts over a batch of records.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Summary {
    pub verified: usize,
    pub conjecture_flagged: usize,
    pub formula_mismatch: usize,
    pub skipped: usize,
    pub oracle_disagreements: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            if r.is_skipped() {
                s.skipped += 1;
                continue;
            }
            s.verified += 1;
            if !r.conjecture_holds() {
                s.conjecture_flagged += 1;
            }
            if !r.formula_matches_bruteforce {
                s.formula_mismatch += 1;
            }
            if r.has_oracle_disagreement() {
                s.oracle_disagreements += 1;
            }
        }
        s
    }

    pub fn exit_code(&self) -> u8 {
        if self.oracle_disagreements > 0 {
            EXIT_ORACLE
        } else if self.skipped > 0 {
            EXIT_CAP
        } else {
            EXIT_OK
        }
    }
}

fn existing_partitions(path: &Path) -> Result<BTreeSet<Partition>> {
    let mut seen = BTreeSet::new();
    if !path.exists() {
        return Ok(seen);
    }
    let reader =
        BufReader::new(File::open(path).with_context(|| format!("opening {}", path.display()))?);
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: VerificationRecord = serde_json::from_str(&line)
            .map_err(|e| Failure::Usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
        seen.insert(record.partition);
    }
    Ok(seen)
}

pub fn cmd_verify(
    args: &VerifyArgs,
    env_cap: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let caps = resolve_caps(&args.caps, env_cap)?;
    if args.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()).into());
    }
    if args.resume && (args.out.is_none() || args.format != OutputFormat::Jsonl) {
        return Err(Failure::Usage("--resume needs --out with the jsonl format".into()).into());
    }
    let spec = SweepSpec {
        min_weight: args.min_weight,
        max_weight: args.max_weight,
        parts: args.parts.clone(),
    };
    let mut partitions = spec.partitions();
    if args.resume {
        let done = existing_partitions(args.out.as_deref().expect("checked above"))?;
        partitions.retain(|p| !done.contains(p));
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().context("building thread pool")?;
    let records = pool.install(|| sweep_partitions(&partitions, &caps));

    match &args.out {
        Some(path) => {
            let file = if args.resume {
                OpenOptions::new().create(true).append(true).open(path)
            } else {
                File::create(path)
            }
            .with_context(|| format!("opening {}", path.display()))?;
            let mut w = BufWriter::new(file);
            write_records(&records, args.format, &mut w)?;
            w.flush()?;
        }
        None => write_records(&records, args.format, out)?,
    }
    if let Some(path) = &args.csv {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut w = BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        );
        write_csv(&records, &mut w)?;
        w.flush()?;
    }

    let summary = Summary::of(&records);
    let report: &mut dyn Write = if args.out.is_some() { out } else { err };
    writeln!(
        report,
        "records: {}  verified: {}  conjecture-flagged: {}  formula-mismatch: {}  skipped: {}  oracle-disagreements: {}",
        records.len(),
        summary.verified,
        summary.conjecture_flagged,
        summary.formula_mismatch,
        summary.skipped,
        summary.oracle_disagreements
    )?;
    for r in records.iter().filter(|r| r.has_oracle_disagreement()) {
        writeln!(
            err,
            "oracle disagreement for {}: {}",
            r.partition,
            r.oracle_disagreements.join("; ")
        )?;
    }
    Ok(summary.exit_code())
}

pub fn write_records(
    records: &[VerificationRecord],
    format: OutputFormat,
    w: &mut dyn Write,
) -> Result<()> {
    match format {
        OutputFormat::Jsonl => write_jsonl(records, w),
        OutputFormat::Csv => write_csv(records, w),
        OutputFormat::Text => write_text(records, w),
    }
}

pub fn write_jsonl(records: &[VerificationRecord], w: &mut dyn Write) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut *w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn write_csv(records: &[VerificationRecord], w: &mut dyn Write) -> Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record([
        "partition",
        "min_inversions_bruteforce",
        "formula_value",
        "all_minimal_symmetric",
        "all_minimal_hankel",
        "candidate_set_equals_minimal_set",
        "formula_matches_bruteforce",
    ])?;
    for r in records {
        let parts: Vec<String> = r.partition.parts().iter().map(u32::to_string).collect();
        csv.write_record([
            parts.join(","),
            r.min_inversions_bruteforce
                .map_or_else(String::new, |v| v.to_string()),
            r.formula_value.to_string(),
            r.all_minimal_symmetric.to_string(),
            r.all_minimal_hankel.to_string(),
            r.candidate_set_equals_minimal_set.to_string(),
            r.formula_matches_bruteforce.to_string(),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

fn write_text(records: &[VerificationRecord], w: &mut dyn Write) -> Result<()> {
    writeln!(
        w,
        "{:<14} {:>6} {:>6} {:>8} {:>5} {:>6} {:>10} {:>7}",
        "partition", "class", "min", "formula", "sym", "hankel", "cands=min", "status"
    )?;
    for r in records {
        let status = if let Some(reason) = &r.skipped {
            format!("skipped: {reason}")
        } else if r.has_oracle_disagreement() {
            "ORACLE".to_string()
        } else {
            "ok".to_string()
        };
        let min = r
            .min_inversions_bruteforce
            .map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(
            w,
            "{:<14} {:>6} {:>6} {:>8} {:>5} {:>6} {:>10} {:>7}",
            r.partition.to_string(),
            r.class_size,
            min,
            r.formula_value,
            r.all_minimal_symmetric,
            r.all_minimal_hankel,
            r.candidate_set_equals_minimal_set,
            status
        )?;
    }
    Ok(())
}
