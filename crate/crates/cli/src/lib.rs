//! Command-line front end: compute groups and tables, run verification suites.

pub mod record;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use thiserror::Error;

use kline::identities::{run_all, IdentityGrid};
use kline::intlinalg::{duality_mismatch, IntMatrix};
use kline::vone::{compute, cross_check, reference_row, table_row};
use kline::{Family, Method, Variant};

use record::{OutputRecord, TableRecord, CSV_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or an input outside a method's domain.
    #[error("{0}")]
    Usage(String),
    /// A check found a mismatch or counterexample.
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Core(kline::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl From<kline::Error> for CliError {
    fn from(e: kline::Error) -> Self {
        match e {
            kline::Error::InvalidArgument(_) | kline::Error::Unsupported(_) => CliError::Usage(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "kline", version, about = "Exact 2-primary groups v^{2m} of Sp(n) and Spin(2n+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one group.
    Vgroup(VgroupArgs),
    /// Tabulate (eSp, e1, e2) for odd m.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Sp,
    Spin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Relations,
    Algorithm,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    V,
    Vtilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cross,
    Identities,
    Duality,
    All,
}

#[derive(Debug, clap::Args)]
pub struct VgroupArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_enum, default_value = "oracle")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "v")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Include wall-clock time per method.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m_start: u32,
    #[arg(long)]
    pub m_end: u32,
    /// Compare each row with the residue-class formulas (n = 4, 5, 6).
    #[arg(long)]
    pub check: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Largest n in the cross-method sweep.
    #[arg(long, default_value_t = 8)]
    pub max_n: u32,
    /// Odd m are taken from (n^2, n^2 + m_span].
    #[arg(long, default_value_t = 128)]
    pub m_span: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random matrices in the duality suite.
    #[arg(long, default_value_t = 500)]
    pub count: usize,
}

/// Result of running a subcommand: data for stdout and the exit status.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub error: Option<CliError>,
}

fn family(f: FamilyArg) -> Family {
    match f {
        FamilyArg::Sp => Family::Sp,
        FamilyArg::Spin => Family::Spin,
    }
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::V => Variant::V,
        VariantArg::Vtilde => Variant::VTilde,
    }
}

fn methods(m: MethodArg) -> Vec<Method> {
    match m {
        MethodArg::Closed => vec![Method::Closed],
        MethodArg::Relations => vec![Method::Relations],
        MethodArg::Algorithm => vec![Method::Algorithm],
        MethodArg::Oracle => vec![Method::Oracle],
        MethodArg::All => Method::ALL.to_vec(),
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize") + "\n"
}

pub fn cmd_vgroup(args: &VgroupArgs) -> Result<Output, CliError> {
    let all = args.method == MethodArg::All;
    let mut records = Vec::new();
    for method in methods(args.method) {
        let start = Instant::now();
        match compute(family(args.family), args.n, args.m, method, variant(args.variant)) {
            Ok(r) => {
                let mut rec = OutputRecord::from(&r);
                if args.timing {
                    rec.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                }
                records.push(rec);
            }
            Err(kline::Error::Unsupported(msg)) if all => eprintln!("skipping {method}: {msg}"),
            Err(e) => return Err(e.into()),
        }
    }
    let verdict = if all {
        if records.is_empty() {
            return Err(CliError::Usage("no method applies to these inputs".into()));
        }
        let agree = records.iter().all(|r| r.two_exponents == records[0].two_exponents);
        let v = if agree { "AGREE" } else { "DISAGREE" };
        records.iter_mut().for_each(|r| r.status = Some(v.to_lowercase()));
        Some(v)
    } else {
        None
    };

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let body: Vec<Value> = records.iter().map(OutputRecord::to_json_value).collect();
            let value = match verdict {
                Some(v) => serde_json::json!({ "records": body, "verdict": v }),
                None => body.into_iter().next().unwrap_or(Value::Null),
            };
            out.push_str(&to_json(&value));
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &records {
                out.push_str(&r.to_csv());
                out.push('\n');
            }
        }
        Format::Text => {
            for r in &records {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            if let Some(v) = verdict {
                out.push_str(v);
                out.push('\n');
            }
        }
    }
    let error = (verdict == Some("DISAGREE")).then(|| CliError::Failed("methods disagree".into()));
    Ok(Output { stdout: out, error })
}

pub fn cmd_table(args: &TableArgs) -> Result<Output, CliError> {
    if args.m_start > args.m_end {
        return Err(CliError::Usage("--m-start must not exceed --m-end".into()));
    }
    if args.check && !(4..=6).contains(&args.n) {
        return Err(CliError::Usage(format!("no reference formulas for n={}", args.n)));
    }
    let evens = (args.m_start..=args.m_end).filter(|m| m % 2 == 0).count();
    if evens > 0 {
        eprintln!("skipping {evens} even values of m");
    }
    let ms: Vec<u32> = (args.m_start..=args.m_end).filter(|m| m % 2 == 1).collect();
    let rows = {
        use rayon::prelude::*;
        ms.par_iter().map(|&m| table_row(args.n, m)).collect::<Result<Vec<_>, _>>()?
    };
    let mut mismatches = Vec::new();
    let records: Vec<TableRecord> = rows
        .iter()
        .map(|row| {
            let mut rec = TableRecord::new(args.n, row);
            if args.check {
                match reference_row(args.n, row.m) {
                    Some(r) => {
                        let ok = (r.esp.is_none() || r.esp == row.esp) && (r.e1, r.e2) == (row.e1, row.e2);
                        if !ok {
                            mismatches.push(format!(
                                "m={}: computed ({:?}, {}, {}), reference ({:?}, {}, {})",
                                row.m, row.esp, row.e1, row.e2, r.esp, r.e1, r.e2
                            ));
                        }
                        rec.matches_reference = Some(ok);
                    }
                    None => eprintln!("no reference value for m={}", row.m),
                }
            }
            rec
        })
        .collect();

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let body: Vec<Value> =
                records.iter().map(|r| serde_json::to_value(r).expect("table rows serialize")).collect();
            out.push_str(&to_json(&Value::Array(body)));
        }
        Format::Csv => {
            out.push_str(if args.check { "m,esp,e1,e2,check\n" } else { "m,esp,e1,e2\n" });
            for r in &records {
                out.push_str(&r.to_csv());
                out.push('\n');
            }
        }
        Format::Text => {
            for r in &records {
                let esp = r.esp.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
                let _ = write!(out, "m={:<5} eSp={:<3} e1={:<3} e2={}", r.m, esp, r.e1, r.e2);
                if let Some(ok) = r.matches_reference {
                    out.push_str(if ok { "  match" } else { "  MISMATCH" });
                }
                out.push('\n');
            }
        }
    }
    let error = (!mismatches.is_empty()).then(|| {
        CliError::Failed(format!("{} rows differ from the reference: {}", mismatches.len(), mismatches.join("; ")))
    });
    Ok(Output { stdout: out, error })
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (rows, cols) = (rng.gen_range(1..=6usize), rng.gen_range(1..=6usize));
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-20i64..=20).into()).collect())
        .collect();
    IntMatrix::from_rows_with_cols(data, cols).expect("rows have equal length")
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let mut out = String::new();
    let mut failures = Vec::new();
    let run = |s: Suite| args.suite == s || args.suite == Suite::All;

    if run(Suite::Cross) {
        if args.max_n < 3 {
            return Err(CliError::Usage("--max-n must be at least 3".into()));
        }
        let ns: Vec<u32> = (3..=args.max_n).collect();
        let r = cross_check(&ns, args.m_span);
        match &r.first_mismatch {
            None => {
                let _ = writeln!(out, "PASS cross: {} cells, n in 3..={}, span {}", r.cases, args.max_n, args.m_span);
            }
            Some(e) => {
                let _ = writeln!(out, "FAIL cross: {e}");
                failures.push(format!("cross: {e}"));
            }
        }
    }
    if run(Suite::Identities) {
        for r in run_all(&IdentityGrid::default()) {
            let _ = writeln!(out, "{r}");
            for note in &r.notes {
                let _ = writeln!(out, "  note: {note}");
            }
            if let Some(c) = &r.counterexample {
                failures.push(format!("{}: {c}", r.name));
            }
        }
    }
    if run(Suite::Duality) {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let failure = (0..args.count).find_map(|i| {
            let m = random_matrix(&mut rng);
            duality_mismatch(&m).map(|e| format!("matrix {i} ({}x{}): {e}\n{m}", m.rows(), m.cols()))
        });
        match failure {
            None => {
                let _ = writeln!(out, "PASS duality: {} matrices, seed {}", args.count, args.seed);
            }
            Some(e) => {
                let _ = writeln!(out, "FAIL duality: {e}");
                failures.push(format!("duality: {e}"));
            }
        }
    }
    let error = failures.first().map(|f| CliError::Failed(f.clone()));
    Ok(Output { stdout: out, error })
}

/// Runs a parsed command, writing data to stdout or `--out`. Returns the exit code.
pub fn run(cli: &Cli) -> u8 {
    let (result, out_path) = match &cli.command {
        Command::Vgroup(a) => (cmd_vgroup(a), a.out.clone()),
        Command::Table(a) => (cmd_table(a), a.out.clone()),
        Command::Verify(a) => (cmd_verify(a), None),
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    match out_path {
        Some(path) => {
            if let Err(source) = fs::write(&path, &output.stdout) {
                let e = CliError::Io { path, source };
                eprintln!("error: {e}");
                return e.exit_code();
            }
        }
        None => print!("{}", output.stdout),
    }
    match output.error {
        None => 0,
        Some(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
