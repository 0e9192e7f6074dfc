use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use earc_cli::pipeline::{self, EncodeParams};
use earc_cli::{CliError, Result};
use earc_core::geometry::Slope;
use earc_core::CodeKind;

#[derive(Parser)]
#[command(
    name = "earc",
    about = "File striping over expanded array erasure codes with column-local repair"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Split a file into one shard per column plus a manifest.
    Encode(EncodeArgs),
    /// Rebuild the original file from surviving shards.
    Decode(DecodeArgs),
    /// Check shard integrity and codeword membership.
    Verify(VerifyArgs),
    /// Run a claim-verification suite and report pass/fail per claim.
    Analyze(AnalyzeArgs),
    /// Erase lines of one slope from a random codeword and recover them.
    DemoLines(DemoArgs),
}

#[derive(Args)]
struct EncodeArgs {
    /// Input file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Output shard directory.
    #[arg(long = "out")]
    output: PathBuf,
    /// Code family: ebr, eip, pebr or peip.
    #[arg(long, default_value = "eip")]
    kind: String,
    /// Prime column length.
    #[arg(long)]
    p: usize,
    /// Global parity columns.
    #[arg(long)]
    r: usize,
    /// Field width in bits (symbols are bytes; 8 stores arbitrary data).
    #[arg(long, default_value_t = 8)]
    b: u32,
    /// g(x) as a hex bitmask, bit i = coefficient of x^i (default g = 1).
    #[arg(long, default_value = "1")]
    g: String,
    /// Shorten an independent-parity code to k data columns.
    #[arg(long = "shortened-k")]
    shortened_k: Option<usize>,
}

#[derive(Args)]
struct DecodeArgs {
    /// Shard directory holding the manifest.
    #[arg(long = "in")]
    input: PathBuf,
    /// Reconstructed output file.
    #[arg(long = "out")]
    output: PathBuf,
    /// Comma-separated columns to ignore even if present (simulated loss).
    #[arg(long)]
    erase: Option<String>,
    /// Print per-shard read accounting and repair detail.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Shard directory holding the manifest.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Suite name: distance, mds, lines, xor or paper-golden.
    #[arg(long)]
    suite: String,
}

#[derive(Args)]
struct DemoArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    r: usize,
    /// Line slope: 0..p-1 or "inf".
    #[arg(long)]
    slope: String,
    /// Comma-separated line anchors to erase.
    #[arg(long)]
    erase: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

fn parse_kind(s: &str) -> Result<CodeKind> {
    match s.to_ascii_lowercase().as_str() {
        "ebr" => Ok(CodeKind::Ebr),
        "eip" => Ok(CodeKind::Eip),
        "pebr" => Ok(CodeKind::Pebr),
        "peip" => Ok(CodeKind::Peip),
        other => Err(CliError::BadParameters(format!(
            "unknown kind '{other}' (expected ebr, eip, pebr or peip)"
        ))),
    }
}

/// Hex bitmask -> binary coefficient list, bit i = coefficient of x^i.
fn parse_g(mask: &str) -> Result<Vec<u8>> {
    let raw = mask.trim_start_matches("0x");
    let bits = u16::from_str_radix(raw, 16)
        .map_err(|_| CliError::BadParameters(format!("bad g mask '{mask}'")))?;
    if bits == 0 {
        return Err(CliError::BadParameters("g must be nonzero".into()));
    }
    let top = 15 - bits.leading_zeros() as usize;
    Ok((0..=top).map(|i| ((bits >> i) & 1) as u8).collect())
}

fn parse_cols(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::BadParameters(format!("bad column index '{s}'")))
        })
        .collect()
}

fn parse_slope(s: &str) -> Result<Slope> {
    if s.eq_ignore_ascii_case("inf") || s == "∞" {
        return Ok(Slope::Infinite);
    }
    s.parse()
        .map(Slope::Finite)
        .map_err(|_| CliError::BadParameters(format!("bad slope '{s}'")))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Encode(a) => {
            let params = EncodeParams {
                kind: parse_kind(&a.kind)?,
                p: a.p,
                r: a.r,
                b: a.b,
                prim_poly: None,
                g: parse_g(&a.g)?,
                shortened_k: a.shortened_k,
            };
            let summary = pipeline::encode_file(&params, &a.input, &a.output)?;
            println!(
                "encoded {} stripe(s), {} data symbols each, into {} shard(s) under {}",
                summary.stripe_count,
                summary.data_symbols_per_stripe,
                summary.shard_files.len(),
                a.output.display()
            );
            Ok(true)
        }
        Cmd::Decode(a) => {
            let dropped = match &a.erase {
                Some(list) => parse_cols(list)?,
                None => Vec::new(),
            };
            let report = pipeline::decode_dir(&a.input, &a.output, &dropped)?;
            println!(
                "decoded {} stripe(s) to {}",
                report.stripes,
                a.output.display()
            );
            if a.trace {
                for (col, bytes) in &report.reads {
                    println!("read shard {col}: {bytes} bytes");
                }
                println!(
                    "local symbol repairs: {}; globally rebuilt columns: {:?}",
                    report.local_symbol_repairs, report.global_columns
                );
            }
            Ok(true)
        }
        Cmd::Verify(a) => {
            let report = pipeline::verify_dir(&a.input)?;
            println!(
                "checked {} shard(s), {} stripe(s)",
                report.shards_checked, report.stripes_checked
            );
            for problem in &report.problems {
                println!("problem: {problem}");
            }
            Ok(report.ok())
        }
        Cmd::Analyze(a) => {
            let (text, ok) = pipeline::analyze(&a.suite)?;
            print!("{text}");
            Ok(ok)
        }
        Cmd::DemoLines(a) => {
            let slope = parse_slope(&a.slope)?;
            let anchors = parse_cols(&a.erase)?;
            let text = pipeline::demo_lines(a.p, a.r, slope, &anchors, a.seed)?;
            print!("{text}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
