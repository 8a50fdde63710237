//! Command-line front end. `run` parses arguments, runs one suite and writes
//! its report; the binary only forwards the exit code.

pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::circles::{forest_counts, partition_counts, BSequence, MAX_ORACLE_NODES};
use crate::error::{Error, Result};
use crate::exactcore::{catalan, central_binomial};
use crate::wallis::{CertifyConfig, DEFAULT_CAP_BITS, DEFAULT_START_BITS};
pub use report::{emit_bfile, Report, Row, Status, Summary};
use suites::SuiteConfig;

/// The exact partial sums grow by about 4n bits per step.
pub const BOUNDS_N_MAX: u64 = 10_000;
/// B(n) by partition sums enumerates every partition of n.
pub const CIRCLES_N_MAX: u64 = 60;
pub const BFILE_N_MAX: u64 = 10_000;
pub const MIN_BITS: u32 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "exactcomb",
    version,
    about = "Exact verification suites and sequence tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Central binomial identities and certified bounds in terms of pi
    Bounds(SuiteArgs),
    /// Partition tables, routes to B(n), bounds and the forest oracle
    Circles(CirclesArgs),
    /// Binomial series closed forms, telescoping sums and power sums
    Series(SuiteArgs),
    /// Forward differences of powers and surjection counts
    Diff(SuiteArgs),
    /// Write one sequence as "index value" lines
    Bfile(BfileArgs),
    /// Every suite plus checks on the arithmetic layer
    VerifyAll(CirclesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Bfile,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    #[value(name = "B")]
    B,
    #[value(name = "p")]
    P,
    Forest,
    Catalan,
    Central,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    /// Starting precision of the pi enclosure, in bits
    #[arg(long, default_value_t = DEFAULT_START_BITS)]
    pub bits: u32,
    /// Precision is doubled up to this cap before a comparison is reported inconclusive
    #[arg(long, default_value_t = DEFAULT_CAP_BITS)]
    pub bits_cap: u32,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CirclesArgs {
    #[command(flatten)]
    pub suite: SuiteArgs,
    /// Largest n for the exhaustive forest enumeration
    #[arg(long, default_value_t = 12)]
    pub forest_max: u64,
}

#[derive(Debug, Args)]
pub struct BfileArgs {
    #[arg(long, value_enum)]
    pub sequence: Sequence,
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 all checks pass, 1 any failure or inconclusive
/// result, 2 usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let mut text = err.render().to_string();
            if code != 0 && !text.contains("Usage:") {
                text.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, out, code)) => match write_output(&text, out.as_ref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let _ = writeln!(stderr, "{}", usage_for(&cli.command));
            2
        }
    }
}

fn usage_for(command: &Command) -> String {
    let name = match command {
        Command::Bounds(_) => "bounds",
        Command::Circles(_) => "circles",
        Command::Series(_) => "series",
        Command::Diff(_) => "diff",
        Command::Bfile(_) => "bfile",
        Command::VerifyAll(_) => "verify-all",
    };
    let mut cmd = Cli::command();
    cmd.build();
    match cmd.find_subcommand_mut(name) {
        Some(sub) => sub.render_usage().to_string(),
        None => cmd.render_usage().to_string(),
    }
}

fn write_output(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn suite_config(args: &SuiteArgs, n_limit: u64, forest_max: u64) -> Result<SuiteConfig> {
    if args.bits < MIN_BITS {
        return Err(usage(format!("--bits must be at least {MIN_BITS}")));
    }
    if args.bits_cap < args.bits {
        return Err(usage("--bits-cap must be at least --bits"));
    }
    if args.n_max > n_limit {
        return Err(usage(format!(
            "--n-max must be at most {n_limit} for this command"
        )));
    }
    if forest_max > MAX_ORACLE_NODES as u64 {
        return Err(usage(format!(
            "--forest-max must be at most {MAX_ORACLE_NODES}"
        )));
    }
    Ok(SuiteConfig {
        n_max: args.n_max,
        certify: CertifyConfig {
            start_bits: args.bits,
            cap_bits: args.bits_cap,
        },
        forest_max,
    })
}

fn suite_params(cfg: &SuiteConfig, with_forest: bool) -> Vec<(String, String)> {
    let mut params = vec![
        ("n-max".to_string(), cfg.n_max.to_string()),
        ("bits".to_string(), cfg.certify.start_bits.to_string()),
        ("bits-cap".to_string(), cfg.certify.cap_bits.to_string()),
    ];
    if with_forest {
        params.push(("forest-max".to_string(), cfg.forest_max.to_string()));
    }
    params
}

fn render(report: &Report, format: Option<Format>) -> Result<String> {
    match format.unwrap_or(Format::Text) {
        Format::Json => Ok(report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Text => Ok(report.to_text()),
        Format::Bfile => Err(usage("--format bfile is only valid for the bfile command")),
    }
}

type Suite = fn(&SuiteConfig, &mut Report) -> Result<()>;

fn execute(command: &Command) -> Result<(String, Option<PathBuf>, i32)> {
    let (name, args, forest_max, with_forest, n_limit, parts): (
        &str,
        &SuiteArgs,
        u64,
        bool,
        u64,
        Vec<Suite>,
    ) = match command {
        Command::Bfile(args) => {
            let text = bfile(args)?;
            return Ok((text, args.out.clone(), 0));
        }
        Command::Bounds(a) => ("bounds", a, 0, false, BOUNDS_N_MAX, vec![suites::bounds]),
        Command::Series(a) => ("series", a, 0, false, u64::MAX, vec![suites::series]),
        Command::Diff(a) => ("diff", a, 0, false, u64::MAX, vec![suites::diff]),
        Command::Circles(a) => (
            "circles",
            &a.suite,
            a.forest_max,
            true,
            CIRCLES_N_MAX,
            vec![suites::circles],
        ),
        Command::VerifyAll(a) => (
            "verify-all",
            &a.suite,
            a.forest_max,
            true,
            CIRCLES_N_MAX,
            vec![
                suites::core,
                suites::bounds,
                suites::circles,
                suites::series,
                suites::diff,
            ],
        ),
    };
    let cfg = suite_config(args, n_limit, forest_max)?;
    if args.format == Some(Format::Bfile) {
        return Err(usage("--format bfile is only valid for the bfile command"));
    }
    let mut report = Report::new(name, suite_params(&cfg, with_forest));
    for suite in parts {
        suite(&cfg, &mut report)?;
    }
    let text = render(&report, args.format)?;
    Ok((text, args.out.clone(), report.exit_code()))
}

fn bfile(args: &BfileArgs) -> Result<String> {
    if let Some(f) = args.format {
        if f != Format::Bfile {
            return Err(usage("the bfile command only writes --format bfile"));
        }
    }
    let n = args.n_max;
    let limit = match args.sequence {
        Sequence::Forest => MAX_ORACLE_NODES as u64,
        _ => BFILE_N_MAX,
    };
    if n > limit {
        return Err(usage(format!(
            "--n-max must be at most {limit} for this sequence"
        )));
    }
    let n = n as usize;
    let (name, values): (&str, Vec<BigInt>) = match args.sequence {
        Sequence::B => ("B", BSequence::euler_product(n).values().to_vec()),
        Sequence::P => ("p", partition_counts(n)),
        Sequence::Forest => (
            "forest",
            forest_counts(n)?.into_iter().map(BigInt::from).collect(),
        ),
        Sequence::Catalan => ("catalan", (0..=n as u64).map(catalan).collect()),
        Sequence::Central => ("central", (0..=n as u64).map(central_binomial).collect()),
    };
    emit_bfile(name, &values)
}
