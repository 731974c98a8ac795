//! Command line interface: `simplify`, `bench`, `uglify`, `check`.
//!
//! Exit codes: 0 ok, 1 usage, 2 parse failure, 3 verification failure
//! (including bench output inequality), 4 cycle limit, 5 I/O failure.

use crate::clock::StdClock;
use crate::error::CliError;
use crate::format::{self, Format};
use crate::logfmt::log_text;
use crate::stats::{self, saving_percent};
use crate::uglify::uglify;
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use tietze_core::sig::SigConfig;
use tietze_core::{simplify, Presentation, SimplifyOptions, SimplifyReport, Strategy};

#[derive(Parser)]
#[command(
    name = "tietze",
    version,
    about = "Simplify finite group presentations by Tietze transformations",
    long_about = "Simplify finite group presentations by Tietze transformations, with \
                  instrumented substring-search strategies (naive, hashed signatures, \
                  change flags, combined)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Naive,
    Sig,
    Flags,
    Both,
}

impl From<StrategyArg> for Strategy {
    fn from(value: StrategyArg) -> Strategy {
        match value {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Sig => Strategy::Signatures,
            StrategyArg::Flags => Strategy::ChangeFlags,
            StrategyArg::Both => Strategy::Combined,
        }
    }
}

#[derive(clap::Args)]
struct SimplifyCmd {
    /// Input presentation file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a comma-separated stats report here.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Write the transform log here, one move per line.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Search strategy.
    #[arg(long, value_enum, default_value = "both")]
    strategy: StrategyArg,
    /// Signature width in bits.
    #[arg(long = "sig-bits", default_value_t = 32)]
    sig_bits: u32,
    /// Control-loop cycle limit.
    #[arg(long = "max-cycles", default_value_t = 1000)]
    max_cycles: usize,
    /// Check abelian invariants after every move.
    #[arg(long)]
    verify: bool,
    /// Read and write the compact one-line-per-relator format.
    #[arg(long)]
    compact: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Simplify one presentation and write the result.
    Simplify(SimplifyCmd),
    /// Run all four strategies on one input, assert equal outputs, and
    /// report comparative search savings.
    Bench {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the comparative stats report here.
        #[arg(long)]
        stats: Option<PathBuf>,
        #[arg(long = "sig-bits", default_value_t = 32)]
        sig_bits: u32,
        #[arg(long = "max-cycles", default_value_t = 1000)]
        max_cycles: usize,
        #[arg(long)]
        compact: bool,
    },
    /// Make a presentation worse with seeded inverse Tietze moves.
    Uglify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the deterministic move sequence.
        #[arg(long)]
        seed: u64,
        /// Number of moves to apply.
        #[arg(long)]
        ops: usize,
        #[arg(long)]
        compact: bool,
    },
    /// Print abelian invariants of one presentation, or compare two.
    Check {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        compact: bool,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load(path: &Path, format: Format) -> Result<Presentation, CliError> {
    parse_source(&read(path)?, format)
}

fn parse_source(text: &str, format: Format) -> Result<Presentation, CliError> {
    format::parse(text, format)
}

fn emit(p: &Presentation, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = format::serialize(p, format)?;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sig_config(bits: u32) -> Result<SigConfig, CliError> {
    if bits == 32 || bits == 64 {
        Ok(SigConfig::new(bits))
    } else {
        Err(CliError::Usage(format!("--sig-bits must be 32 or 64, got {bits}")))
    }
}

fn pick_format(compact: bool) -> Format {
    if compact { Format::Compact } else { Format::Explicit }
}

fn run_simplify(cmd: SimplifyCmd) -> Result<(), CliError> {
    let format = pick_format(cmd.compact);
    let p = load(&cmd.input, format)?;
    let strategy: Strategy = cmd.strategy.into();
    let opts = SimplifyOptions {
        max_cycles: cmd.max_cycles,
        verify: cmd.verify,
        sig: sig_config(cmd.sig_bits)?,
        ..SimplifyOptions::default()
    };
    let clock = StdClock::new();
    let report = simplify(&p, strategy, &opts, &clock)?;
    emit(&report.presentation, format, cmd.out.as_deref())?;
    if let Some(path) = &cmd.stats {
        write(path, &stats::csv(&[(strategy.name(), &report.stats)]))?;
    }
    if let Some(path) = &cmd.log {
        write(path, &log_text(&report.log, &report.presentation))?;
    }
    println!(
        "simplified: {} live generators, {} relators, total length {}",
        report.presentation.live_generator_count(),
        report.presentation.relators().len(),
        report.presentation.total_length()
    );
    print!("{}", stats::human_table(strategy.name(), &report.stats));
    Ok(())
}

fn run_bench(
    input: &Path,
    stats_path: Option<&Path>,
    sig_bits: u32,
    max_cycles: usize,
    compact: bool,
) -> Result<(), CliError> {
    let format = pick_format(compact);
    let p = load(input, format)?;
    let opts = SimplifyOptions {
        max_cycles,
        sig: sig_config(sig_bits)?,
        ..SimplifyOptions::default()
    };
    let mut reports: Vec<(Strategy, SimplifyReport)> = Vec::new();
    for strategy in Strategy::ALL {
        let clock = StdClock::new();
        reports.push((strategy, simplify(&p, strategy, &opts, &clock)?));
    }
    let (_, naive) = &reports[0];
    for (strategy, report) in &reports[1..] {
        if report.presentation != naive.presentation {
            return Err(CliError::Verification(format!(
                "strategy {} produced a different presentation than naive",
                strategy.name()
            )));
        }
        if report.log != naive.log {
            return Err(CliError::Verification(format!(
                "strategy {} produced a different transform log than naive",
                strategy.name()
            )));
        }
    }
    if let Some(path) = stats_path {
        let entries: Vec<(&str, &tietze_core::driver::SearchStats)> = reports
            .iter()
            .map(|(s, r)| (s.name(), &r.stats))
            .collect();
        write(path, &stats::csv(&entries))?;
    }
    println!(
        "bench: all strategies agree ({} live generators, {} relators, total length {})",
        naive.presentation.live_generator_count(),
        naive.presentation.relators().len(),
        naive.presentation.total_length()
    );
    let naive_searched = naive.stats.totals().searched;
    for (strategy, report) in &reports {
        let totals = report.stats.totals();
        println!(
            "  {:<6} searched {:>10}  saving {:>5.1}%",
            strategy.name(),
            totals.searched,
            saving_percent(naive_searched, totals.searched)
        );
    }
    Ok(())
}

fn run_check(a: &Path, b: Option<&Path>, compact: bool) -> Result<(), CliError> {
    let format = pick_format(compact);
    let pa = load(a, format)?;
    let ia = pa.abelian_invariants()?;
    println!(
        "{}: free rank {}, torsion {:?}",
        a.display(),
        ia.free_rank,
        ia.torsion
    );
    if let Some(b) = b {
        let pb = load(b, format)?;
        let ib = pb.abelian_invariants()?;
        println!(
            "{}: free rank {}, torsion {:?}",
            b.display(),
            ib.free_rank,
            ib.torsion
        );
        if ia != ib {
            return Err(CliError::Verification(
                "abelian invariants differ".to_string(),
            ));
        }
        println!("abelian invariants match");
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simplify(cmd) => run_simplify(cmd),
        Command::Bench { input, stats, sig_bits, max_cycles, compact } => {
            run_bench(&input, stats.as_deref(), sig_bits, max_cycles, compact)
        }
        Command::Uglify { input, out, seed, ops, compact } => {
            let format = pick_format(compact);
            let p = load(&input, format)?;
            let ugly = uglify(&p, seed, ops)?;
            emit(&ugly, format, out.as_deref())
        }
        Command::Check { a, b, compact } => run_check(&a, b.as_deref(), compact),
    }
}

/// Entry point shared by `main` and the integration tests. Returns the
/// process exit status.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
