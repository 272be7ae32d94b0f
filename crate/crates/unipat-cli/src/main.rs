//! `unipat`: tables and per-root reports for pattern combinatorics of
//! positive root systems.

mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "unipat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for per-root searches; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Root system type: A, B, C, D, E6, E7, E8, F4, G2 (or e.g. B4 with the rank attached).
    #[arg(long = "type")]
    pub ty: String,

    /// Rank for the classical types.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots in canonical order.
    Rootsys(SystemArgs),
    /// Count antichains (representable sets) by size.
    Antichains {
        #[command(flatten)]
        system: SystemArgs,
        /// One row per antichain size (the default).
        #[arg(long)]
        by_size: bool,
        /// Only the total number of antichains.
        #[arg(long, conflicts_with = "by_size")]
        total: bool,
    },
    /// The patterns n(α), k(α) and w(α) of one root.
    Kernel {
        #[command(flatten)]
        system: SystemArgs,
        /// Root by 1-based index or coordinates, e.g. 115, e1-e3, (1,1,1,1)/2.
        #[arg(long)]
        root: String,
    },
    /// The hook of one root with its decomposition pairs.
    Hook {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        root: String,
    },
    /// Arms, legs and enlarged legs for one root or all of them.
    Arms {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        root: Option<String>,
    },
    /// Number and degree of the midafis for every positive root.
    Midafi(SystemArgs),
    /// Brute-force checks in the unitriangular group of type A.
    Oracle {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Run every lemma check instead of printing the group summary.
        #[arg(long)]
        verify_all: bool,
    },
    /// Consistency checks over one system or every system up to rank 8.
    Verify {
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Rootsys(sys) => report::rootsys(&report::system(sys)?),
        Command::Antichains {
            system,
            total,
            by_size: _,
        } => report::antichains(&report::system(system)?, *total),
        Command::Kernel { system, root } => report::kernel(&report::system(system)?, root),
        Command::Hook { system, root } => report::hook(&report::system(system)?, root),
        Command::Arms { system, root } => {
            report::arms(&report::system(system)?, root.as_deref(), cli.jobs)
        }
        Command::Midafi(sys) => report::midafi(&report::system(sys)?, cli.jobs),
        Command::Oracle {
            rank,
            q,
            verify_all,
        } => report::oracle(*rank, *q, *verify_all),
        Command::Verify { ty, rank } => report::verify(ty.as_deref(), *rank, cli.jobs),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match cli.format {
        Format::Csv => report.write_csv(&mut sink)?,
        Format::Json => report.write_json(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
