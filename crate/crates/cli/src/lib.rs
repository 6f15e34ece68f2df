//! Batch front end for `freedim`: reads JSON documents, runs one operation,
//! and prints a report as text, JSON or CSV.
//!
//! Exit status is 0 on success (verdict pass or no verdict), 1 when a check
//! fails, and 2 on usage, parse or validation errors.

pub mod docs;
pub mod report;

mod commands;

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use report::{Format, Report, Verdict};

#[derive(Debug, Parser)]
#[command(name = "freedim", version, about = "Finite set systems, Boolean algebra atoms and cover growth")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Seed for randomized subcommands.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Search bound for `find-n`.
    #[arg(long, global = true)]
    pub limit: Option<u64>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Atoms of the algebra generated by a set system.
    Atoms { input: PathBuf },
    /// Independence of chosen members, or the independence number.
    Indep {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        indices: Option<Vec<usize>>,
    },
    /// VC dimension of the members viewed as subsets of the ground set.
    Vc { input: PathBuf },
    /// Look for a shattered (d+1)-set in the realized trace.
    Sauer {
        input: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Pairwise comparable-or-disjoint check (set system or chain cuts).
    Heindorf { input: PathBuf },
    /// Atom bound for initial chains of a pseudotree.
    IcaCheck {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        picks: Vec<usize>,
    },
    /// Cylinder family of the free product of several set systems.
    FreeProduct {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Certify that no d+1 members are independent.
    Certify {
        input: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Atom counts against the binomial and polynomial bounds on sampled subfamilies.
    GrowthReport {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 32)]
        samples: usize,
    },
    /// Joint refinement of covers.
    Refine {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        covers: Option<Vec<usize>>,
    },
    /// Image of a cover under a surjection of ground sets.
    Push {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        map: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        cover: usize,
    },
    /// Trace of a cover on a subset, reindexed to 0..|subset|.
    Restrict {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        cover: usize,
    },
    /// Check joint refinements against M * (sum of chi)^d.
    WitnessCheck {
        input: PathBuf,
        #[arg(long, default_value = "1")]
        m: String,
        #[arg(long)]
        d: u32,
        /// Comma-separated cover indices; repeat for several tuples.
        #[arg(long)]
        tuple: Vec<String>,
    },
    /// Indicator family separating n+1 points.
    Separated {
        #[arg(long)]
        n: usize,
    },
    /// Grid instance with its trivial covers checked against the size floor.
    GridDemo {
        params: Option<PathBuf>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Evaluate (n*d*m + p*m1)^d < (n+1)^d * (p+1).
    Counting {
        params: Option<PathBuf>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        m1: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Smallest n for which the counting inequality holds.
    FindN {
        params: Option<PathBuf>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        m1: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Fitted growth exponent of atoms over a doubling schedule of subfamilies.
    Exponent {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

/// Everything a run produced, kept apart so data and diagnostics never mix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure that maps to exit status 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

pub(crate) struct Ctx {
    pub seed: u64,
    pub limit: Option<u64>,
    pub warnings: Vec<String>,
}

pub(crate) fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(format!("<stdin>: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let mut ctx = Ctx {
        seed: cli.seed,
        limit: cli.limit,
        warnings: Vec::new(),
    };
    let result = commands::dispatch(&cli.command, &mut ctx);
    let mut stderr: String = ctx.warnings.iter().map(|w| format!("{w}\n")).collect();
    match result {
        Ok(report) => {
            let code = match report.verdict {
                Some(Verdict::Fail) => 1,
                _ => 0,
            };
            let rendered = report.render(cli.format);
            match &cli.out {
                Some(path) => match std::fs::write(path, &rendered) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr },
                    Err(e) => {
                        stderr.push_str(&format!("error: {}: {e}\n", path.display()));
                        Outcome { code: 2, stdout: String::new(), stderr }
                    }
                },
                None => Outcome { code, stdout: rendered, stderr },
            }
        }
        Err(Failure(message)) => {
            stderr.push_str(&format!("error: {message}\n"));
            Outcome { code: 2, stdout: String::new(), stderr }
        }
    }
}
