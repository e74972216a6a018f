use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use smr_core::dispatch::{self, construct, feasibility};
use smr_core::format::{from_csv, from_json, to_csv, to_grid, to_json};
use smr_core::oracle::{self, decide, SearchStatus};
use smr_core::seeds::seed_by_name;
use smr_core::{verify_smr, Error, Params, SignedArray};

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_CUTOFF: u8 = 4;
const EXIT_USAGE: u8 = 64;

/// Construct, verify and search for signed magic rectangles SMR(m,n;r,2).
#[derive(Parser)]
#[command(name = "smr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an SMR(m,n;r,2).
    Gen {
        m: usize,
        n: usize,
        r: usize,
        #[command(flatten)]
        format: FormatArgs,
        /// Append the construction route.
        #[arg(long)]
        trace: bool,
    },
    /// Print whether an SMR(m,n;r,2) exists.
    Decide { m: usize, n: usize, r: usize },
    /// Check a JSON or CSV file against the SMR axioms.
    Verify { path: PathBuf },
    /// Print one of the built-in base arrays (S_2x4, S_2x3, S_4x12, S_6x18,
    /// S_5x10, S_3x6, S_5x15, S_3x9).
    Seed {
        id: String,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Decide existence of SMR(m,mr/2;r,2) by exhaustive search.
    Oracle {
        m: usize,
        r: usize,
        #[arg(long, env = "SMR_BUDGET", default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
        /// Print the witness array when one is found.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Compare the exhaustive search with the existence criterion.
    Crosscheck {
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_r: usize,
        #[arg(long, env = "SMR_BUDGET", default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Construct and verify every feasible point up to the given bounds.
    Sweep {
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_r: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Grid,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, value_enum, conflicts_with_all = ["json", "csv", "grid"])]
    format: Option<OutputFormat>,
    #[arg(long, conflicts_with_all = ["csv", "grid"])]
    json: bool,
    #[arg(long, conflicts_with = "grid")]
    csv: bool,
    #[arg(long)]
    grid: bool,
}

impl FormatArgs {
    fn kind(&self) -> OutputFormat {
        match self.format {
            Some(f) => f,
            None if self.json => OutputFormat::Json,
            None if self.csv => OutputFormat::Csv,
            None => OutputFormat::Grid,
        }
    }

    fn render(&self, a: &SignedArray, p: &Params) -> String {
        match self.kind() {
            OutputFormat::Grid => to_grid(a),
            OutputFormat::Json => to_json(a, p) + "\n",
            OutputFormat::Csv => to_csv(a, p),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let mut out = String::new();
    let code = run(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(EXIT_INTERNAL);
    }
    ExitCode::from(code)
}

fn run(command: Command, out: &mut String) -> u8 {
    match command {
        Command::Gen {
            m,
            n,
            r,
            format,
            trace,
        } => match construct(m, n, r) {
            Ok(c) => {
                out.push_str(&format.render(&c.array, &c.params));
                if trace {
                    out.push_str(&c.trace.to_string());
                }
                EXIT_OK
            }
            Err(Error::Infeasible { verdict, .. }) => {
                out.push_str(&format!("{verdict}\n"));
                EXIT_INFEASIBLE
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INTERNAL
            }
        },
        Command::Decide { m, n, r } => {
            let verdict = feasibility(m, n, r);
            out.push_str(&format!("{verdict}\n"));
            if verdict.feasible {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            }
        }
        Command::Verify { path } => cmd_verify(&path, out),
        Command::Seed { id, format } => match seed_by_name(&id) {
            Ok((a, p)) => {
                out.push_str(&format.render(&a, &p));
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Command::Oracle {
            m,
            r,
            budget,
            witness,
            format,
        } => {
            let outcome = decide(m, r, budget);
            out.push_str(&format!(
                "SMR({m},{};{r},2): {} (nodes: {})\n",
                m * r / 2,
                outcome.status,
                outcome.nodes
            ));
            if let (true, Some(w)) = (witness, &outcome.witness) {
                let p = Params {
                    m,
                    n: m * r / 2,
                    r,
                    s: 2,
                };
                out.push_str(&format.render(w, &p));
            }
            match outcome.status {
                SearchStatus::Exists => EXIT_OK,
                SearchStatus::NotExists => EXIT_INFEASIBLE,
                SearchStatus::Cutoff => EXIT_CUTOFF,
            }
        }
        Command::Crosscheck {
            max_m,
            max_r,
            budget,
        } => {
            let report = oracle::cross_check(max_m, max_r, budget);
            out.push_str(&report.to_string());
            if !report.passed() {
                EXIT_VERIFY_FAILED
            } else if report.cutoffs().next().is_some() {
                EXIT_CUTOFF
            } else {
                EXIT_OK
            }
        }
        Command::Sweep { max_m, max_r } => {
            let report = dispatch::sweep(max_m, max_r);
            out.push_str(&report.to_string());
            if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
    }
}

fn cmd_verify(path: &PathBuf, out: &mut String) -> u8 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return EXIT_INTERNAL;
        }
    };
    let parsed = if text.trim_start().starts_with('{') {
        from_json(&text)
    } else {
        from_csv(&text)
    };
    let (a, p) = match parsed {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INTERNAL;
        }
    };
    match verify_smr(&a, &p) {
        Ok(report) => {
            out.push_str(&report.to_string());
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INTERNAL
        }
    }
}
