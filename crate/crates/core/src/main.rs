use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unitgroup_lab::verify::{self, VerificationReport, MAX_FAMILY_DEGREE, MIN_FAMILY_DEGREE};

#[derive(Parser)]
#[command(
    name = "unitgroup-lab",
    version,
    about = "Checks which symmetric and alternating groups are unit groups of rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the facts behind a claim and print a verdict per report
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Largest degree for the sn and an families
        #[arg(long, default_value_t = MAX_FAMILY_DEGREE as u64,
              value_parser = clap::value_parser!(u64).range(MIN_FAMILY_DEGREE as u64..=MAX_FAMILY_DEGREE as u64))]
        max_n: u64,
        /// Write the reports as a JSON array to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads for the parallel scans
        #[arg(long)]
        threads: Option<usize>,
        /// Record 0 ms for every report so repeated runs give identical JSON
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    C5,
    S3,
    S4,
    A4,
    A8,
    Sn,
    An,
    All,
}

impl Claim {
    fn name(self) -> &'static str {
        match self {
            Claim::C5 => "c5",
            Claim::S3 => "s3",
            Claim::S4 => "s4",
            Claim::A4 => "a4",
            Claim::A8 => "a8",
            Claim::Sn => "sn",
            Claim::An => "an",
            Claim::All => "all",
        }
    }
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let Command::Verify { claim, max_n, json, threads, no_timing } = cli.command;

    if let Some(k) = threads {
        if k == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }

    let mut reports = match verify::run(claim.name(), max_n as usize) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if no_timing {
        reports.iter_mut().for_each(|r| r.ms = 0);
    }
    for r in &reports {
        print_report(r);
    }

    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
        if let Err(e) = fs::write(&path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }

    if reports.iter().all(|r| r.verdict.is_success()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn print_report(r: &VerificationReport) {
    let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
    println!("{:<6} {:<10} {:>7} ms  {}", r.id, verdict.as_str().unwrap_or_default(), r.ms, r.anchor.quote);
    for f in r.failed_facts() {
        let expected = f.expected.as_ref().map(ToString::to_string).unwrap_or_default();
        println!("       mismatch: {}: expected {expected}, observed {}", f.name, f.observed);
    }
}
