use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use toposcope::PropertyKind;
use toposcope_cli::report::Verdict;
use toposcope_cli::suites::{Params, Uses, SUITES};
use toposcope_cli::{enumerate, show, soft_cap_from, verify, CliError, Format, View};

/// Exact computations in the lattice of topologies on a finite set, and
/// symbolic certificates over the naturals.
#[derive(Parser)]
#[command(name = "toposcope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its JSON report.
    ///
    /// Exit status is 0 on PASS, 1 on FAIL, 3 on SKIP.
    Verify {
        suite: String,
        /// Largest ground size for the finite suites.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Largest prime index for the chain suite.
        #[arg(long, default_value_t = 4)]
        max_index: usize,
        /// Point bound or case count, depending on the suite.
        #[arg(long)]
        bound: Option<u64>,
        /// Seed for the randomized part of `upset-algebra`.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// List the registered suites.
    List,
    /// Enumerate all topologies on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only topologies with this property (t0, t1, t2, td, sober, d-space, well-filtered).
        #[arg(long)]
        filter: Option<PropertyKind>,
        #[arg(long, value_enum, default_value_t = EnumerateFormat::Count)]
        format: EnumerateFormat,
    },
    /// Describe one topology given by its open sets as bitmasks.
    Show {
        #[arg(long)]
        n: usize,
        /// Open sets as comma-separated masks, e.g. `0,2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        opens: Vec<u64>,
        #[arg(long, value_enum, default_value_t = ShowFormat::Text)]
        format: ShowFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateFormat {
    Count,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowFormat {
    Text,
    Json,
    Dot,
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Verify { suite, n, max_index, bound, seed, out, timing } => {
            let cap = soft_cap_from(std::env::var("TOPOSCOPE_MAX_N").ok().as_deref())?;
            let params = Params { n, max_index, bound, seed };
            let report = verify(&suite, &params, cap, timing)?;
            let json = report.to_json();
            match out {
                Some(path) => std::fs::write(path, json)?,
                None => print!("{json}"),
            }
            Ok(ExitCode::from(match report.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::Skip => 3,
            }))
        }
        Command::List => {
            for s in SUITES {
                let scope = match s.uses {
                    Uses::Size => "--n",
                    Uses::MaxIndex => "--max-index, --bound",
                    Uses::Bound(_) => "--bound",
                    Uses::BoundAndSeed(_) => "--bound, --seed",
                    Uses::Nothing => "",
                };
                println!("{:<17} {:<22} {}", s.name, scope, s.summary);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, filter, format } => {
            let format = match format {
                EnumerateFormat::Count => Format::Count,
                EnumerateFormat::Json => Format::Json,
                EnumerateFormat::Dot => Format::Dot,
            };
            print!("{}", enumerate(n, filter, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { n, opens, format } => {
            let view = match format {
                ShowFormat::Text => View::Text,
                ShowFormat::Json => View::Json,
                ShowFormat::Dot => View::Dot,
            };
            print!("{}", show(n, &opens, view)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e.downcast_ref::<CliError>(), Some(CliError::UnknownSuite(_))) {
                let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
                eprintln!("known suites: {}", names.join(", "));
            }
            ExitCode::from(2)
        }
    }
}
