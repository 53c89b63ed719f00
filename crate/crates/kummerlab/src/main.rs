use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use kummerlab::{list_checks, run, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact verification of even eights and their double covers
/// of the jacobian Kummer model.
#[derive(Debug, Parser)]
#[command(name = "kummerlab", version)]
struct Args {
    /// Run only checks whose id matches this glob (repeatable).
    #[arg(long = "check", value_name = "GLOB")]
    checks: Vec<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    report: Format,
    /// List the registered checks and exit.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list {
        let checks = list_checks();
        match args.report {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&checks).expect("plain JSON")
            ),
            Format::Text => {
                for c in checks {
                    println!("{}\t{}\t[{}]", c.id, c.description, c.anchor);
                }
            }
        }
        return ExitCode::SUCCESS;
    }
    match run(&args.checks) {
        Ok(report) => {
            match args.report {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(u8::from(report.has_failures()))
        }
        Err(e @ (Error::UnknownCheck(_) | Error::BadPattern { .. })) => {
            eprintln!("error: {e}\n\nRun `kummerlab --list` to see the available check ids.");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
