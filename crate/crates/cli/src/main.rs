mod commands;
mod config;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use commands::{Failure, Report};
use config::{Cli, Command, RunConfig};

fn run(cli: &Cli) -> Result<(Report, RunConfig), Failure> {
    let cfg = RunConfig::from_common(&cli.common).map_err(Failure::Usage)?;
    let report = match cli.command {
        Command::Count { max_degree } => commands::count(&cfg, max_degree)?,
        Command::Enumerate { degree } => commands::enumerate(&cfg, degree)?,
        Command::Verify { max_degree } => commands::verify(&cfg, max_degree)?,
        Command::Cyclotomic { max_prime } => commands::cyclotomic(max_prime)?,
    };
    Ok((report, cfg))
}

fn emit(report: &Report, cfg: &RunConfig) -> io::Result<()> {
    let mut out: Box<dyn Write> = match &cfg.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    report.table.write(cfg.format, &mut *out)?;
    out.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, cfg) = match run(&cli) {
        Ok(done) => done,
        Err(Failure::Usage(msg)) => {
            eprintln!("sgatoms: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("sgatoms: error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&report, &cfg) {
        eprintln!("sgatoms: writing output: {e}");
        return ExitCode::from(2);
    }
    for note in &report.notes {
        eprintln!("{note}");
    }
    if report.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
