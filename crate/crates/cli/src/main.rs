use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pivotal_cli::app::{run, Cli, Config};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = Config::from_env().and_then(|cfg| run(&cli, &cfg));
    match outcome {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.json).as_bytes());
            ExitCode::from(report.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
