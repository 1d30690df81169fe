use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = lpm_cli::Cli::parse();
    match lpm_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
