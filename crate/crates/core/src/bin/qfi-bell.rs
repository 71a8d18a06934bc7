use std::process::ExitCode;

use clap::Parser;
use qfi_bell::cli::{self, Cli};

fn main() -> ExitCode {
    let parsed = Cli::parse();
    let result = cli::configure_threads().and_then(|_| cli::run(parsed, &mut std::io::stdout().lock()));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
