use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = subcheck::cli::Cli::parse();
    ExitCode::from(subcheck::cli::run(cli))
}
