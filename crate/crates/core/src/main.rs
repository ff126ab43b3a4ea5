use std::io::{stdout, LineWriter};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use feuler::cli::{run_cli, CliConfig};

fn main() -> ExitCode {
    let config = match CliConfig::try_parse() {
        Ok(config) => config,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let message = e.render().to_string();
            eprint!("{message}");
            if !message.contains("Usage:") {
                eprintln!("\n{}", CliConfig::command().render_usage());
            }
            return ExitCode::from(2);
        }
    };
    let mut out = LineWriter::new(stdout().lock());
    match run_cli(&config, &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("feuler: {e}");
            ExitCode::from(2)
        }
    }
}
