use clap::Parser;
use std::io::Write;
use std::process::ExitCode;
use wcone::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    match execute(cli) {
        Ok(outcome) => {
            match &outcome.destination {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, outcome.text.as_bytes()) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => {
                    let mut stdout = std::io::stdout().lock();
                    if stdout.write_all(outcome.text.as_bytes()).is_err() {
                        return ExitCode::from(3);
                    }
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
