use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Exact Gröbner bases with central and noncentral (de)homogenization.
#[derive(Parser, Debug)]
#[command(name = "dhgb", version)]
struct Cli {
    /// Session file, or `-` for standard input
    session: PathBuf,

    /// Command to run instead of the session's `command` line,
    /// e.g. `pipeline --degree-bound 6` or `asvar x gb`
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    command: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = if cli.session.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(&cli.session)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.session.display());
            return ExitCode::from(2);
        }
    };
    let outcome = dhgb::run(&text, &cli.command);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
