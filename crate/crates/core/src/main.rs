use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use linkext::cli::{run_command, Invocation, EXIT_ERROR};
use linkext::double_lines::ClassifyMode;
use linkext::session::parse_session;

/// Run one command against a session file.
///
/// Commands: gb I | intersect I J | colon I J | saturate I J | hilbert I |
/// localize I P | gorenstein I P | mu I P | lci I P | link B I |
/// verify-triple B I J [P...] | doubling B I | classify L1 L2
#[derive(Parser, Debug)]
#[command(name = "linkext", version)]
struct Args {
    /// Session file declaring the ring, ideals, double lines and points.
    session: PathBuf,
    command: String,
    /// Names declared in the session file.
    names: Vec<String>,
    /// Decision route for `classify`: conditions, oracle or both.
    #[arg(long)]
    mode: Option<ClassifyMode>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Record wall-clock time (breaks byte-stability of the JSON output).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.session) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.session.display());
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let inv = Invocation { command: args.command, args: args.names, mode: args.mode, seed: args.seed, timings: args.timings };
    match parse_session(&text).and_then(|s| run_command(&s, &inv)) {
        Ok(out) => {
            if args.json {
                print!("{}", out.json_string());
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
