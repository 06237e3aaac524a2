//! Parsing a session file and running commands, as the `linkext` binary does.

use linkext::cli::{run_command, Invocation};
use linkext::session::parse_session;
use linkext::Result;

const SESSION: &str = include_str!("../fixtures/double_line.session");

pub fn run() -> Result<()> {
    let session = parse_session(SESSION)?;
    for (cmd, args) in [("colon", vec!["Y", "I1"]), ("hilbert", vec!["I1"]), ("verify-triple", vec!["Y", "I1", "I2"]), ("classify", vec!["L1", "L2"])] {
        let out = run_command(&session, &Invocation::new(cmd, &args))?;
        print!("$ linkext double_line.session {cmd} {}\n{}", args.join(" "), out.text);
        println!("exit {}", out.exit_code);
    }
    let out = run_command(&session, &Invocation::new("mu", &["I1", "P"]))?;
    print!("{}", out.json_string());

    match parse_session("ring Q[x,y]\nideal I = x +\n") {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!("incomplete expression parsed"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
