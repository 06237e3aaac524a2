#![allow(dead_code)]

use std::path::PathBuf;

use linkext::cli::{run_command, Invocation, Outcome};
use linkext::session::{parse_session, Session};

/// `(fixture, command, names)` for every fixture with a golden JSON file.
pub const GOLDEN_CASES: &[(&str, &str, &[&str])] = &[
    ("double_line", "colon", &["Y", "I1"]),
    ("double_line", "link", &["Y", "I1"]),
    ("double_line", "verify-triple", &["Y", "I1", "I2"]),
    ("double_line", "hilbert", &["I1"]),
    ("double_line", "hilbert", &["Sq"]),
    ("double_line", "hilbert", &["Y"]),
    ("double_line", "gb", &["I1"]),
    ("double_line", "mu", &["I1", "P"]),
    ("double_line", "lci", &["I1", "P"]),
    ("double_line", "gorenstein", &["Y", "P"]),
    ("double_line", "classify", &["L1", "L2"]),
    ("fossum", "link", &["B", "A1"]),
    ("fossum", "verify-triple", &["B", "A1", "A2"]),
    ("fossum", "doubling", &["B", "A1"]),
    ("fossum", "localize", &["B", "O"]),
    ("fossum", "gorenstein", &["B", "O"]),
    ("classification", "classify", &["MA1", "MA2"]),
    ("classification", "classify", &["MB1", "MB2"]),
    ("classification", "classify", &["MV1", "MV2"]),
    ("classification", "classify", &["MO1", "MO2"]),
    ("classification", "classify", &["D1", "D2"]),
    ("classification", "classify", &["S1", "S2"]),
    ("classification", "classify", &["S1", "S3"]),
    ("classification", "classify", &["C1", "C2"]),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture_path(name: &str) -> PathBuf {
    manifest_dir().join("fixtures").join(format!("{name}.session"))
}

pub fn load(name: &str) -> Session {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    parse_session(&text).expect("fixture parses")
}

pub fn golden_path(fixture: &str, command: &str, names: &[&str]) -> PathBuf {
    manifest_dir().join("tests").join("golden").join(format!("{fixture}__{command}__{}.json", names.join("_")))
}

pub fn run(fixture: &str, command: &str, names: &[&str], seed: u64) -> Outcome {
    let mut inv = Invocation::new(command, names);
    inv.seed = seed;
    run_command(&load(fixture), &inv).expect("command succeeds")
}
