//! Invocations shared by the golden-file test and the acceptance suite.

use std::path::PathBuf;
use std::process::Command;

/// `(case name, arguments after the program name)`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("parse_nested", &["parse", "[[x] [y]] z"]),
    ("parse_not_reynolds", &["parse", "[[x][y]]"]),
    ("parse_json", &["parse", "--json", "[[x]] [y] [z]"]),
    ("parse_identity", &["parse", "1"]),
    ("parse_error", &["parse", "[x ]]"]),
    ("apply_p_worked", &["apply-p", "[[x]] [y] [z]"]),
    ("apply_p_three_brackets", &["apply-p", "[x] [y] [z]"]),
    ("apply_p_combination", &["apply-p", "2*x - 1/3 * [x] [y]"]),
    ("apply_p_json", &["apply-p", "--json", "[x] [y]"]),
    ("apply_p_empty_core", &["apply-p", "[] [x] [y]"]),
    ("apply_p_rejects", &["apply-p", "[[x] [y]]"]),
    ("multiply", &["multiply", "x + [y]", "[x] - 2"]),
    ("multiply_json", &["multiply", "--json", "x", "1/2 * y"]),
    (
        "check_reynolds",
        &[
            "check",
            "--identity",
            "reynolds",
            "--args",
            "[x] y",
            "[[z]]",
        ],
    ),
    (
        "check_multivariant",
        &[
            "check",
            "--identity",
            "multivariant",
            "--args",
            "x",
            "y",
            "z",
            "[x]",
        ],
    ),
    (
        "check_series",
        &[
            "check",
            "--identity",
            "series",
            "--k",
            "3",
            "--args",
            "x",
            "[y] z",
        ],
    ),
    (
        "check_star_product",
        &["check", "--identity", "star", "--args", "x y", "[x]"],
    ),
    (
        "check_star_assoc",
        &["check", "--identity", "star", "--args", "x", "y", "[z]"],
    ),
    (
        "check_arity",
        &["check", "--identity", "reynolds", "--args", "x"],
    ),
    (
        "enum_words",
        &["enum", "--alphabet", "x", "--max-size", "3"],
    ),
    (
        "enum_reynolds",
        &[
            "enum",
            "--alphabet",
            "x,y",
            "--max-size",
            "2",
            "--reynolds-only",
        ],
    ),
    (
        "enum_count",
        &[
            "enum",
            "--alphabet",
            "x,y",
            "--max-size",
            "5",
            "--reynolds-only",
            "--count",
        ],
    ),
    (
        "enum_count_all",
        &["enum", "--alphabet", "x", "--max-size", "6", "--count"],
    ),
    (
        "eval_averaging",
        &[
            "eval",
            "--model",
            "averaging",
            "--assign",
            "x=x,y=x^2",
            "--expr",
            "[[x] y] + [y] x",
        ],
    ),
    (
        "eval_differential",
        &[
            "eval",
            "--model",
            "differential",
            "--assign",
            "x=x,y=x^2",
            "--expr",
            "[[x]] [y]",
        ],
    ),
    (
        "eval_unassigned",
        &[
            "eval",
            "--model",
            "averaging",
            "--assign",
            "x=x",
            "--expr",
            "[z]",
        ],
    ),
    ("dot_forest", &["dot", "[x [y]] z"]),
    ("dot_identity", &["dot", "1"]),
    ("usage_unknown_command", &["frobnicate"]),
];

pub fn reyn_binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_reyn"))
}

/// Runs the built binary and renders exit code, stdout and stderr into one
/// transcript.
pub fn transcript(args: &[&str]) -> Vec<u8> {
    let output = Command::new(reyn_binary())
        .args(args)
        .env_remove("REYN_MAX_SIZE")
        .output()
        .expect("spawn reyn");
    let mut out =
        format!("exit: {}\n--- stdout\n", output.status.code().unwrap_or(-1)).into_bytes();
    out.extend_from_slice(&output.stdout);
    out.extend_from_slice(b"--- stderr\n");
    out.extend_from_slice(&output.stderr);
    out
}
