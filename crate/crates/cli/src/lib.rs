//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code and both output streams, so it can be driven from
//! tests without spawning a process.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use reynolds::algebra::{apply_p, ReynoldsOperator};
use reynolds::enumeration::{enumerate_reynolds_words, enumerate_words, size_counts};
use reynolds::forests::{to_dot, word_to_forest};
use reynolds::models::{averaging_model, differential_model, universal_map};
use reynolds::{Combination, Letter, Rational, RationalPolynomial, Word};

/// Default cap on `enum --max-size`, overridable through `REYN_MAX_SIZE`.
pub const DEFAULT_MAX_SIZE_CAP: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "reyn",
    version,
    about = "Compute in the free Reynolds algebra on bracketed words",
    long_about = "Compute in the free Reynolds algebra on bracketed words.\n\n\
        Words use `[` `]` for brackets and whitespace between atoms; `1` is the empty word.\n\
        Linear combinations look like `1/4 * [x [y]] - 1/2 * [[x]] [y] + z`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a bracketed word; print its canonical form, depth and class.
    Parse {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply the Reynolds operator P to a linear combination.
    #[command(name = "apply-p")]
    ApplyP {
        lincomb: String,
        #[arg(long)]
        json: bool,
    },
    /// Concatenation product of two linear combinations.
    Multiply {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an identity residual; exits 0 iff it is zero.
    Check {
        #[arg(long, value_enum)]
        identity: Identity,
        /// Linear combinations the identity is evaluated on.
        #[arg(long, num_args = 1.., required = true, allow_hyphen_values = true)]
        args: Vec<String>,
        /// Truncation order for `series`.
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Enumerate bracketed words by size.
    Enum {
        /// Comma-separated letters.
        #[arg(long, value_delimiter = ',', required = true)]
        alphabet: Vec<String>,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        reynolds_only: bool,
        /// Print `size<TAB>count` lines instead of the words.
        #[arg(long)]
        count: bool,
    },
    /// Map a linear combination into a polynomial Reynolds algebra.
    Eval {
        #[arg(long, value_enum)]
        model: ModelKind,
        /// Letter images, e.g. `x=x,y=x^2`.
        #[arg(long)]
        assign: String,
        #[arg(long)]
        expr: String,
    },
    /// Graphviz rendering of a word's decorated forest.
    Dot { word: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Identity {
    /// P(u)P(v) = P(uP(v)) + P(P(u)v) - P(P(u)P(v)); two arguments.
    Reynolds,
    /// (m-1)P(prod P(u_i)) = sum_i P(..u_i..) - prod P(u_i); two or more arguments.
    Multivariant,
    /// Truncated series expansion of P(u)P(v) at order --k; two arguments.
    Series,
    /// P(u*v) = P(u)P(v) for two arguments, associativity of * for three.
    Star,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Reynolds => "reynolds",
            Identity::Multivariant => "multivariant",
            Identity::Series => "series",
            Identity::Star => "star",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelKind {
    Averaging,
    Differential,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let max_size_cap = std::env::var("REYN_MAX_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_SIZE_CAP);
    run_with_cap(args, max_size_cap)
}

pub fn run_with_cap<I, T>(args: I, max_size_cap: usize) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut stdout = String::new();
    match execute(cli.command, max_size_cap, &mut stdout) {
        Ok(code) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout,
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn parse_lincomb(text: &str) -> Result<Combination, Failure> {
    Combination::parse(text).map_err(|e| Failure::Domain(format!("in {text:?}: {e}")))
}

fn emit_lincomb(out: &mut String, value: &Combination, json: bool) -> Result<(), Failure> {
    if json {
        out.push_str(&serde_json::to_string(&value.to_json())?);
        out.push('\n');
    } else {
        let _ = writeln!(out, "{value}");
    }
    Ok(())
}

fn execute(command: Command, max_size_cap: usize, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Parse { expr, json } => {
            let word =
                Word::parse(&expr).map_err(|e| Failure::Domain(format!("in {expr:?}: {e}")))?;
            if json {
                let value = serde_json::json!({
                    "word": word.to_string(),
                    "depth": word.depth(),
                    "class": word.classify().to_string(),
                });
                out.push_str(&serde_json::to_string(&value)?);
                out.push('\n');
            } else {
                let _ = writeln!(out, "word: {word}");
                let _ = writeln!(out, "depth: {}", word.depth());
                let _ = writeln!(out, "class: {}", word.classify());
            }
            Ok(0)
        }
        Command::ApplyP { lincomb, json } => {
            let a = parse_lincomb(&lincomb)?;
            emit_lincomb(out, &apply_p(&a)?, json)?;
            Ok(0)
        }
        Command::Multiply { a, b, json } => {
            let (a, b) = (parse_lincomb(&a)?, parse_lincomb(&b)?);
            emit_lincomb(out, &a.multiply(&b), json)?;
            Ok(0)
        }
        Command::Check { identity, args, k } => {
            let inputs = args
                .iter()
                .map(|a| parse_lincomb(a))
                .collect::<Result<Vec<_>, _>>()?;
            let residual = check(identity, &inputs, k)?;
            let _ = writeln!(out, "{residual}");
            Ok(if residual.is_zero() { 0 } else { 1 })
        }
        Command::Enum {
            alphabet,
            max_size,
            reynolds_only,
            count,
        } => {
            if max_size > max_size_cap {
                return Err(Failure::Domain(format!(
                    "--max-size {max_size} exceeds the cap of {max_size_cap} (set REYN_MAX_SIZE to raise it)"
                )));
            }
            let mut letters: Vec<Letter> = Vec::new();
            for name in &alphabet {
                let letter = Letter::new(name.trim())?;
                if letters.contains(&letter) {
                    return Err(Failure::Domain(format!("duplicate letter `{letter}`")));
                }
                letters.push(letter);
            }
            let words = if reynolds_only {
                enumerate_reynolds_words(&letters, max_size)
            } else {
                enumerate_words(&letters, max_size)
            };
            if count {
                for (size, n) in size_counts(&words, max_size).iter().enumerate() {
                    let _ = writeln!(out, "{size}\t{n}");
                }
            } else {
                for w in &words {
                    let _ = writeln!(out, "{w}");
                }
            }
            Ok(0)
        }
        Command::Eval {
            model,
            assign,
            expr,
        } => {
            let assignment = parse_assignment(&assign)?;
            let a = parse_lincomb(&expr)?;
            let image = match model {
                ModelKind::Averaging => universal_map(&averaging_model()?, &assignment, &a)?,
                ModelKind::Differential => universal_map(&differential_model()?, &assignment, &a)?,
            };
            let _ = writeln!(out, "{image}");
            Ok(0)
        }
        Command::Dot { word } => {
            let w = Word::parse(&word).map_err(|e| Failure::Domain(format!("in {word:?}: {e}")))?;
            out.push_str(&to_dot(&word_to_forest(&w)));
            Ok(0)
        }
    }
}

fn check(identity: Identity, inputs: &[Combination], k: usize) -> Result<Combination, Failure> {
    let mut op = ReynoldsOperator::<Rational>::new();
    let arity = |allowed: &[usize]| -> Result<(), Failure> {
        if allowed.contains(&inputs.len()) {
            Ok(())
        } else {
            let counts: Vec<String> = allowed.iter().map(|n| n.to_string()).collect();
            Err(Failure::Usage(format!(
                "identity `{}` takes {} arguments, got {}",
                identity.name(),
                counts.join(" or "),
                inputs.len()
            )))
        }
    };
    Ok(match identity {
        Identity::Reynolds => {
            arity(&[2])?;
            op.reynolds_residual(&inputs[0], &inputs[1])?
        }
        Identity::Multivariant => {
            if inputs.len() < 2 {
                return Err(Failure::Usage(format!(
                    "multivariant takes at least 2 arguments, got {}",
                    inputs.len()
                )));
            }
            op.multivariant_residual(inputs)?
        }
        Identity::Series => {
            arity(&[2])?;
            op.truncated_series_residual(&inputs[0], &inputs[1], k)?
        }
        Identity::Star => {
            arity(&[2, 3])?;
            if inputs.len() == 2 {
                let uv = op.star_product(&inputs[0], &inputs[1])?;
                let lhs = op.apply(&uv)?;
                let rhs = op.apply(&inputs[0])?.multiply(&op.apply(&inputs[1])?);
                lhs.sub(&rhs)
            } else {
                let uv = op.star_product(&inputs[0], &inputs[1])?;
                let left = op.star_product(&uv, &inputs[2])?;
                let vw = op.star_product(&inputs[1], &inputs[2])?;
                let right = op.star_product(&inputs[0], &vw)?;
                left.sub(&right)
            }
        }
    })
}

fn parse_assignment(text: &str) -> Result<HashMap<Letter, RationalPolynomial>, Failure> {
    let mut out = HashMap::new();
    for entry in text.split(',').filter(|e| !e.trim().is_empty()) {
        let (name, image) = entry
            .split_once('=')
            .ok_or_else(|| Failure::Domain(format!("assignment entry {entry:?} lacks '='")))?;
        let letter = Letter::new(name.trim())?;
        let poly = RationalPolynomial::parse(image.trim())?;
        if out.insert(letter.clone(), poly).is_some() {
            return Err(Failure::Domain(format!("letter `{letter}` assigned twice")));
        }
    }
    Ok(out)
}
