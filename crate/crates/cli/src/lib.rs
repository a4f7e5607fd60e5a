//! Instance documents in JSON, and a command runner that validates them,
//! computes the module-theoretic constructions on them, and certifies
//! adjunctions, cartesian hulls and rational parts with exact arithmetic.

mod args;
mod commands;
mod document;
mod report;
pub mod schema;

use std::path::Path;

use clap::Parser;

pub use args::{AdjunctionKind, CheckKind, Cli, Command, ComputeKind, Options, Output};
pub use commands::{run, UsageError};
pub use document::{
    encode, parse, Comodule, ComoduleData, Document, Morphism, MorphismData, NamedContramodule, NamedModule, Object,
    Pairing, ParseError, Representation,
};
pub use report::{Check, Fact, Report, Status, Value};

/// Exit status and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn load(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| e.to_string())
}

/// Parses `argv` (program name first) and runs it.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let Some(input) = &cli.input else {
        return Outcome::usage("--input FILE is required");
    };
    let doc = match load(input) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(e),
    };
    match run(cli.command, &cli.options, &doc) {
        Ok(report) => {
            let stdout = match cli.output {
                Output::Json => report.to_json(),
                Output::Text => report.to_text(),
            };
            Outcome { code: report.exit_code(), stdout, stderr: String::new() }
        }
        Err(e) => Outcome::usage(e),
    }
}
