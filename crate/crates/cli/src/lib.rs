//! Command-line front end: structured input records, command dispatch and
//! deterministic reports.

pub mod app;
pub mod commands;
pub mod fixtures;
pub mod input;
pub mod report;
pub mod selftest;

use std::path::Path;

use serde_json::json;

use commands::{CommandKind, Options};
use input::InputError;
use report::{Report, Status};

fn error_report(kind: CommandKind, digest: Option<String>, opts: &Options, e: &InputError) -> Report {
    Report {
        command: kind.name().to_string(),
        input_digest: digest,
        options: opts.effective(kind),
        status: Status::Error,
        result: json!({ "error": e.to_string() }),
        lines: vec![format!("error: {e}")],
    }
}

/// Runs a command on input text. `None` is only valid for `selftest`.
pub fn run_text(kind: CommandKind, text: Option<&str>, opts: &Options) -> Report {
    let digest = text.map(|t| report::digest(t.as_bytes()));
    let text = match (kind, text) {
        (CommandKind::Selftest, _) => "",
        (_, Some(t)) => t,
        (_, None) => {
            return error_report(
                kind,
                digest,
                opts,
                &InputError::field("input", "an input file is required"),
            );
        }
    };
    match commands::settle(commands::execute(kind, text, opts)) {
        Ok(o) => Report {
            command: kind.name().to_string(),
            input_digest: digest,
            options: opts.effective(kind),
            status: if o.passed { Status::Pass } else { Status::Fail },
            result: o.result,
            lines: o.lines,
        },
        Err(e) => error_report(kind, digest, opts, &e),
    }
}

/// Reads the input file (if any) and runs the command.
pub fn run_path(kind: CommandKind, path: Option<&Path>, opts: &Options) -> Report {
    match path {
        None => run_text(kind, None, opts),
        Some(p) => match std::fs::read_to_string(p) {
            Ok(text) => run_text(kind, Some(&text), opts),
            Err(e) => error_report(
                kind,
                None,
                opts,
                &InputError::Io {
                    path: p.display().to_string(),
                    message: e.to_string(),
                },
            ),
        },
    }
}
