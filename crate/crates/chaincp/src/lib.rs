//! JSON front end for `chaincp-core`: file formats, command dispatch and
//! exit-code policy.

pub mod cli;
pub mod commands;
pub mod formats;

use chaincp_core::error::AlgebraError;
use serde_json::Value;

/// Outcome of a command: a JSON document and whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub pass: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable, malformed or semantically invalid input.
    #[error("input error: {0}")]
    Input(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn from_algebra(e: AlgebraError) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Serializes with the requested indentation; compact when `None`.
pub fn render(value: &Value, indent: Option<usize>) -> String {
    match indent {
        None => serde_json::to_string(value).expect("values serialize"),
        Some(n) => {
            let pad = vec![b' '; n];
            let mut out = Vec::new();
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut ser = serde_json::Serializer::with_formatter(&mut out, fmt);
            serde::Serialize::serialize(value, &mut ser).expect("values serialize");
            String::from_utf8(out).expect("utf-8 output")
        }
    }
}
