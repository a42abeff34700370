use std::io::{self, Write};

use serde_json::Value;

pub const SCHEMA: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
    #[error(transparent)]
    Core(#[from] knotsig::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_parse() => 2,
            CliError::Math(_) | CliError::Core(_) => 3,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

/// Print a report object with the schema version added.
pub fn report(mut v: Value) -> Result<(), CliError> {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), SCHEMA.into());
    }
    let text = serde_json::to_string_pretty(&v)?;
    write_out(&text)
}

/// Write a line to stdout; a closed pipe (e.g. `| head`) is not an error.
pub fn write_out(text: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

/// Print `text`, or the JSON object from `obj` when `json` is set.
pub fn emit(json: bool, text: String, obj: impl FnOnce() -> Value) -> Result<(), CliError> {
    if json {
        report(obj())
    } else {
        write_out(&text)
    }
}
