use std::fmt;

use serde_json::{json, Value};

use crate::Format;

/// Outcome of a subcommand in every supported format.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// `None` when the command has no tabular form.
    pub csv: Option<String>,
    /// False when a verification failed.
    pub ok: bool,
}

impl Report {
    pub fn new(text: String, json: Value) -> Self {
        Report { text, json, csv: None, ok: true }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    /// Prints the report and returns its verdict.
    pub fn emit(self, format: Format, command: &str) -> Result<bool, CliError> {
        let out = match format {
            Format::Text => self.text,
            Format::Csv => self.csv.ok_or_else(|| CliError::Usage(format!("{command} has no csv output")))?,
            Format::Json => {
                let doc = json!({
                    "tool": "k3dyn",
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": command,
                    "ok": self.ok,
                    "report": self.json,
                });
                serde_json::to_string_pretty(&doc).expect("JSON values always serialize") + "\n"
            }
        };
        print!("{out}");
        Ok(self.ok)
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or combinations.
    Usage(String),
    /// Unreadable or malformed input file.
    Input(String),
    /// A computation that could not be carried out.
    Compute(k3dyn::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<k3dyn::Error> for CliError {
    fn from(e: k3dyn::Error) -> Self {
        CliError::Compute(e)
    }
}
