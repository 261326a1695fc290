//! Reports: a command echo, the input digest, the effective options, a
//! structured result and an overall status, rendered either as text lines
//! or as a single JSON document.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// A located reason why a property failed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub property: String,
    pub location: Value,
    pub message: String,
}

impl Witness {
    pub fn new(property: &str, location: Value, message: String) -> Witness {
        Witness {
            property: property.to_string(),
            location,
            message,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub options: Value,
    pub status: Status,
    pub result: Value,
    #[serde(skip)]
    pub lines: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(self).expect("report values serialize");
                s.push('\n');
                s
            }
            Format::Human => {
                let mut out = format!("command: {}\n", self.command);
                if let Some(d) = &self.input_digest {
                    out.push_str(&format!("input: {d}\n"));
                }
                for line in &self.lines {
                    out.push_str(line);
                    out.push('\n');
                }
                let status = match self.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Error => "error",
                };
                out.push_str(&format!("status: {status}\n"));
                out
            }
        }
    }
}
