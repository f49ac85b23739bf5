use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Result of one command. Everything here is a function of the inputs, so
/// the JSON form is byte-identical across runs; timing goes to stderr.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub input_digest: String,
    pub structure: String,
    pub parameters: Parameters,
    pub status: Status,
    pub findings: Value,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Parameters {
    pub height: u64,
    pub window: i64,
    pub order: Option<usize>,
    /// Recorded for reproducibility; every search here is exhaustive.
    pub seed: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    CheckFailed,
    EquivalenceBroken,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::EquivalenceBroken => 3,
        }
    }
}

pub fn digest(command: &str, input: &[u8], params: &Parameters) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(input);
    h.update([0]);
    h.update(format!("{}:{}:{:?}", params.height, params.window, params.order).as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
