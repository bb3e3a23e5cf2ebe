use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// How a command ended; maps onto the process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    /// UNSAT, refuted, or violations found.
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Negative => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input bytes, hex.
    pub input_digest: String,
    pub seed: u64,
    pub outcome: Outcome,
    pub stages: Map<String, Value>,
    pub duration_ms: u64,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Stage outputs collected by a command before it is timed and wrapped.
#[derive(Debug, Default)]
pub struct Stages {
    pub map: Map<String, Value>,
    pub summary: Vec<String>,
    pub warnings: Vec<String>,
}

impl Stages {
    pub fn put<T: Serialize>(&mut self, name: &str, value: &T) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.map.insert(name.to_string(), v);
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    pub fn warn(&mut self, line: impl Into<String>) {
        self.warnings.push(line.into());
    }
}

impl RunReport {
    pub fn new(command: &str, input_digest: String, seed: u64, outcome: Outcome, stages: Map<String, Value>, took: Duration) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest,
            seed,
            outcome,
            stages,
            duration_ms: took.as_millis() as u64,
        }
    }
}
