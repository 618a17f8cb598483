use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// A mathematical failure: exit code 1.
#[derive(Debug, Clone)]
pub struct Failure {
    pub kind: String,
    pub message: String,
}

/// What a subcommand produced: structured results plus the text rendering.
#[derive(Debug, Default)]
pub struct Outcome {
    pub results: Map<String, Value>,
    pub lines: Vec<String>,
    pub failure: Option<Failure>,
}

impl Outcome {
    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn fail(&mut self, kind: impl Into<String>, message: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(Failure { kind: kind.into(), message: message.into() });
        }
    }
}

pub fn digest(inputs: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    h.finalize().iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub struct Report {
    pub command: String,
    pub argv: Vec<String>,
    pub seed: u64,
    pub inputs_digest: String,
    pub outcome: Outcome,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcome.failure.is_none()
    }

    fn verdict(&self) -> Value {
        match &self.outcome.failure {
            None => json!({ "status": "PASS" }),
            Some(f) => json!({ "status": "FAIL", "kind": f.kind, "message": f.message }),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "argv": self.argv,
            "seed": self.seed,
            "inputs_digest": self.inputs_digest,
            "verdict": self.verdict(),
            "results": Value::Object(self.outcome.results.clone()),
            "timing": { "elapsed_ms": self.elapsed_ms },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.outcome.lines {
            s.push_str(l);
            s.push('\n');
        }
        match &self.outcome.failure {
            None => s.push_str("verdict: PASS\n"),
            Some(f) => {
                let _ = writeln!(s, "verdict: FAIL {}: {}", f.kind, f.message);
            }
        }
        s
    }
}
