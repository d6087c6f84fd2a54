use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ReportEnvelope<T: Serialize> {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: String,
    /// SHA-256 of the input file bytes, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub seed: u64,
    pub exit_status: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<T>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Wall-clock timings per stage; dropped in stable mode.
pub struct Timer {
    stable: bool,
    last: Instant,
    stages: BTreeMap<String, f64>,
}

impl Timer {
    pub fn new(stable: bool) -> Self {
        Timer { stable, last: Instant::now(), stages: BTreeMap::new() }
    }

    pub fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages.insert(stage.to_string(), (now - self.last).as_secs_f64() * 1e3);
        self.last = now;
    }

    pub fn finish(self) -> Option<BTreeMap<String, f64>> {
        (!self.stable).then_some(self.stages)
    }
}
