//! JSON documents written by the command-line tools.
//!
//! Every document carries a [`RunManifest`] (what was run, with which seed
//! and data) and a separate `timing` section. Everything else is a pure
//! function of the inputs, so two runs that differ only in thread count
//! produce identical bodies once `timing` is dropped.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::prover::ProofReport;
use crate::ratcore::Rational;
use crate::table::{sha256_hex, BundledDataset, RowCheck};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetChecksum {
    pub name: String,
    pub sha256: String,
    /// Bundled dataset with identical contents, if any.
    pub matches_bundled: Option<String>,
}

impl DatasetChecksum {
    pub fn of(name: &str, bytes: &[u8]) -> Self {
        let sha256 = sha256_hex(bytes);
        let matches_bundled = BundledDataset::matching(&sha256).map(str::to_string);
        DatasetChecksum { name: name.to_string(), sha256, matches_bundled }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Arguments that affect the result; thread count is left out.
    pub arguments: Vec<String>,
    pub seed: Option<u64>,
    pub datasets: Vec<DatasetChecksum>,
    pub version: String,
}

impl RunManifest {
    pub fn new(command: &str, arguments: Vec<String>) -> Self {
        RunManifest {
            command: command.to_string(),
            arguments,
            seed: None,
            datasets: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_dataset(mut self, dataset: DatasetChecksum) -> Self {
        self.datasets.push(dataset);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
    pub jobs: usize,
}

impl Timing {
    pub fn new(elapsed: Duration, jobs: usize) -> Self {
        Timing { elapsed_ms: elapsed.as_secs_f64() * 1000.0, jobs }
    }
}

/// Output of `prove`: the proof report fields at top level, plus
/// `manifest` and `timing`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProofDocument {
    pub manifest: RunManifest,
    #[serde(flatten)]
    pub report: ProofReport,
    pub timing: Timing,
}

impl ProofDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub row: usize,
    pub j: Vec<usize>,
    pub coeffs: Vec<u64>,
    pub expected: Rational,
    pub computed: Option<Rational>,
    pub hessian_pd: bool,
    pub ok: bool,
}

impl From<&RowCheck> for RowRecord {
    fn from(c: &RowCheck) -> Self {
        RowRecord {
            row: c.row,
            j: c.system.tail().to_vec(),
            coeffs: c.coeffs.clone(),
            expected: c.expected.clone(),
            computed: c.computed.clone(),
            hessian_pd: c.hessian_pd,
            ok: c.ok(),
        }
    }
}

/// Output of `verify --out`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationDocument {
    pub manifest: RunManifest,
    #[serde(rename = "V")]
    pub v: usize,
    pub verified: usize,
    pub total: usize,
    pub rows: Vec<RowRecord>,
    pub timing: Timing,
}

impl VerificationDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Removes the `timing` section from a serialized document, leaving the
/// part that must be reproducible.
pub fn strip_timing(json: &str) -> Result<serde_json::Value, serde_json::Error> {
    let mut value: serde_json::Value = serde_json::from_str(json)?;
    if let Some(obj) = value.as_object_mut() {
        obj.remove("timing");
    }
    Ok(value)
}
