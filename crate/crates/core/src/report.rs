//! Machine-readable run reports. Every numerical field is an exact
//! rational serialized as a `"p/q"` string; reports are deterministic
//! for a fixed input and seed except for the timing field.

use crate::corpus::CriterionOutcome;
use crate::input::{matrix_to_strings, SCHEMA_VERSION};
use crate::search::ExhaustionReport;
use crate::symplectic::LagrangianCertificate;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub artifact_version: String,
    pub command: String,
    pub seed: u64,
    pub input_echo: serde_json::Value,
    pub outputs: Outputs,
    pub verdicts: Vec<Verdict>,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, seed: u64, input_echo: serde_json::Value) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            seed,
            input_echo,
            outputs: Outputs::default(),
            verdicts: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn verdict(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// 0 = all verdicts pass, 1 = a verified negative or exhaustion.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Outputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell_counts: Option<CellCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_legend: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<TraceEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustion: Option<ExhaustionDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witt: Option<WittDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<Vec<CriterionOutcome>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceEntry {
    pub element: usize,
    pub name: String,
    /// Exact rational as "p/q".
    pub trace: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockEntry {
    pub label: String,
    pub dim: usize,
}

/// Serialized Lagrangian certificate: basis rows of `"p/q"` entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub ambient_dim: usize,
    pub dim: usize,
    pub lagrangian: Vec<Vec<String>>,
    pub checks: ChecksDoc,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChecksDoc {
    pub dimension: bool,
    pub isotropy: bool,
    pub invariance: bool,
}

impl CertificateDoc {
    pub fn from_certificate(cert: &LagrangianCertificate) -> Self {
        CertificateDoc {
            ambient_dim: cert.lagrangian.ambient_dim(),
            dim: cert.lagrangian.dim(),
            lagrangian: matrix_to_strings(cert.lagrangian.basis()),
            checks: ChecksDoc {
                dimension: cert.checks.dimension,
                isotropy: cert.checks.isotropy,
                invariance: cert.checks.invariance,
            },
            provenance: cert.provenance.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExhaustionDoc {
    pub candidates_tried: u64,
    pub height_bound: u32,
    pub enumeration_complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_label: Option<String>,
}

impl ExhaustionDoc {
    pub fn from_report(r: &ExhaustionReport) -> Self {
        ExhaustionDoc {
            candidates_tried: r.candidates_tried,
            height_bound: r.height_bound,
            enumeration_complete: r.enumeration_complete,
            block_label: r.block_label.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WittDoc {
    pub equivalent: bool,
    pub sum_dim: usize,
}
