//! JSON report types shared by every subcommand (see
//! `schema/report.schema.json`).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    EvidenceOnly,
}

impl ClaimStatus {
    pub fn text(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::EvidenceOnly => "evidence-only",
        }
    }
}

/// Outcome of one reproduction claim.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: ClaimStatus,
    /// One line per sub-check or observation.
    pub detail: Vec<String>,
    /// Computed artifacts (bases, counts, invariant factors).
    pub artifacts: serde_json::Value,
    pub wall_time_s: f64,
}

/// Top-level JSON document printed by `qr ... --json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quandle: Option<String>,
    pub data: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claims: Option<Vec<ClaimReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_pass: Option<bool>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document {
            command: command.to_string(),
            quandle: None,
            data: serde_json::Value::Null,
            claims: None,
            all_pass: None,
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("serializable"));
    }
}
