//! Machine-readable verdicts.
//!
//! A [`CertificateReport`] is a list of [`ClaimResult`]s. The JSON form is
//! the source of truth; [`render_text`] only reformats it.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

impl Witness {
    pub fn new(label: impl Into<String>, value: impl ToString) -> Self {
        Witness {
            label: label.into(),
            value: value.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: Status,
    pub summary: String,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
}

impl ClaimResult {
    /// Runs `f` and records its wall time. A failing claim without any
    /// witness gets the summary as one, so every failure carries evidence.
    pub fn timed(id: &str, f: impl FnOnce() -> (Status, String, Vec<Witness>)) -> Self {
        let start = Instant::now();
        let (status, summary, mut witnesses) = f();
        if status != Status::Pass && witnesses.is_empty() {
            witnesses.push(Witness::new("reason", &summary));
        }
        ClaimResult {
            claim_id: id.to_string(),
            status,
            summary,
            witnesses,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema: u32,
    pub command: String,
    pub claims: Vec<ClaimResult>,
}

impl CertificateReport {
    pub fn new(command: impl Into<String>) -> Self {
        CertificateReport {
            schema: SCHEMA_VERSION,
            command: command.into(),
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, c: ClaimResult) {
        self.claims.push(c);
    }

    pub fn extend(&mut self, other: CertificateReport) {
        self.claims.extend(other.claims);
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimResult::passed)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Text form of a serialized report.
pub fn render_text(json: &serde_json::Value) -> String {
    let mut out = String::new();
    if let Some(cmd) = json.get("command").and_then(|c| c.as_str()) {
        let _ = writeln!(out, "== {cmd}");
    }
    let claims = json.get("claims").and_then(|c| c.as_array()).cloned().unwrap_or_default();
    for c in &claims {
        let status = c["status"].as_str().unwrap_or("?").to_uppercase();
        let id = c["claim_id"].as_str().unwrap_or("?");
        let summary = c["summary"].as_str().unwrap_or("");
        let ms = c["elapsed_ms"].as_u64().unwrap_or(0);
        let _ = writeln!(out, "[{status:<4}] {id}: {summary} ({ms} ms)");
        for w in c["witnesses"].as_array().into_iter().flatten() {
            let _ = writeln!(
                out,
                "         {} = {}",
                w["label"].as_str().unwrap_or(""),
                w["value"].as_str().unwrap_or("")
            );
        }
    }
    let pass = claims.iter().filter(|c| c["status"] == "pass").count();
    let _ = writeln!(out, "{pass}/{} claims pass", claims.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_claims_carry_witnesses() {
        let c = ClaimResult::timed("x", || (Status::Fail, "broken".into(), vec![]));
        assert_eq!(c.witnesses, vec![Witness::new("reason", "broken")]);
        let ok = ClaimResult::timed("y", || (Status::Pass, "fine".into(), vec![]));
        assert!(ok.witnesses.is_empty());
    }

    #[test]
    fn json_and_text() {
        let mut r = CertificateReport::new("demo");
        r.push(ClaimResult::timed("a", || (Status::Pass, "ok".into(), vec![Witness::new("n", 3)])));
        r.push(ClaimResult::timed("b", || (Status::Inconclusive, "short sweep".into(), vec![])));
        assert!(!r.passed());
        let j = r.to_json();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["claims"][1]["status"], "inconclusive");
        let back: CertificateReport = serde_json::from_value(j.clone()).unwrap();
        assert_eq!(back, r);
        let text = render_text(&j);
        assert!(text.contains("[PASS] a: ok"));
        assert!(text.contains("n = 3"));
        assert!(text.ends_with("1/2 claims pass\n"));
    }
}
