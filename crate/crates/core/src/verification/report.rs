use std::fmt::Write;

use serde::Serialize;

use crate::enumeration::canonical_form;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub class: String,
    pub n: usize,
    pub status: ClaimStatus,
    /// The exact value the claim is about, if it has one.
    pub value: Option<String>,
    /// graph6 of the extremal graphs, or of a counterexample on failure.
    pub witnesses: Vec<String>,
    pub wall_ms: u64,
    pub detail: String,
}

/// graph6 of the canonical form where available, so output does not
/// depend on which labelled copy a scan happened to keep.
pub(crate) fn witness_string(g: &Graph) -> String {
    match canonical_form(g) {
        Ok(c) => c.graph6(),
        Err(_) => crate::graph::graph6::encode(g).unwrap_or_default(),
    }
}

impl ClaimRecord {
    pub(crate) fn new(id: &str, class: &str, n: usize, ok: bool) -> Self {
        ClaimRecord {
            id: id.to_string(),
            class: class.to_string(),
            n,
            status: if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
            value: None,
            witnesses: Vec::new(),
            wall_ms: 0,
            detail: String::new(),
        }
    }

    pub(crate) fn value(mut self, v: impl ToString) -> Self {
        self.value = Some(v.to_string());
        self
    }

    pub(crate) fn witnesses(mut self, ws: impl IntoIterator<Item = String>) -> Self {
        self.witnesses = ws.into_iter().collect();
        self
    }

    pub(crate) fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == ClaimStatus::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(ClaimRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.claims.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, id: &str, n: usize) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id && c.n == n)
    }

    pub(crate) fn sort(&mut self) {
        self.claims.sort_by(|a, b| (&a.id, a.n).cmp(&(&b.id, b.n)));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,class,n,status,value,witnesses,wall_ms\n");
        for c in &self.claims {
            let status = if c.passed() { "pass" } else { "fail" };
            writeln!(
                out,
                "{},{},{},{status},{},{},{}",
                c.id,
                c.class,
                c.n,
                c.value.as_deref().unwrap_or(""),
                c.witnesses.join(" "),
                c.wall_ms
            )
            .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(out, "{status} {} n={}", c.id, c.n).unwrap();
            if let Some(v) = &c.value {
                write!(out, " value={v}").unwrap();
            }
            if !c.witnesses.is_empty() {
                write!(out, " witnesses={}", c.witnesses.join(",")).unwrap();
            }
            if !c.detail.is_empty() {
                write!(out, " ({})", c.detail).unwrap();
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        writeln!(out, "{} claims, {failed} failed", self.claims.len()).unwrap();
        out
    }
}
