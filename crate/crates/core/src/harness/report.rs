//! Conformance reports, as JSON or plain text. Both renderings are
//! deterministic for a given grid.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::grid::SCHEMA_VERSION;
use super::identities::{Class, Family, Identity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub class: Class,
    pub family: Family,
    /// Evaluated points, `pass + fail`.
    pub grid_size: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl Entry {
    pub(crate) fn new(identity: &Identity) -> Self {
        Entry {
            id: identity.id.to_string(),
            anchor: identity.anchor.to_string(),
            class: identity.class,
            family: identity.family,
            grid_size: 0,
            pass: 0,
            fail: 0,
            skipped: 0,
            first_counterexample: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.fail == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: Family,
    pub identities: usize,
    pub hard_failing: usize,
    pub recorded_failing: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformanceReport {
    pub schema_version: u32,
    pub entries: Vec<Entry>,
    pub families: Vec<FamilySummary>,
    /// Every hard identity passed at every point.
    pub hard_ok: bool,
}

impl ConformanceReport {
    pub fn new(entries: Vec<Entry>) -> Self {
        let families = Family::ALL
            .iter()
            .filter_map(|&family| {
                let of: Vec<&Entry> = entries.iter().filter(|e| e.family == family).collect();
                if of.is_empty() {
                    return None;
                }
                let failing = |class| of.iter().filter(|e| e.class == class && !e.holds()).count();
                Some(FamilySummary {
                    family,
                    identities: of.len(),
                    hard_failing: failing(Class::Hard),
                    recorded_failing: failing(Class::Recorded),
                })
            })
            .collect();
        let hard_ok = entries.iter().all(|e| e.class != Class::Hard || e.holds());
        ConformanceReport { schema_version: SCHEMA_VERSION, entries, families, hard_ok }
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match (e.holds(), e.class) {
                (true, _) => "ok",
                (false, Class::Hard) => "FAIL",
                (false, Class::Recorded) => "fails",
            };
            let class = match e.class {
                Class::Hard => "hard",
                Class::Recorded => "recorded",
            };
            let _ = writeln!(
                out,
                "{:<24} {:<9} {:<5} pass={} fail={} skipped={}",
                e.id, class, status, e.pass, e.fail, e.skipped
            );
            if let Some(c) = &e.first_counterexample {
                let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "    at {}", params.join(" "));
                let _ = writeln!(out, "    lhs {}", c.lhs);
                let _ = writeln!(out, "    rhs {}", c.rhs);
            }
        }
        for f in &self.families {
            let _ = writeln!(
                out,
                "family {}: {} identities, {} hard failing, {} recorded failing",
                f.family.name(),
                f.identities,
                f.hard_failing,
                f.recorded_failing
            );
        }
        let _ = writeln!(out, "hard identities: {}", if self.hard_ok { "all pass" } else { "FAILURES" });
        out
    }
}
