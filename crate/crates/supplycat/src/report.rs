//! Structured pass/fail reports shared by every check suite.
//!
//! A report is a flat list of entries. Each entry names the law it checked
//! (`law`), a unique id within the suite, a status, and, on failure, a
//! witness with the offending morphisms rendered in full.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skipped => write!(f, "skipped"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    /// Stable name of the law/property this entry verifies.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub bounds: BTreeMap<String, u64>,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            bounds: BTreeMap::new(),
            entries: Vec::new(),
        }
    }

    pub fn with_bound(mut self, key: &str, value: u64) -> Self {
        self.bounds.insert(key.to_string(), value);
        self
    }

    pub fn pass(&mut self, id: impl Into<String>, anchor: impl Into<String>) {
        self.entries.push(CheckEntry {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
        });
    }

    pub fn fail(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.entries.push(CheckEntry {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        });
    }

    pub fn skip(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        reason: impl Into<String>,
    ) {
        self.entries.push(CheckEntry {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Skipped,
            witness: Some(reason.into()),
        });
    }

    /// Record an equality check: pass when `holds`, otherwise fail with the
    /// rendered witness.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        holds: bool,
        witness: impl FnOnce() -> String,
    ) {
        if holds {
            self.pass(id, anchor);
        } else {
            self.fail(id, anchor, witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (k, v) in other.bounds {
            self.bounds.entry(k).or_insert(v);
        }
        self.entries.extend(other.entries);
    }

    /// Sort entries by id so reports are deterministic regardless of the
    /// evaluation order of their checks.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| a.id.cmp(&b.id));
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        if !self.bounds.is_empty() {
            let bounds: Vec<String> = self
                .bounds
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(f, "  bounds: {}", bounds.join(" "))?;
        }
        for e in &self.entries {
            writeln!(f, "  [{}] {} ({})", e.status, e.id, e.anchor)?;
            if let Some(w) = &e.witness {
                for line in w.lines() {
                    writeln!(f, "      {line}")?;
                }
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "  {}: {} checks, {} failures",
            verdict,
            self.entries.len(),
            self.failures().count()
        )
    }
}

/// Cap applied when rendering a morphism into a witness string. Anything
/// larger is truncated and flagged.
pub const RENDER_CELL_CAP: usize = 400;

/// Render a morphism for a witness, truncating past [`RENDER_CELL_CAP`] cells.
pub fn render_capped(text: String) -> String {
    let mut cells = 0usize;
    for (i, c) in text.char_indices() {
        if c == ',' || c == '\n' {
            cells += 1;
            if cells >= RENDER_CELL_CAP {
                return format!("{}… [truncated at {} cells]", &text[..i], RENDER_CELL_CAP);
            }
        }
    }
    text
}
