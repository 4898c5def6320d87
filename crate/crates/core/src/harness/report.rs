use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub matroid_id: String,
    pub matroid_lex01: String,
    pub detail: Value,
}

/// Outcome of one check over one catalog. Passes iff `violations` is empty.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub scope: String,
    pub examined: u64,
    pub filtered: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Counters and violations collected for one catalog entry.
#[derive(Debug, Default)]
pub struct Tally {
    pub examined: u64,
    pub filtered: u64,
    pub violations: Vec<Value>,
}

impl Tally {
    pub fn filter(&mut self) {
        self.filtered += 1;
    }

    pub fn examine(&mut self) {
        self.examined += 1;
    }

    /// Counts one examined instance and records `detail` unless `ok`.
    pub fn expect(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.examined += 1;
        if !ok {
            self.violations.push(detail());
        }
    }

    pub fn fail(&mut self, detail: Value) {
        self.violations.push(detail);
    }
}

pub fn to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

pub fn to_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = write!(
            out,
            "{status} {} examined={} filtered={} violations={}",
            r.check_id,
            r.examined,
            r.filtered,
            r.violations.len()
        );
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(out, " elapsed_ms={ms}");
        }
        out.push('\n');
        for v in &r.violations {
            let _ = writeln!(out, "  {} [{}] {}", v.matroid_id, v.matroid_lex01, v.detail);
        }
    }
    out
}
