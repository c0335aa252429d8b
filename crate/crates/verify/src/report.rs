use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = concat!("pi-verify ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Printed in the source article.
    #[serde(rename = "paper")]
    Literature,
    /// Computed by an independent code path.
    DerivedOracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
    pub note: String,
}

/// A falsifying assignment, replayable by parsing `polynomial` (after
/// multilinearization) and evaluating it on `tuple` in `algebra`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessReport {
    pub label: String,
    pub polynomial: String,
    pub algebra: Option<String>,
    pub tuple: Vec<String>,
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    /// Informational checks never fail a suite.
    pub gating: bool,
    pub computed: BTreeMap<String, Value>,
    pub expected: BTreeMap<String, Expected>,
    pub witness: Vec<WitnessReport>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    pub version: String,
}

impl CheckReport {
    pub fn new(check: &str, params: BTreeMap<String, String>, gating: bool) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            status: Status::Skipped,
            gating,
            computed: BTreeMap::new(),
            expected: BTreeMap::new(),
            witness: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
            version: TOOL_VERSION.to_string(),
        }
    }

    /// Records a computed value together with what it must equal.
    pub fn expect<T: Serialize, U: Serialize>(
        &mut self,
        key: &str,
        computed: T,
        expected: U,
        provenance: Provenance,
        note: &str,
    ) {
        self.computed.insert(key.to_string(), serde_json::to_value(computed).expect("plain data"));
        self.expected.insert(
            key.to_string(),
            Expected {
                value: serde_json::to_value(expected).expect("plain data"),
                provenance,
                note: note.to_string(),
            },
        );
    }

    /// Records a computed value with nothing to compare against.
    pub fn info<T: Serialize>(&mut self, key: &str, computed: T) {
        self.computed.insert(key.to_string(), serde_json::to_value(computed).expect("plain data"));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn mismatches(&self) -> Vec<&str> {
        self.expected
            .iter()
            .filter(|(k, e)| self.computed.get(*k) != Some(&e.value))
            .map(|(k, _)| k.as_str())
            .collect()
    }

    /// Pass iff every expected value was computed exactly.
    pub fn settle(&mut self) {
        self.status = if self.mismatches().is_empty() && !self.expected.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.status = Status::Skipped;
        self.notes.push(reason.into());
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn timeless(&self) -> Self {
        CheckReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        };
        let gate = if self.gating { "" } else { " (informational)" };
        let _ = writeln!(out, "{status} {}{gate} [{} ms]", self.check, self.elapsed_ms);
        for (k, v) in &self.computed {
            match self.expected.get(k) {
                Some(e) if &e.value == v => {
                    let _ = writeln!(out, "  ok   {k} = {v}");
                }
                Some(e) => {
                    let _ = writeln!(out, "  FAIL {k} = {v}, expected {} ({:?})", e.value, e.provenance);
                }
                None => {
                    let _ = writeln!(out, "  info {k} = {v}");
                }
            }
        }
        for w in &self.witness {
            let _ = writeln!(out, "  witness {}: {}", w.label, w.polynomial);
            if let Some(alg) = &w.algebra {
                let _ = writeln!(out, "    in {alg} at ({})", w.tuple.join(", "));
            }
            if let Some(v) = &w.value {
                let _ = writeln!(out, "    value {v}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_expectations() {
        let mut r = CheckReport::new("x", BTreeMap::new(), true);
        r.expect("a", vec![1, 2], vec![1, 2], Provenance::Literature, "");
        r.info("b", "anything");
        r.settle();
        assert_eq!(r.status, Status::Pass);
        r.expect("c", 3, 4, Provenance::DerivedOracle, "");
        r.settle();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.mismatches(), ["c"]);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r = CheckReport::new("x", BTreeMap::new(), true);
        let mut v = serde_json::to_value(&r).unwrap();
        assert_eq!(serde_json::from_value::<CheckReport>(v.clone()).unwrap(), r);
        v.as_object_mut().unwrap().insert("extra".into(), Value::Null);
        assert!(serde_json::from_value::<CheckReport>(v).is_err());
    }
}
