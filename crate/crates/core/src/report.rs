//! Machine-readable result records.
//!
//! Every number is serialized as a decimal string so that large partition
//! functions survive JSON consumers limited to double precision.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// What a record asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// A proven identity; failures gate the exit status.
    Identity,
    /// Agreement with an unproven closed form; gates only when asked to.
    ConjectureConsistency,
    /// A computed value, not a comparison.
    Value,
}

/// One verdict or value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub kind: Kind,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(with = "decimal")]
    pub ms: u64,
}

impl CheckResult {
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    /// Whether this record counts as a failure under the given policy.
    pub fn is_gating_failure(&self, strict_conjecture: bool) -> bool {
        self.status == Status::Fail && (self.kind != Kind::ConjectureConsistency || strict_conjecture)
    }

    /// Key giving a deterministic order: check name, then numeric parameters.
    pub fn sort_key(&self) -> (String, Vec<(String, i128, String)>) {
        let params = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.parse::<i128>().unwrap_or(i128::MAX), v.clone()))
            .collect();
        (self.check.clone(), params)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(with = "decimal")]
    pub pass: u64,
    #[serde(with = "decimal")]
    pub fail: u64,
    #[serde(with = "decimal")]
    pub skip: u64,
}

impl Summary {
    pub fn of(records: &[CheckResult]) -> Summary {
        let count = |s| records.iter().filter(|r| r.status == s).count() as u64;
        Summary { pass: count(Status::Pass), fail: count(Status::Fail), skip: count(Status::Skip) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: BTreeMap<String, String>,
    pub records: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts the records and computes the summary.
    pub fn new(config: BTreeMap<String, String>, mut records: Vec<CheckResult>) -> Report {
        records.sort_by_cached_key(CheckResult::sort_key);
        let summary = Summary::of(&records);
        Report { version: env!("CARGO_PKG_VERSION").to_string(), config, records, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Precondition(format!("invalid report JSON: {e}")))
    }

    /// Human-readable listing, one line per record.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let tag = match (r.kind, r.status) {
                (Kind::Value, Status::Skip) => "skip".to_string(),
                (Kind::Value, _) => "value".to_string(),
                (Kind::ConjectureConsistency, s) => format!("{} (conjecture-consistency)", status_word(s)),
                (Kind::Identity, s) => status_word(s).to_string(),
            };
            out.push_str(&format!("{:<28} {:<24} {:<10} {}", r.check, params.join(" "), tag, r.lhs));
            if !r.rhs.is_empty() && r.kind != Kind::Value {
                out.push_str(&format!("  vs  {}", r.rhs));
            }
            if let Some(note) = &r.note {
                out.push_str(&format!("  [{note}]"));
            }
            out.push('\n');
        }
        out.push_str(&format!("pass {}  fail {}  skip {}\n", self.summary.pass, self.summary.fail, self.summary.skip));
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skip => "skip",
    }
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let s = String::deserialize(d)?;
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(D::Error::custom(format!("expected a decimal string, got {s:?}")));
        }
        s.parse().map_err(D::Error::custom)
    }
}
