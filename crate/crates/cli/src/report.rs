//! Command reports. The human rendering is produced from the JSON value, so
//! both formats carry the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use colorlie::linalg::Vector;
use colorlie::lie::IndexReport;
use colorlie::color::SeriesProfile;
use colorlie::pairings::Bicharacter;
use colorlie::CycloScalar;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    DoesNotHold,
    Valid,
    Invalid,
    Passed,
    Failed,
    Info,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Holds | Self::Valid | Self::Passed | Self::Info => 0,
            Self::DoesNotHold | Self::Invalid | Self::Failed => 1,
            Self::Error => 2,
        }
    }

    pub fn from_bool(ok: bool, yes: Verdict, no: Verdict) -> Verdict {
        if ok { yes } else { no }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub file: Option<String>,
    pub verdict: Verdict,
    pub classification: Option<String>,
    pub witness: Value,
    pub evidence: Value,
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(command: &str, file: Option<&str>, verdict: Verdict) -> Self {
        Self {
            command: command.to_string(),
            file: file.map(str::to_string),
            verdict,
            classification: None,
            witness: Value::Null,
            evidence: Value::Null,
            agreement: None,
            timings: None,
        }
    }

    pub fn error(command: &str, file: Option<&str>, message: &str) -> Self {
        let mut r = Self::new(command, file, Verdict::Error);
        r.evidence = json!({ "message": message });
        r
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        if let Value::Object(map) = self.to_json() {
            for (k, v) in map.iter().filter(|(_, v)| !v.is_null()) {
                write_value(&mut out, k, v, 0);
            }
        }
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(|i| inline(i).unwrap_or_default()).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Object(_) | Value::Array(_) => None,
        other => Some(other.to_string()),
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = inline(v) {
        if s.contains('\n') {
            let _ = writeln!(out, "{pad}{key}: |");
            for line in s.lines() {
                let _ = writeln!(out, "{pad}  {line}");
            }
        } else {
            let _ = writeln!(out, "{pad}{key}: {s}");
        }
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(map) => {
            for (k, v) in map.iter().filter(|(_, v)| !v.is_null()) {
                write_value(out, k, v, depth + 1);
            }
        }
        Value::Array(items) => {
            for (n, item) in items.iter().enumerate() {
                write_value(out, &format!("[{}]", n + 1), item, depth + 1);
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}

pub fn scalar(c: &CycloScalar) -> Value {
    Value::String(c.to_string())
}

pub fn vector(v: &Vector) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn vectors(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

/// Nontrivial generator values `{"g1,g2": value}`.
pub fn pairing_table(b: &Bicharacter) -> Value {
    let map: serde_json::Map<String, Value> = b
        .nontrivial_pairs()
        .into_iter()
        .map(|(i, j, v)| (format!("g{},g{}", i + 1, j + 1), scalar(&v)))
        .collect();
    Value::Object(map)
}

pub fn series(s: &SeriesProfile) -> Value {
    json!(s.dims)
}

pub fn index(r: &IndexReport) -> Value {
    json!({
        "dim": r.dim,
        "generic_rank": r.generic_rank,
        "index": r.index,
        "almost_maximal": r.almost_maximal,
        "trial_ranks": r.trial_ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_matches_json_fields() {
        let mut r = Report::new("lcs", Some("l5.alg"), Verdict::Info);
        r.evidence = json!({ "dims": [5, 3, 2, 0], "nilpotent": true });
        let text = r.render_human();
        assert!(text.contains("command: lcs"));
        assert!(text.contains("  dims: [5, 3, 2, 0]"));
        assert!(text.contains("verdict: info"));
        assert!(!text.contains("classification"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict::Holds.exit_code(), 0);
        assert_eq!(Verdict::DoesNotHold.exit_code(), 1);
        assert_eq!(Verdict::Error.exit_code(), 2);
    }
}
