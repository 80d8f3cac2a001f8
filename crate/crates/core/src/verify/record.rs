use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub group: String,
    pub check: String,
    pub status: Status,
    pub detail: Value,
}

impl CheckRecord {
    pub fn new(group: &str, check: &str, status: Status, detail: Value) -> Self {
        CheckRecord {
            group: group.to_string(),
            check: check.to_string(),
            status,
            detail,
        }
    }

    /// Pass when `ok`, fail otherwise; the detail serves as the witness.
    pub fn verdict(group: &str, check: &str, ok: bool, detail: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        CheckRecord::new(group, check, status, detail)
    }

    /// A skipped record with `reason` stored in `detail.reason`.
    pub fn skipped(group: &str, check: &str, reason: impl Into<String>, mut detail: Value) -> Self {
        if !detail.is_object() {
            detail = json!({});
        }
        detail["reason"] = Value::String(reason.into());
        CheckRecord::new(group, check, Status::Skipped, detail)
    }

    /// Budget errors become skipped records; anything else is a failure.
    pub fn from_error(group: &str, check: &str, err: &Error) -> Self {
        if err.is_budget() {
            CheckRecord::skipped(group, check, err.to_string(), json!({}))
        } else {
            CheckRecord::new(group, check, Status::Fail, json!({ "error": err.to_string() }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialises_with_lowercase_status() {
        let r = CheckRecord::skipped("g", "vdovin(9)", "oracle budget", json!({"n": 9}));
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"status\":\"skipped\""));
        assert!(s.contains("\"reason\":\"oracle budget\""));
        let back: CheckRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
