//! Check records and the verification report emitted by the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An exact value compared by a check. Serialised without a tag, so
/// integers stay JSON integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Bool(bool),
    Int(i64),
    Seq(Vec<i64>),
    Text(String),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Bool(b) => write!(f, "{b}"),
            CheckValue::Int(n) => write!(f, "{n}"),
            CheckValue::Seq(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            CheckValue::Text(s) => f.write_str(s),
        }
    }
}

impl From<bool> for CheckValue {
    fn from(b: bool) -> Self {
        CheckValue::Bool(b)
    }
}

impl From<i64> for CheckValue {
    fn from(n: i64) -> Self {
        CheckValue::Int(n)
    }
}

impl From<i32> for CheckValue {
    fn from(n: i32) -> Self {
        CheckValue::Int(i64::from(n))
    }
}

impl From<u32> for CheckValue {
    fn from(n: u32) -> Self {
        CheckValue::Int(i64::from(n))
    }
}

impl From<u8> for CheckValue {
    fn from(n: u8) -> Self {
        CheckValue::Int(i64::from(n))
    }
}

impl From<u64> for CheckValue {
    fn from(n: u64) -> Self {
        CheckValue::Int(n as i64)
    }
}

impl From<Vec<i64>> for CheckValue {
    fn from(v: Vec<i64>) -> Self {
        CheckValue::Seq(v)
    }
}

impl From<Vec<u32>> for CheckValue {
    fn from(v: Vec<u32>) -> Self {
        CheckValue::Seq(v.into_iter().map(i64::from).collect())
    }
}

impl From<&str> for CheckValue {
    fn from(s: &str) -> Self {
        CheckValue::Text(s.to_owned())
    }
}

impl From<String> for CheckValue {
    fn from(s: String) -> Self {
        CheckValue::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Case label or command the check belongs to.
    pub case: String,
    pub name: String,
    /// The mathematical statement being checked.
    pub claim: String,
    pub expected: CheckValue,
    pub got: CheckValue,
    pub pass: bool,
}

impl Check {
    pub fn compare(
        case: impl Into<String>,
        name: impl Into<String>,
        claim: impl Into<String>,
        expected: impl Into<CheckValue>,
        got: impl Into<CheckValue>,
    ) -> Check {
        let (expected, got) = (expected.into(), got.into());
        Check {
            case: case.into(),
            name: name.into(),
            claim: claim.into(),
            pass: expected == got,
            expected,
            got,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Report {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            passed,
            failed: checks.len() - passed,
        };
        Report {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tallies_records() {
        let report = Report::new(vec![
            Check::compare("i", "a", "x = 1", 1i64, 1i64),
            Check::compare("i", "b", "y = 2", 2i64, 3i64),
            Check::compare("i", "c", "s", vec![1i64, 2], vec![1i64, 2]),
        ]);
        assert_eq!(
            report.summary,
            Summary {
                passed: 2,
                failed: 1
            }
        );
        assert!(!report.all_passed());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let report = Report::new(vec![
            Check::compare("ii-c(5)", "verdict", "mult <= 3", true, true),
            Check::compare(
                "i",
                "seq",
                "h0",
                vec![1i64, 4, 10, 21],
                vec![1i64, 4, 10, 21],
            ),
            Check::compare("i", "text", "w", "quadric", "quadric"),
            Check::compare("i", "neg", "n", -3i64, -3i64),
        ]);
        let json = report.to_json();
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), json);
    }
}
