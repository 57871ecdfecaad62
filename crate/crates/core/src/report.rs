//! JSON report envelopes shared by the command line and the self test.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::Value;

/// `{check, pass, witness, report}` with fields in that order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub witness: Value,
    pub report: Value,
}

impl Report {
    pub fn new(check: impl Into<String>, pass: bool, witness: impl Serialize, report: impl Serialize) -> Self {
        Report {
            check: check.into(),
            pass,
            witness: serde_json::to_value(witness).expect("serializable witness"),
            report: serde_json::to_value(report).expect("serializable report"),
        }
    }

    /// A report without a nested payload.
    pub fn value(check: impl Into<String>, value: impl Serialize) -> Self {
        Report::new(check, true, Value::Null, value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

pub(crate) fn big_as_string<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}
