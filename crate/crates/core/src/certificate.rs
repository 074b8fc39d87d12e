//! Machine-checkable verdicts.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Refuted
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Verified
    }

    /// Process exit code: 0 when verified, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        if self.holds() {
            0
        } else {
            1
        }
    }
}

/// The outcome of a named check, with its witness and a digest of its inputs.
///
/// `serde_json` keeps object keys sorted, so the rendered JSON is canonical.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub verdict: Verdict,
    pub witness: Value,
    pub inputs_digest: String,
    pub tool_version: String,
}

impl Certificate {
    pub fn new(check: impl Into<String>, verdict: Verdict, witness: Value, inputs: &Value) -> Self {
        Certificate {
            check: check.into(),
            verdict,
            witness,
            inputs_digest: digest(inputs),
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// SHA-256 of the compact canonical JSON text of `inputs`.
pub fn digest(inputs: &Value) -> String {
    let text = serde_json::to_string(inputs).expect("json value serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_is_key_order_independent() {
        let a: Value = serde_json::from_str(r#"{"b":1,"a":[2,3]}"#).unwrap();
        let b = json!({"a": [2, 3], "b": 1});
        assert_eq!(digest(&a), digest(&b));
        assert_ne!(digest(&a), digest(&json!({"a": [3, 2], "b": 1})));
    }

    #[test]
    fn rendering_is_stable() {
        let c = Certificate::new(
            "x",
            Verdict::Verified,
            json!({"z": 1, "y": 2}),
            &json!(null),
        );
        let first = c.to_json_string();
        assert_eq!(first, c.clone().to_json_string());
        assert!(first.find("\"y\"").unwrap() < first.find("\"z\"").unwrap());
        let back: Certificate = serde_json::from_str(&first).unwrap();
        assert_eq!(back, c);
    }
}
