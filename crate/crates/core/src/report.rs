//! Structured pass/fail records for identity checks.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::poly::Poly;

/// Outcome of checking one identity instance: both sides as exact
/// polynomials plus an equality flag. `pass` is always `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Poly,
    pub rhs: Poly,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity_id": self.identity_id,
            "params": self.params,
            "lhs": self.lhs.coeffs_json(),
            "rhs": self.rhs.coeffs_json(),
            "pass": self.pass,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let status = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{} [{}] {}", self.identity_id, params, status)?;
        if !self.pass {
            write!(f, ": lhs = {} != rhs = {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

/// Builder that times an identity check from construction to `finish`.
pub struct Check {
    identity_id: String,
    params: BTreeMap<String, String>,
    started: Instant,
}

impl Check {
    pub fn new(identity_id: &str) -> Self {
        Check {
            identity_id: identity_id.to_owned(),
            params: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn finish(self, lhs: Poly, rhs: Poly) -> VerificationReport {
        let pass = lhs == rhs;
        VerificationReport {
            identity_id: self.identity_id,
            params: self.params,
            pass,
            lhs,
            rhs,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// True when every report in a batch passed.
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
