use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use toposcope::FiniteTopology;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

/// One checked claim: how many instances were examined and the first one
/// that failed, if any.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Evidence {
    pub claim: String,
    pub instances: u64,
    pub counterexample: Option<Value>,
}

impl Evidence {
    pub fn new(claim: impl Into<String>) -> Self {
        Evidence { claim: claim.into(), instances: 0, counterexample: None }
    }

    /// Counts one instance; keeps only the first counterexample.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) -> bool {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(counterexample());
        }
        ok
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn with_claim(mut self, claim: impl Into<String>) -> Self {
        self.claim = claim.into();
        self
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub evidence: Vec<Evidence>,
    /// Only filled in on request, so that reports stay byte-identical.
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn from_evidence(suite: &str, params: BTreeMap<String, Value>, evidence: Vec<Evidence>) -> Self {
        let verdict = if evidence.iter().all(Evidence::holds) { Verdict::Pass } else { Verdict::Fail };
        VerificationReport { suite: suite.to_string(), params, verdict, note: None, evidence, elapsed_ms: None }
    }

    pub fn skipped(suite: &str, params: BTreeMap<String, Value>, why: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params,
            verdict: Verdict::Skip,
            note: Some(why.into()),
            evidence: Vec::new(),
            elapsed_ms: None,
        }
    }

    /// A suite that stopped on an unexpected error fails with the error as
    /// its counterexample.
    pub fn errored(suite: &str, params: BTreeMap<String, Value>, error: &toposcope::Error) -> Self {
        let mut e = Evidence::new("suite ran to completion");
        e.check(false, || json!({ "error": error.to_string() }));
        VerificationReport::from_evidence(suite, params, vec![e])
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }
}

/// Canonical encoding of a topology: ground size and its sorted open masks.
pub fn topology(t: &FiniteTopology) -> Value {
    json!({ "n": t.n(), "opens": t.masks() })
}
