//! Verdict records emitted by the command-line tool.
//!
//! A certificate is serialised as canonical JSON: object keys sorted, no
//! insignificant whitespace, one trailing newline. Two runs of the same
//! command agree byte for byte once `wall_time_ms` is removed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::saturation::Outcome;

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// e.g. `semisaturated`, `g-oracle`.
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Outcome,
    /// Witness or counterexample.
    pub witness: Option<Value>,
    /// Computed quantity, for commands that produce one.
    pub value: Option<Value>,
    /// Objects enumerated.
    pub checked: u64,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    /// Budget in force; required when the verdict is unknown.
    pub budget: Option<Value>,
    /// Random generator, for seeded commands.
    pub generator: Option<String>,
    pub tool_version: String,
    pub wall_time_ms: u64,
}

impl Certificate {
    pub fn new(claim: impl Into<String>, verdict: Outcome) -> Self {
        Certificate {
            claim: claim.into(),
            params: BTreeMap::new(),
            verdict,
            witness: None,
            value: None,
            checked: 0,
            exhaustive: true,
            seed: None,
            budget: None,
            generator: None,
            tool_version: TOOL_VERSION.to_string(),
            wall_time_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serialisable parameter"));
        self
    }

    /// Checks the schema invariants: a failure carries a witness and an
    /// unknown verdict records its budget.
    pub fn validate(&self) -> Result<()> {
        if self.claim.is_empty() {
            return Err(Error::Invariant("certificate has an empty claim".into()));
        }
        if self.verdict == Outcome::Fails && self.witness.is_none() {
            return Err(Error::Invariant(format!("`{}` fails without a witness", self.claim)));
        }
        if self.verdict == Outcome::Unknown && self.budget.is_none() {
            return Err(Error::Invariant(format!("`{}` is unknown without a recorded budget", self.claim)));
        }
        Ok(())
    }

    /// Canonical JSON text (sorted keys, compact, trailing newline).
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("certificate serialises");
        let mut s = serde_json::to_string(&v).expect("value serialises");
        s.push('\n');
        s
    }

    /// Canonical JSON without `wall_time_ms`: the reproducible part.
    pub fn body(&self) -> String {
        let mut v = serde_json::to_value(self).expect("certificate serialises");
        if let Value::Object(m) = &mut v {
            m.remove("wall_time_ms");
        }
        serde_json::to_string(&v).expect("value serialises")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let c: Certificate = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        c.validate()?;
        Ok(c)
    }

    /// Process exit code for the verdict.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
            Outcome::Unknown => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_valid() {
        let mut c = Certificate::new("demo", Outcome::Holds).param("z", 1).param("a", "x");
        c.wall_time_ms = 17;
        let text = c.to_canonical_json();
        assert!(text.starts_with("{\"budget\":null,\"checked\":0,\"claim\":\"demo\""));
        assert!(text.find("\"a\":\"x\"").unwrap() < text.find("\"z\":1").unwrap());
        assert_eq!(Certificate::parse(&text).unwrap(), c);
        assert!(!c.body().contains("wall_time_ms"));

        c.verdict = Outcome::Fails;
        assert!(c.validate().is_err());
        c.verdict = Outcome::Unknown;
        assert!(c.validate().is_err());
        c.budget = Some(100.into());
        assert!(c.validate().is_ok());
        assert_eq!(c.exit_code(), 2);
    }
}
