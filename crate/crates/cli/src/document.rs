//! The `--problem` JSON document for EIDS computations.
//!
//! ```json
//! {"q": 9, "n": 3, "k": 0, "t": 2,
//!  "strata": [{"i": 1, "chi_stab": 1}, {"i": 2, "m_top": 0, "eu0": 3}]}
//! ```
//!
//! Unknown fields are rejected. `schema_version` is optional; when present it
//! must be [`SCHEMA_VERSION`].

use detvar::{EidsProblem, StratumInvariants};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::json_int;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<String>,
    pub q: u32,
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub strata: Vec<StratumEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumEntry {
    pub i: u32,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "json_int::opt")]
    pub chi_stab: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "json_int::opt")]
    pub m_top: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "json_int::opt")]
    pub eu0: Option<BigInt>,
}

#[derive(Debug)]
pub struct SchemaError(pub String);

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let doc: ProblemDocument =
            serde_json::from_str(text).map_err(|e| SchemaError(e.to_string()))?;
        if let Some(v) = &doc.schema_version {
            if v != SCHEMA_VERSION {
                return Err(SchemaError(format!(
                    "unsupported schema_version {v:?}, expected {SCHEMA_VERSION:?}"
                )));
            }
        }
        Ok(doc)
    }

    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_problem(&self) -> EidsProblem {
        EidsProblem {
            q: self.q,
            n: self.n,
            k: self.k,
            t: self.t,
            strata: self
                .strata
                .iter()
                .map(|e| StratumInvariants {
                    i: e.i,
                    chi_stab: e.chi_stab.clone(),
                    m_top: e.m_top.clone(),
                    eu0: e.eu0.clone(),
                })
                .collect(),
        }
    }
}
