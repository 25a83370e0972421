//! JSON and TSV documents read and written by the command-line tool.
//!
//! Arrangement, tope-set, cycle, decomposition, f-vector and census
//! documents are the serde forms of the library types; this module holds
//! the few documents that only exist at the tool boundary.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complexes::LongFVector;
use crate::oracles::Census;
use crate::sign::ElementSet;

/// Reads and parses a JSON document, labelling errors with the path.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Output of `fvector`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVectorDocument {
    pub t: usize,
    pub f: Vec<u64>,
    pub tope: String,
    pub method: String,
    pub decomposition_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<ElementSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coincide: Option<bool>,
}

impl FVectorDocument {
    pub fn long_f_vector(&self) -> Option<LongFVector> {
        LongFVector::new(self.t, self.f.clone()).ok()
    }
}

/// Either a bare `{"t", "f"}` document or an `fvector` output.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum FVectorInput {
    Full(FVectorDocument),
    Bare(LongFVector),
}

impl FVectorInput {
    pub fn into_f_vector(self) -> Result<LongFVector, String> {
        match self {
            FVectorInput::Bare(f) => Ok(f),
            FVectorInput::Full(doc) => doc
                .long_f_vector()
                .ok_or_else(|| format!("f-vector length {} does not match t = {}", doc.f.len(), doc.t)),
        }
    }
}

/// `j <TAB> f_j` rows under a header.
pub fn f_vector_tsv(f: &LongFVector) -> String {
    let mut out = String::from("j\tf\n");
    for (j, v) in f.f.iter().enumerate() {
        let _ = writeln!(out, "{j}\t{v}");
    }
    out
}

/// `j, count, expected, match` rows; `expected` and `match` are filled in
/// only when an expected histogram is supplied.
pub fn census_tsv(census: &Census, expected: Option<&std::collections::BTreeMap<usize, u64>>) -> String {
    let mut out = String::from("j\tcount\texpected\tmatch\n");
    let mut keys: Vec<usize> = census.histogram.keys().copied().collect();
    if let Some(exp) = expected {
        keys.extend(exp.keys().copied());
    }
    keys.sort_unstable();
    keys.dedup();
    for j in keys {
        let count = census.histogram.get(&j).copied().unwrap_or(0);
        match expected {
            Some(exp) => {
                let e = exp.get(&j).copied().unwrap_or(0);
                let _ = writeln!(out, "{j}\t{count}\t{e}\t{}", count == e);
            }
            None => {
                let _ = writeln!(out, "{j}\t{count}\t\t");
            }
        }
    }
    out
}
