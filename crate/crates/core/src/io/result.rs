//! The JSON result document written by the command-line tool.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::homology::HomologyResult;
use crate::relations::FiniteSpace;
use crate::semiuniform::AxiomVerdict;

pub const SCHEMA_VERSION: &str = "1";

/// Nonzero torsion in one dimension, as decimal strings when a factor
/// does not fit in 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionEntry {
    pub dim: usize,
    pub factors: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTerm {
    pub simplex: Vec<String>,
    /// A reduced fraction such as `1` or `-1/2`.
    pub coefficient: String,
}

/// Field order is fixed by declaration order, so identical results
/// serialize to identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub tool: String,
    pub version: String,
    pub command: String,
    /// The request as parsed, keyed by option name.
    pub request: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<String>,
    #[serde(default)]
    pub betti: Vec<usize>,
    #[serde(default)]
    pub torsion: Vec<TorsionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated_from: Option<usize>,
    /// Per dimension, a list of cycles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<GeneratorTerm>>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<AxiomVerdict>,
    /// Command-specific extras.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl ResultDocument {
    pub fn new(command: &str) -> Self {
        Self {
            schema: SCHEMA_VERSION.into(),
            tool: "vrhom".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            request: BTreeMap::new(),
            coefficients: None,
            betti: Vec::new(),
            torsion: Vec::new(),
            truncated_from: None,
            generators: None,
            verdicts: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    /// Fills in the groups of dimensions `0..dims`.
    pub fn with_homology(mut self, h: &HomologyResult, space: &FiniteSpace, dims: usize) -> Self {
        let groups = &h.groups[..dims.min(h.groups.len())];
        self.coefficients = Some(h.coefficients.to_string());
        self.betti = groups.iter().map(|g| g.betti).collect();
        self.torsion = groups
            .iter()
            .filter(|g| !g.torsion.is_empty())
            .map(|g| TorsionEntry { dim: g.dim, factors: g.torsion.iter().map(integer_value).collect() })
            .collect();
        self.truncated_from = h.truncated_from.filter(|&t| t < dims);
        if groups.iter().any(|g| g.generators.is_some()) {
            self.generators = Some(
                groups
                    .iter()
                    .map(|g| {
                        g.generators
                            .iter()
                            .flatten()
                            .map(|cycle| {
                                cycle
                                    .iter()
                                    .map(|(s, c)| GeneratorTerm {
                                        simplex: s.vertices().iter().map(|&v| space.label(v).to_owned()).collect(),
                                        coefficient: c.to_string(),
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result documents serialize");
        s.push('\n');
        s
    }
}

fn integer_value(n: &BigInt) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

pub fn parse_result_document(text: &str) -> Result<ResultDocument, serde_json::Error> {
    serde_json::from_str(text)
}
