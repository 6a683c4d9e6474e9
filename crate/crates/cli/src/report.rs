use serde::Serialize;
use serde_json::{Map, Value};

/// The counted value: an exact integer (or rational) rendered as a decimal
/// string, or a residue modulo the report's modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Exact(String),
    Residue(u64),
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Instance {
    pub n: usize,
    pub m: usize,
    pub width: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub algorithm: String,
    pub result: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub elapsed_ms: Option<f64>,
    pub instance: Instance,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

impl RunReport {
    pub fn new(algorithm: &str, result: Outcome, modulus: Option<u64>, instance: Instance) -> Self {
        RunReport {
            command: Vec::new(),
            algorithm: algorithm.to_string(),
            result,
            modulus,
            elapsed_ms: None,
            instance,
            details: Map::new(),
        }
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}
