use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Result of one evaluation, as printed by every verb.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub op: String,
    pub inputs: BTreeMap<String, f64>,
    pub values: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterates: Option<Vec<(f64, f64)>>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn new(op: &str, inputs: &Params) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            op: op.to_owned(),
            inputs: inputs.0.clone(),
            values: BTreeMap::new(),
            residual: None,
            tolerance: None,
            passed: None,
            iterations: None,
            iterates: None,
            warnings: Vec::new(),
        }
    }

    pub fn value(mut self, name: &str, v: f64) -> Self {
        self.values.insert(name.to_owned(), v);
        self
    }

    pub fn warn<W: ToString>(mut self, warnings: impl IntoIterator<Item = W>) -> Self {
        self.warnings.extend(warnings.into_iter().map(|w| w.to_string()));
        self
    }

    /// Exit status for the process: checks fail with 1 when over tolerance.
    pub fn exit_code(&self) -> i32 {
        match self.passed {
            Some(false) => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports hold only finite numbers")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if self.values.len() == 1 && self.residual.is_none() {
            let v = self.values.values().next().unwrap();
            out.push_str(&format!("{}\n", fmt(*v)));
        } else {
            for (k, v) in &self.values {
                out.push_str(&format!("{k} = {}\n", fmt(*v)));
            }
        }
        if let Some(n) = self.iterations {
            out.push_str(&format!("iterations = {n}\n"));
        }
        if let Some(r) = self.residual {
            out.push_str(&format!("residual = {}\n", fmt(r)));
        }
        if let Some(t) = self.tolerance {
            out.push_str(&format!("tolerance = {}\n", fmt(t)));
        }
        if let Some(p) = self.passed {
            out.push_str(if p { "PASS\n" } else { "FAIL\n" });
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

/// Shortest round-trip text, in scientific notation for very small or large magnitudes.
pub fn fmt(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

/// Named numeric parameters of an evaluation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, v: f64) -> Self {
        self.0.insert(name.to_owned(), v);
        self
    }

    pub fn with_opt(self, name: &str, v: Option<f64>) -> Self {
        match v {
            Some(v) => self.with(name, v),
            None => self,
        }
    }

    pub fn set(&mut self, name: &str, v: f64) {
        self.0.insert(name.to_owned(), v);
    }

    pub fn get(&self, name: &str) -> Result<f64> {
        self.opt(name).ok_or_else(|| Error::domain(format!("missing parameter --{name}")))
    }

    pub fn opt(&self, name: &str) -> Option<f64> {
        self.0.get(name).copied()
    }

    pub fn has(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn count(&self, name: &str) -> Result<usize> {
        let v = self.get(name)?;
        if v < 0.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
            return Err(Error::domain(format!("--{name} must be a non-negative integer, got {v}")));
        }
        Ok(v as usize)
    }
}

/// Parses `name=value`.
pub fn parse_assignment(s: &str) -> Result<(String, f64)> {
    let (name, value) = s.split_once('=').ok_or_else(|| Error::domain(format!("expected name=value, got '{s}'")))?;
    let v: f64 = value.trim().parse().map_err(|_| Error::domain(format!("'{value}' is not a number in '{s}'")))?;
    Ok((name.trim().trim_start_matches("--").to_owned(), v))
}
