use serde::Serialize;

use super::eval::evaluate;
use super::report::{Params, RunReport, SCHEMA_VERSION};
use crate::error::{finite, Error, Result};

const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub schema_version: u32,
    pub op: String,
    pub sweep: String,
    pub rows: Vec<RunReport>,
}

/// Sweep points `from, from + step, ...` up to `to` (inclusive within rounding).
pub fn sweep_points(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    finite("from", from)?;
    finite("to", to)?;
    finite("step", step)?;
    if step <= 0.0 {
        return Err(Error::domain(format!("--step must be positive, got {step}")));
    }
    if to < from {
        return Err(Error::domain(format!("--to must not be below --from, got {from} > {to}")));
    }
    let span = (to - from) / step;
    if span >= MAX_POINTS as f64 {
        return Err(Error::domain(format!("sweep would produce more than {MAX_POINTS} points")));
    }
    let count = (span + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| from + i as f64 * step).collect())
}

pub fn run_table(op: &str, sweep: &str, points: &[f64], fixed: &Params) -> Result<Table> {
    let rows = points
        .iter()
        .map(|&v| {
            let mut p = fixed.clone();
            p.set(sweep, v);
            evaluate(op, &p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { schema_version: SCHEMA_VERSION, op: op.to_owned(), sweep: sweep.to_owned(), rows })
}

impl Table {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables hold only finite numbers")
    }

    /// One row per sweep point: inputs, then values, then check columns if any.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let Some(first) = self.rows.first() else {
            return Ok(String::new());
        };
        let mut header: Vec<String> = first.inputs.keys().cloned().collect();
        header.extend(first.values.keys().cloned());
        let checked = first.residual.is_some();
        if checked {
            header.extend(["residual", "tolerance", "passed"].map(String::from));
        }
        if first.iterations.is_some() {
            header.push("iterations".into());
        }
        header.push("warnings".into());
        w.write_record(&header).map_err(csv_error)?;
        for row in &self.rows {
            let mut rec: Vec<String> = row.inputs.values().map(|v| v.to_string()).collect();
            rec.extend(row.values.values().map(|v| v.to_string()));
            if checked {
                rec.push(row.residual.map(|v| v.to_string()).unwrap_or_default());
                rec.push(row.tolerance.map(|v| v.to_string()).unwrap_or_default());
                rec.push(row.passed.map(|v| v.to_string()).unwrap_or_default());
            }
            if let Some(n) = row.iterations {
                rec.push(n.to_string());
            }
            rec.push(row.warnings.join(";"));
            w.write_record(&rec).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::domain(format!("csv output failed: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv of ascii fields is utf-8"))
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::domain(format!("csv output failed: {e}"))
}
