//! JSON form: {"labels": [...], "dual": [...], "tensor": [[a,b,c,m], ...]}.
//!
//! Partially known rings add "unknown": [[a,b,c], ...]; entries that are
//! neither listed in "tensor" nor in "unknown" are zero.

use serde_json::{json, Value};

use super::{FusionRing, PartialFusionRing};
use crate::error::{Error, Result};

fn malformed(path: &str, what: &str) -> Error {
    Error::Malformed(format!("{path}: {what}"))
}

fn index_list(v: &Value, path: &str, len: usize) -> Result<Vec<usize>> {
    let arr = v.as_array().ok_or_else(|| malformed(path, "expected an array"))?;
    if arr.len() != len {
        return Err(malformed(path, &format!("expected {len} entries, found {}", arr.len())));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_u64()
                .map(|k| k as usize)
                .ok_or_else(|| malformed(&format!("{path}[{i}]"), "expected a nonnegative integer"))
        })
        .collect()
}

fn tuples(v: Option<&Value>, path: &str, width: usize, rank: usize) -> Result<Vec<Vec<u64>>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    let arr = v.as_array().ok_or_else(|| malformed(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, t)| {
            let p = format!("{path}[{i}]");
            let t = t
                .as_array()
                .filter(|t| t.len() == width)
                .ok_or_else(|| malformed(&p, &format!("expected {width} integers")))?;
            let vals: Vec<u64> = t
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| malformed(&p, "expected nonnegative integers")))
                .collect::<Result<_>>()?;
            if vals.iter().take(3).any(|&x| x as usize >= rank) {
                return Err(malformed(&p, "index out of range"));
            }
            Ok(vals)
        })
        .collect()
}

fn header(v: &Value) -> Result<(Vec<String>, Vec<usize>)> {
    let labels: Vec<String> = v
        .get("labels")
        .and_then(|l| l.as_array())
        .ok_or_else(|| malformed("$.labels", "missing"))?
        .iter()
        .enumerate()
        .map(|(i, l)| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| malformed(&format!("$.labels[{i}]"), "expected a string"))
        })
        .collect::<Result<_>>()?;
    let dual = index_list(v.get("dual").ok_or_else(|| malformed("$.dual", "missing"))?, "$.dual", labels.len())?;
    Ok((labels, dual))
}

impl FusionRing {
    pub fn to_json(&self) -> Value {
        let tensor: Vec<Value> = self.entries().map(|(a, b, c, m)| json!([a, b, c, m])).collect();
        json!({ "labels": self.labels, "dual": self.dual, "tensor": tensor })
    }

    /// Reads and re-validates a ring.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (labels, dual) = header(v)?;
        if v.get("unknown").is_some_and(|u| u.as_array().is_some_and(|a| !a.is_empty())) {
            return Err(malformed("$.unknown", "ring has unknown entries"));
        }
        let rank = labels.len();
        let entries = tuples(v.get("tensor"), "$.tensor", 4, rank)?
            .into_iter()
            .map(|t| (t[0] as usize, t[1] as usize, t[2] as usize, t[3] as u32));
        let ring = FusionRing::from_entries(labels, dual, entries)?;
        let report = ring.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::Malformed(format!("ring fails the {} axiom: {}", v.axiom, v.witness)));
        }
        Ok(ring)
    }
}

impl PartialFusionRing {
    pub fn to_json(&self) -> Value {
        let r = self.rank();
        let mut tensor = Vec::new();
        let mut unknown = Vec::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    match self.get(a, b, c) {
                        Some(0) => {}
                        Some(m) => tensor.push(json!([a, b, c, m])),
                        None => unknown.push(json!([a, b, c])),
                    }
                }
            }
        }
        let mut out = json!({ "labels": self.labels(), "dual": self.duals(), "tensor": tensor });
        if !unknown.is_empty() {
            out["unknown"] = Value::Array(unknown);
        }
        out
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (labels, dual) = header(v)?;
        let rank = labels.len();
        let mut p = PartialFusionRing::unknown(labels, dual)?;
        let mut unknown = vec![false; rank * rank * rank];
        for t in tuples(v.get("unknown"), "$.unknown", 3, rank)? {
            unknown[((t[0] as usize) * rank + t[1] as usize) * rank + t[2] as usize] = true;
        }
        let mut known = vec![0u32; rank * rank * rank];
        for t in tuples(v.get("tensor"), "$.tensor", 4, rank)? {
            known[((t[0] as usize) * rank + t[1] as usize) * rank + t[2] as usize] = t[3] as u32;
        }
        for i in 0..rank * rank * rank {
            if !unknown[i] {
                p.set(i / (rank * rank), (i / rank) % rank, i % rank, known[i])?;
            }
        }
        Ok(p)
    }
}
