//! JSON form:
//! {"ring": <ring or null>, "conductor": N, "dims": [...], "twists": [...],
//!  "s": [[i, j, value], ...]} with i ≤ j. A value is a cyclotomic, null for
//! an unknown entry, or {"abs": [num, den]} for an unknown entry of known
//! modulus. The ring uses the partial fusion ring form; a null ring stands
//! for fusion rules that are entirely unknown, with generated labels and all
//! objects self-dual.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{PartialModularData, SEntry};
use crate::error::{Error, Result};
use crate::fusionring::PartialFusionRing;
use crate::numeric::Cyclotomic;

fn malformed(path: &str, what: &str) -> Error {
    Error::Malformed(format!("{path}: {what}"))
}

fn cyclo_list(v: Option<&Value>, path: &str) -> Result<Vec<Cyclotomic>> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| malformed(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| Cyclotomic::from_json(x).map_err(|e| malformed(&format!("{path}[{i}]"), &e.to_string())))
        .collect()
}

fn int_of(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl PartialModularData {
    pub fn to_json(&self) -> Value {
        let r = self.rank();
        let mut s = Vec::new();
        for i in 0..r {
            for j in i..r {
                let v = match &self.s[i][j] {
                    SEntry::Known(x) => x.to_json(),
                    SEntry::Unknown => Value::Null,
                    SEntry::UnknownModulus(m) => json!({ "abs": [m.numer().to_string(), m.denom().to_string()] }),
                };
                s.push(json!([i, j, v]));
            }
        }
        json!({
            "ring": self.ring.to_json(),
            "conductor": self.conductor,
            "dims": self.dims.iter().map(Cyclotomic::to_json).collect::<Vec<_>>(),
            "twists": self.twists.iter().map(Cyclotomic::to_json).collect::<Vec<_>>(),
            "s": s,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dims = cyclo_list(v.get("dims"), "$.dims")?;
        let twists = cyclo_list(v.get("twists"), "$.twists")?;
        let r = dims.len();
        let ring = match v.get("ring") {
            Some(rv) if !rv.is_null() => {
                PartialFusionRing::from_json(rv).map_err(|e| malformed("$.ring", &e.to_string()))?
            }
            _ => {
                let labels = (0..r).map(|i| format!("X{i}")).collect();
                PartialFusionRing::unknown(labels, (0..r).collect())?
            }
        };
        if ring.rank() != r {
            return Err(malformed("$.ring", "rank differs from the number of dimensions"));
        }
        let mut s = vec![vec![SEntry::Unknown; r]; r];
        let mut seen = vec![vec![false; r]; r];
        let entries = v.get("s").and_then(Value::as_array).ok_or_else(|| malformed("$.s", "expected an array"))?;
        for (k, e) in entries.iter().enumerate() {
            let path = format!("$.s[{k}]");
            let t = e.as_array().filter(|t| t.len() == 3).ok_or_else(|| malformed(&path, "expected [i, j, value]"))?;
            let idx = |x: &Value| x.as_u64().map(|x| x as usize).filter(|&x| x < r);
            let (Some(i), Some(j)) = (idx(&t[0]), idx(&t[1])) else {
                return Err(malformed(&path, "index out of range"));
            };
            if seen[i][j] {
                return Err(malformed(&path, "entry given twice"));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            let value = match &t[2] {
                Value::Null => SEntry::Unknown,
                Value::Object(o) if o.contains_key("abs") => {
                    let pair = o["abs"].as_array().filter(|p| p.len() == 2);
                    let (n, d) = pair
                        .and_then(|p| Some((int_of(&p[0])?, int_of(&p[1])?)))
                        .filter(|(_, d)| *d > BigInt::from(0))
                        .ok_or_else(|| malformed(&path, "expected {\"abs\": [num, den]}"))?;
                    SEntry::UnknownModulus(BigRational::new(n, d))
                }
                x => SEntry::Known(Cyclotomic::from_json(x).map_err(|e| malformed(&path, &e.to_string()))?),
            };
            s[i][j] = value.clone();
            s[j][i] = value;
        }
        let md = PartialModularData::new(ring, dims, twists, s)?;
        if let Some(n) = v.get("conductor") {
            if n.as_u64() != Some(md.conductor as u64) {
                return Err(malformed("$.conductor", &format!("expected {}", md.conductor)));
            }
        }
        Ok(md)
    }
}
