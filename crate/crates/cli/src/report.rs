//! Verification suites and the check report.

use std::time::Instant;

use fusionf_core::modular::{group_theoretical_by_dimension, BalancingOutcome};
use fusionf_core::{FusionRing, GtVerdict, PartialModularData};
use serde_json::{json, Map, Value};

use crate::family::Data;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Balancing,
    Verlinde,
    Grading,
    Symmetric,
    Gt,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "axioms" => Suite::Axioms,
            "balancing" => Suite::Balancing,
            "verlinde" => Suite::Verlinde,
            "grading" => Suite::Grading,
            "symmetric" => Suite::Symmetric,
            "gt" => Suite::Gt,
            "all" => Suite::All,
            _ => return Err(CliError::Usage(format!("unknown suite '{s}'"))),
        })
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Balancing => "balancing",
            Suite::Verlinde => "verlinde",
            Suite::Grading => "grading",
            Suite::Symmetric => "symmetric",
            Suite::Gt => "gt",
            Suite::All => "all",
        }
    }

    fn needs_modular(self) -> bool {
        matches!(self, Suite::Balancing | Suite::Verlinde | Suite::Symmetric)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided-insufficient-data",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub outcome: Option<String>,
    pub witness: Option<Value>,
}

impl Check {
    fn new(name: &'static str, status: Status, outcome: Option<String>, witness: Option<Value>) -> Self {
        Check { name, status, outcome, witness }
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("status".into(), json!(self.status.as_str()));
        if let Some(o) = &self.outcome {
            m.insert("outcome".into(), json!(o));
        }
        if let Some(w) = &self.witness {
            m.insert("witness".into(), w.clone());
        }
        Value::Object(m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub subject: String,
    pub kind: &'static str,
    pub summary: Value,
    pub checks: Vec<Check>,
    /// Milliseconds per check, in check order.
    pub timing: Vec<(&'static str, f64)>,
}

impl CheckReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn undecided(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Undecided)
    }

    /// The report without timing; stable across runs.
    pub fn to_json_deterministic(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "subject": self.subject,
            "kind": self.kind,
            "summary": self.summary,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "undecided": self.undecided(),
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.to_json_deterministic();
        let timing: Map<String, Value> = self.timing.iter().map(|(n, t)| (n.to_string(), json!(t))).collect();
        v["timing_ms"] = Value::Object(timing);
        v
    }
}

/// Renders a report value (as produced by [`CheckReport::to_json`]) as text.
pub fn render_text(v: &Value) -> String {
    let mut out = format!(
        "subject: {} ({})\n",
        v["subject"].as_str().unwrap_or("?"),
        v["kind"].as_str().unwrap_or("?")
    );
    if let Some(s) = v["summary"].as_object() {
        for (k, x) in s {
            out += &format!("  {k}: {}\n", compact(x));
        }
    }
    for c in v["checks"].as_array().into_iter().flatten() {
        out += &format!("  {:<10} {}", c["name"].as_str().unwrap_or("?"), c["status"].as_str().unwrap_or("?"));
        if let Some(o) = c.get("outcome") {
            out += &format!("  {}", compact(o));
        }
        out.push('\n');
        if let Some(w) = c.get("witness") {
            out += &format!("      {}\n", compact(w));
        }
    }
    if v["undecided"].as_bool() == Some(true) {
        out += "  note: some checks are undecided for lack of data\n";
    }
    out
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

pub fn check(subject: &str, data: &Data, suite: Suite, precision: u32) -> Result<CheckReport, CliError> {
    if suite.needs_modular() && matches!(data, Data::Ring(_)) {
        return Err(CliError::Usage(format!("suite '{}' needs modular data, {subject} is a fusion ring", suite.name())));
    }
    let suites: Vec<Suite> = match (suite, data) {
        (Suite::All, Data::Ring(_)) => vec![Suite::Axioms, Suite::Grading, Suite::Gt],
        (Suite::All, Data::Modular(_)) => {
            vec![Suite::Axioms, Suite::Balancing, Suite::Verlinde, Suite::Grading, Suite::Symmetric, Suite::Gt]
        }
        (s, _) => vec![s],
    };
    let mut checks = Vec::new();
    let mut timing = Vec::new();
    for s in suites {
        let start = Instant::now();
        let c = match data {
            Data::Ring(r) => ring_check(r, s),
            Data::Modular(m) => modular_check(m, s),
        };
        timing.push((c.name, start.elapsed().as_secs_f64() * 1000.0));
        checks.push(c);
    }
    Ok(CheckReport { subject: subject.to_string(), kind: data.kind(), summary: summary(data, precision), checks, timing })
}

fn summary(data: &Data, precision: u32) -> Value {
    let digits = precision * 3 / 10;
    let (labels, dim, encl) = match data {
        Data::Ring(r) => {
            let d = r.fp_dimension_category();
            let encl = match &d.exact {
                Some(x) => x.embed(precision).0,
                None => d.enclosure.clone(),
            };
            (r.labels().to_vec(), d.exact, encl)
        }
        Data::Modular(m) => {
            let d = m.global_dimension();
            let encl = d.embed(precision).0;
            (m.labels().to_vec(), Some(d), encl)
        }
    };
    let (lo, hi) = encl.to_decimal(digits);
    json!({
        "rank": labels.len(),
        "labels": labels,
        "dimension": dim.map(|d| d.to_string()),
        "dimension_enclosure": [lo, hi],
    })
}

fn names(labels: &[String], set: &[usize]) -> Value {
    json!(set.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>())
}

fn ring_check(r: &FusionRing, s: Suite) -> Check {
    match s {
        Suite::Axioms => axioms(r),
        Suite::Grading => grading(r),
        Suite::Gt => {
            if !r.is_integral() {
                return Check::new("gt", Status::Undecided, None, Some(json!("ring is not integral; the dimension criterion does not apply")));
            }
            match group_theoretical_by_dimension(r) {
                Ok(Some(v)) => Check::new("gt", Status::Pass, Some(v.to_string()), Some(json!("dimension is p^n, pq or pqr"))),
                Ok(None) => Check::new(
                    "gt",
                    Status::Undecided,
                    Some(GtVerdict::Undecided.to_string()),
                    Some(json!(format!(
                        "dimension {} is not decided by dimension alone and no braiding is given",
                        r.fp_dimension_category().exact.map_or("?".into(), |d| d.to_string())
                    ))),
                ),
                Err(e) => Check::new("gt", Status::Fail, None, Some(json!(e.to_string()))),
            }
        }
        _ => unreachable!("modular-only suites are rejected earlier"),
    }
}

fn axioms(r: &FusionRing) -> Check {
    let rep = r.validate();
    match rep.violations.first() {
        None => Check::new("axioms", Status::Pass, None, None),
        Some(_) => {
            let w: Vec<Value> =
                rep.violations.iter().map(|v| json!({"axiom": v.axiom.to_string(), "witness": v.witness})).collect();
            Check::new("axioms", Status::Fail, None, Some(Value::Array(w)))
        }
    }
}

fn grading(r: &FusionRing) -> Check {
    match r.universal_grading() {
        Ok(g) => {
            let comps: Vec<Value> = g.components.iter().map(|c| names(r.labels(), c)).collect();
            let outcome = Some(format!("{} components", g.components.len()));
            match g.equidimensional {
                Some(true) => Check::new("grading", Status::Pass, outcome, Some(Value::Array(comps))),
                Some(false) => {
                    let dims: Vec<Value> = g
                        .components
                        .iter()
                        .map(|c| json!(r.fp_dimension_of(c).map_or("?".into(), |d| d.to_string())))
                        .collect();
                    Check::new("grading", Status::Fail, outcome, Some(json!({"components": comps, "dimensions": dims})))
                }
                None => Check::new(
                    "grading",
                    Status::Undecided,
                    outcome,
                    Some(json!({"components": comps, "reason": "component dimensions are not exact and enclosures overlap"})),
                ),
            }
        }
        Err(e) => Check::new("grading", Status::Fail, None, Some(json!(e.to_string()))),
    }
}

fn first_unknown(m: &PartialModularData) -> Value {
    match m.ring().unknown_entries().first() {
        Some(&(a, b, c)) => json!(format!(
            "{} fusion multiplicities unknown, e.g. N_{{{},{}}}^{}",
            m.ring().unknown_entries().len(),
            m.label(a),
            m.label(b),
            m.label(c)
        )),
        None => Value::Null,
    }
}

fn modular_check(m: &PartialModularData, s: Suite) -> Check {
    let labels = m.labels();
    match s {
        Suite::Axioms => match m.fusion_ring() {
            Some(r) => axioms(&r),
            None => Check::new("axioms", Status::Undecided, None, Some(first_unknown(m))),
        },
        Suite::Grading => match m.fusion_ring() {
            Some(r) => grading(&r),
            None => Check::new("grading", Status::Undecided, None, Some(first_unknown(m))),
        },
        Suite::Balancing => {
            let rep = m.check_balancing();
            let pair = |a: usize, b: usize| format!("({}, {})", labels[a], labels[b]);
            let bad = rep.violations();
            if !bad.is_empty() {
                let w: Vec<Value> = bad
                    .iter()
                    .map(|(a, b, o)| match o {
                        BalancingOutcome::Violated(msg) => json!({"pair": pair(*a, *b), "violation": msg}),
                        _ => unreachable!(),
                    })
                    .collect();
                return Check::new("balancing", Status::Fail, None, Some(Value::Array(w)));
            }
            let outcome = Some(format!("{} of {} known entries verified", rep.verified(), rep.pairs.len()));
            if rep.fully_verified() {
                return Check::new("balancing", Status::Pass, outcome, None);
            }
            let open: Vec<Value> = rep
                .pairs
                .iter()
                .filter(|p| p.2 != BalancingOutcome::Verified)
                .map(|(a, b, o)| match o {
                    BalancingOutcome::Consistent { completions } => {
                        json!({"pair": pair(*a, *b), "unknown_fusion": true, "admissible_completions": completions})
                    }
                    BalancingOutcome::Unchecked(msg) => json!({"pair": pair(*a, *b), "exhausted": msg}),
                    _ => unreachable!(),
                })
                .collect();
            Check::new("balancing", Status::Undecided, outcome, Some(Value::Array(open)))
        }
        Suite::Verlinde => {
            if let Some(&(a, b)) = m.unknown_s_entries().first() {
                return Check::new(
                    "verlinde",
                    Status::Undecided,
                    None,
                    Some(json!({"missing_s_entry": [labels[a], labels[b]], "unknown_entries": m.unknown_s_entries().len()})),
                );
            }
            match m.verlinde_fusion() {
                Err(e) => Check::new("verlinde", Status::Fail, None, Some(json!(e.to_string()))),
                Ok(v) => {
                    let r = m.rank();
                    for a in 0..r {
                        for b in 0..r {
                            for c in 0..r {
                                if let Some(n) = m.ring().get(a, b, c) {
                                    if n != v.n(a, b, c) {
                                        return Check::new(
                                            "verlinde",
                                            Status::Fail,
                                            None,
                                            Some(json!(format!(
                                                "N_{{{},{}}}^{} is {n} but the Verlinde formula gives {}",
                                                labels[a],
                                                labels[b],
                                                labels[c],
                                                v.n(a, b, c)
                                            ))),
                                        );
                                    }
                                }
                            }
                        }
                    }
                    Check::new("verlinde", Status::Pass, Some("fusion rules reproduced".into()), None)
                }
            }
        }
        Suite::Symmetric => {
            let e = m.enumerate_symmetric_subcategories();
            let found: Vec<Value> = e.symmetric.iter().map(|s| names(labels, s)).collect();
            let outcome = Some(format!("{} symmetric subcategories", e.symmetric.len()));
            if e.undecidable.is_empty() {
                Check::new("symmetric", Status::Pass, outcome, Some(json!({"symmetric": found})))
            } else {
                let open: Vec<Value> = e.undecidable.iter().map(|s| names(labels, s)).collect();
                Check::new("symmetric", Status::Undecided, outcome, Some(json!({"symmetric": found, "undecidable": open})))
            }
        }
        Suite::Gt => {
            let d = m.is_group_theoretical_modular();
            let witness = match &d.witness {
                Some(l) => json!({"L": names(labels, l), "trail": d.trail}),
                None => json!({"trail": d.trail}),
            };
            let status = if d.verdict == GtVerdict::Undecided { Status::Undecided } else { Status::Pass };
            Check::new("gt", status, Some(d.verdict.to_string()), Some(witness))
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}
