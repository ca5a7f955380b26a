//! Family specifications: B:r, D:r, TY:A, DTYPLUS:A[/gram@M], SL2:l, SU3,
//! DIH:n, SEMI:k, POINTED:A[/Q@M], and the even parts BEVEN:r, DEVEN:r.

use std::path::Path;

use fusionf_core::constructors::{
    b_even_part, build_b, build_d, build_pointed_modular, d_even_part, dihedral_rep, dty_plus_ring, semidirect_rep,
    sl2_ring, su3_example, ty_ring, AbelianGroup, BilinearForm, QuadraticForm,
};
use fusionf_core::{FusionRing, PartialModularData};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug)]
pub enum Data {
    Ring(FusionRing),
    Modular(PartialModularData),
}

impl Data {
    pub fn to_json(&self) -> Value {
        match self {
            Data::Ring(r) => r.to_json(),
            Data::Modular(m) => m.to_json(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Data::Ring(_) => "fusionring",
            Data::Modular(_) => "modular",
        }
    }

    /// Tells a modular file ("dims") from a fusion ring file ("tensor").
    pub fn from_json(v: &Value) -> Result<Self, CliError> {
        let schema = |e: fusionf_core::Error| CliError::Schema(e.to_string());
        if !v.is_object() {
            return Err(CliError::Schema("$: expected an object".into()));
        }
        if v.get("dims").is_some() {
            Ok(Data::Modular(PartialModularData::from_json(v).map_err(schema)?))
        } else if v.get("labels").is_some() {
            Ok(Data::Ring(FusionRing::from_json(v).map_err(schema)?))
        } else {
            Err(CliError::Schema("$: neither a modular datum (\"dims\") nor a fusion ring (\"labels\")".into()))
        }
    }
}

fn usage(token: &str, what: &str) -> CliError {
    CliError::Usage(format!("bad family spec at '{token}': {what}"))
}

fn number(token: &str, arg: &str) -> Result<usize, CliError> {
    arg.parse().map_err(|_| usage(token, "expected a positive integer"))
}

fn group(token: &str, arg: &str) -> Result<AbelianGroup, CliError> {
    AbelianGroup::parse(arg).map_err(|e| usage(token, &e.to_string()))
}

pub fn build(spec: &str) -> Result<Data, CliError> {
    let spec = spec.trim();
    let (head, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let core = |e: fusionf_core::Error| usage(spec, &e.to_string());
    let ring = |r: fusionf_core::Result<FusionRing>| r.map(Data::Ring).map_err(core);
    let modular = |m: fusionf_core::Result<PartialModularData>| m.map(Data::Modular).map_err(core);
    match head.to_ascii_uppercase().as_str() {
        "B" => modular(build_b(number(spec, arg)?, 1)),
        "D" => modular(build_d(number(spec, arg)?)),
        "BEVEN" => ring(b_even_part(number(spec, arg)?)),
        "DEVEN" => ring(d_even_part(number(spec, arg)?)),
        "TY" => ring(ty_ring(&group(spec, arg)?)),
        "DTYPLUS" => {
            let (g, form) = arg.split_once('/').map_or((arg, None), |(g, f)| (g, Some(f)));
            let g = group(spec, g)?;
            let form = match form {
                Some(f) => BilinearForm::parse(g, f),
                None => BilinearForm::diagonal(g),
            }
            .map_err(core)?;
            ring(dty_plus_ring(&form))
        }
        "SL2" => ring(sl2_ring(number(spec, arg)?)),
        "SU3" if arg.is_empty() => modular(su3_example()),
        "DIH" => ring(dihedral_rep(number(spec, arg)?)),
        "SEMI" => ring(semidirect_rep(number(spec, arg)?)),
        "POINTED" => {
            let (g, q) = arg.split_once('/').map_or((arg, None), |(g, q)| (g, Some(q)));
            let g = group(spec, g)?;
            let q = match q {
                Some(q) => QuadraticForm::parse(g, q),
                None => QuadraticForm::default_for(g),
            }
            .map_err(core)?;
            modular(build_pointed_modular(&q))
        }
        _ => Err(usage(head, "unknown family")),
    }
}

/// A path to a JSON file if one exists, otherwise a family spec.
pub fn load(input: &str) -> Result<Data, CliError> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{input}: {e}")))?;
        Data::from_json(&v)
    } else {
        build(input)
    }
}
