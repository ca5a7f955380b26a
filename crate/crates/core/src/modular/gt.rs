//! Group-theoreticity decisions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::PartialModularData;
use crate::error::{Error, Result};
use crate::fusionring::FusionRing;
use crate::numeric::poly::{divisors, factorize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GtVerdict {
    Gt,
    NotGt,
    Undecided,
}

impl fmt::Display for GtVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GtVerdict::Gt => "GT",
            GtVerdict::NotGt => "NOT-GT",
            GtVerdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtDecision {
    pub verdict: GtVerdict,
    /// The symmetric subcategory L with (L′)_ad ⊆ L, when one is found.
    pub witness: Option<Vec<usize>>,
    /// One line per examined candidate, or the reason for an early verdict.
    pub trail: Vec<String>,
}

impl PartialModularData {
    fn names(&self, set: &[usize]) -> String {
        let v: Vec<&str> = set.iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", v.join(", "))
    }

    /// Decides whether the modular category is group-theoretical by looking
    /// for a symmetric subcategory L with (L′)_ad ⊆ L. Non-integral data is
    /// rejected at once.
    pub fn is_group_theoretical_modular(&self) -> GtDecision {
        if let Some(x) = (0..self.rank()).find(|&x| !self.dims[x].is_integer()) {
            return GtDecision {
                verdict: GtVerdict::NotGt,
                witness: None,
                trail: vec![format!("not integral: dim({}) = {}", self.label(x), self.dims[x])],
            };
        }
        let enumeration = self.enumerate_symmetric_subcategories();
        let mut trail = Vec::new();
        let mut open = !enumeration.undecidable.is_empty();
        for l in &enumeration.symmetric {
            let cent = match self.centralizer_bounds(l) {
                Ok(c) => c,
                Err(e) => {
                    trail.push(format!("L = {}: {e}", self.names(l)));
                    open = true;
                    continue;
                }
            };
            let (adj_lower, _) = self.ring.adjoint_bounds(&cent.members);
            let (_, adj_upper) = self.ring.adjoint_bounds(&cent.upper());
            if adj_upper.iter().all(|x| l.contains(x)) {
                trail.push(format!(
                    "L = {}: L′ = {}, (L′)_ad = {} ⊆ L",
                    self.names(l),
                    self.names(&cent.upper()),
                    self.names(&adj_upper)
                ));
                return GtDecision { verdict: GtVerdict::Gt, witness: Some(l.clone()), trail };
            }
            if let Some(&y) = adj_lower.iter().find(|x| !l.contains(x)) {
                trail.push(format!(
                    "L = {}: (L′)_ad contains {} ∉ L",
                    self.names(l),
                    self.label(y)
                ));
            } else {
                open = true;
                trail.push(format!("L = {}: (L′)_ad ⊆ L not decidable from the known data", self.names(l)));
            }
        }
        for u in &enumeration.undecidable {
            trail.push(format!("candidate {} depends on unknown entries", self.names(u)));
        }
        let verdict = if open { GtVerdict::Undecided } else { GtVerdict::NotGt };
        GtDecision { verdict, witness: None, trail }
    }
}

/// Group-theoretical by dimension alone: an integral fusion category of
/// dimension p^n, pq or pqr. None means no decision.
pub fn group_theoretical_by_dimension(ring: &FusionRing) -> Result<Option<GtVerdict>> {
    if !ring.is_integral() {
        return Err(Error::Precondition("ring is not integral".into()));
    }
    let dim = ring
        .fp_dimension_category()
        .exact
        .and_then(|d| d.to_integer())
        .and_then(|d| d.to_u64())
        .ok_or_else(|| Error::Precondition("dimension is not a machine integer".into()))?;
    let f = factorize(dim);
    let squarefree = f.iter().all(|&(_, e)| e == 1);
    let gt = f.len() <= 1 || (squarefree && (f.len() == 2 || f.len() == 3));
    Ok(gt.then_some(GtVerdict::Gt))
}

/// Outcome of the dimension-count argument for integral modular data of
/// dimension p·q^e (e ∈ {2, 3}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqReport {
    pub dimension: u64,
    pub pointed: bool,
    pub allowed_simple_dims: Vec<u64>,
    pub invertibles: usize,
    /// Possible dim(C_pt) for a non-pointed category, each with the reason it
    /// is impossible (None if no contradiction was found).
    pub candidates: Vec<(u64, Option<String>)>,
    /// False when the data cannot belong to a modular category.
    pub consistent: bool,
    pub trail: Vec<String>,
}

impl PqReport {
    pub fn passed(&self) -> bool {
        self.pointed
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Checks that integral modular data of dimension p·q^e is pointed. For a
/// non-pointed instance the report rebuilds the counting argument that rules
/// out each possible size of the pointed part.
pub fn verify_pq_propositions(md: &PartialModularData, p: u64, q: u64, exponent: u32) -> Result<PqReport> {
    if !is_prime(p) || !is_prime(q) || p == q || !(2..=3).contains(&exponent) {
        return Err(Error::InvalidParameter("need distinct primes p, q and exponent 2 or 3".into()));
    }
    if !md.is_integral() {
        return Err(Error::Precondition("data is not integral".into()));
    }
    let dimension = p * q.pow(exponent);
    let total = md.global_dimension().to_integer().unwrap_or_else(BigInt::zero);
    if total != BigInt::from(dimension) {
        return Err(Error::Precondition(format!("dimension is {total}, not {dimension}")));
    }
    let dims: Vec<u64> = md.dims.iter().map(|d| d.to_integer().and_then(|x| x.to_u64()).unwrap_or(0)).collect();
    let invertibles = dims.iter().filter(|&&d| d == 1).count();
    let pointed = invertibles == dims.len();
    let allowed_simple_dims: Vec<u64> =
        divisors(dimension as u32).into_iter().map(u64::from).filter(|d| dimension % (d * d) == 0).collect();
    let mut trail = vec![format!(
        "simple dimensions must satisfy d² | {dimension}: {:?}",
        allowed_simple_dims
    )];
    let mut consistent = true;
    if let Some(d) = dims.iter().find(|d| !allowed_simple_dims.contains(d)) {
        consistent = false;
        trail.push(format!("a simple object of dimension {d} is impossible"));
    }
    let mut candidates = Vec::new();
    if !pointed {
        let q2 = q * q;
        for l in divisors(dimension as u32).into_iter().map(u64::from) {
            if l == dimension || (dimension - l) % q2 != 0 {
                continue;
            }
            let component = dimension / l;
            let reason = if is_prime(component) && l % component != 0 {
                Some(format!(
                    "dim((C_pt)′) = {component} is prime, so (C_pt)′ is pointed and lies in C_pt, but {component} ∤ {l}"
                ))
            } else if component < q2 {
                Some(format!("grading components of dimension {component} cannot hold an object of dimension {q}"))
            } else {
                let min_inv = component % q2;
                (min_inv > 1).then(|| {
                    format!(
                        "each of the {l} components of dimension {component} needs at least {min_inv} invertibles, {} in total",
                        l * min_inv
                    )
                })
            };
            trail.push(format!(
                "dim(C_pt) = {l}: {}",
                reason.as_deref().unwrap_or("no contradiction from counting")
            ));
            candidates.push((l, reason));
        }
        if candidates.iter().all(|(_, r)| r.is_some()) {
            consistent = false;
            trail.push("every size of the pointed part is impossible: the data is inconsistent with modularity".into());
        }
    } else {
        trail.push("all simple objects are invertible".into());
    }
    Ok(PqReport { dimension, pointed, allowed_simple_dims, invertibles, candidates, consistent, trail })
}
