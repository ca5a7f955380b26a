//! Fusion rings with simple objects of dimension 1 and 2 generated by a
//! self-dual two-dimensional object: identification with Rep(D_n) or
//! Rep(Z_k ⋊ Z_4) by walking the chain of powers of the generator.

mod enumerate;

use std::fmt;

use serde_json::{json, Value};

use crate::constructors::{dihedral_rep, semidirect_rep};
use crate::fusionring::{grothendieck_equivalent, FusionRing};
use crate::numeric::Cyclotomic;

pub use enumerate::{enumerate_rank_bounded, enumerate_rank_bounded_weakened, MAX_ENUMERATION_RANK};

/// Which hypotheses of the dimension-2 classification hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub dims_one_or_two: bool,
    pub all_self_dual: bool,
    /// A self-dual simple of dimension 2 whose powers contain every simple.
    pub generator: Option<usize>,
    pub commutative: bool,
    pub reasons: Vec<String>,
}

impl HypothesisReport {
    pub fn strict(&self) -> bool {
        self.dims_one_or_two && self.all_self_dual && self.generator.is_some() && self.commutative
    }

    /// Only the generator has to be self-dual.
    pub fn weakened(&self) -> bool {
        self.dims_one_or_two && self.generator.is_some() && self.commutative
    }
}

pub fn check_hypotheses(ring: &FusionRing) -> HypothesisReport {
    let mut reasons = Vec::new();
    let two = Cyclotomic::from_int(2);
    let dim = |a: usize| ring.fp_dimension(a).exact.clone();
    let bad_dim = (0..ring.rank()).find(|&a| !matches!(dim(a), Some(d) if d.is_one() || d == two));
    if let Some(a) = bad_dim {
        reasons.push(format!("FPdim({}) = {} is not 1 or 2", ring.label(a), ring.fp_dimension(a).to_f64()));
    }
    let not_self_dual: Vec<usize> = (0..ring.rank()).filter(|&a| !ring.is_self_dual(a)).collect();
    if let Some(&a) = not_self_dual.first() {
        reasons.push(format!("{} is not self-dual", ring.label(a)));
    }
    let generator = (0..ring.rank()).find(|&a| {
        ring.is_self_dual(a) && dim(a).as_ref() == Some(&two) && ring.closure(&[a]).len() == ring.rank()
    });
    if generator.is_none() {
        reasons.push("no self-dual two-dimensional simple generates the ring".into());
    }
    let commutative = ring.is_commutative();
    if !commutative {
        reasons.push("the ring is not commutative".into());
    }
    HypothesisReport {
        dims_one_or_two: bad_dim.is_none(),
        all_self_dual: not_self_dual.is_empty(),
        generator,
        commutative,
        reasons,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    DihedralType(usize),
    SemidirectType(usize),
    NotApplicable(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::DihedralType(n) => write!(f, "DihedralType({n})"),
            Outcome::SemidirectType(k) => write!(f, "SemidirectType({k})"),
            Outcome::NotApplicable(r) => write!(f, "NotApplicable({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub outcome: Outcome,
    /// bijection[i] is the index in the reference ring of basis element i.
    pub bijection: Option<Vec<usize>>,
    pub trace: Vec<String>,
}

impl ClassificationResult {
    fn not_applicable(reason: String, trace: Vec<String>) -> Self {
        ClassificationResult { outcome: Outcome::NotApplicable(reason), bijection: None, trace }
    }

    pub fn to_json(&self) -> Value {
        let (outcome, n) = match &self.outcome {
            Outcome::DihedralType(n) => ("DihedralType", Some(*n)),
            Outcome::SemidirectType(k) => ("SemidirectType", Some(*k)),
            Outcome::NotApplicable(_) => ("NotApplicable", None),
        };
        let mut v = json!({
            "outcome": outcome,
            "n_or_k": n,
            "bijection": self.bijection,
            "trace": self.trace,
        });
        if let Outcome::NotApplicable(r) = &self.outcome {
            v["reason"] = json!(r);
        }
        v
    }
}

enum Terminal {
    /// X₁⊗X_k = X_{k−1} ⊕ Z₃ ⊕ Z₄
    B { k: usize, z3: usize, z4: usize },
    /// X₁⊗X_k = X_{k−1} ⊕ X_k
    C { k: usize },
}

/// Removes `part` from the decomposition `whole`, failing if it is not
/// contained.
fn subtract(whole: &[(usize, u32)], part: &[(usize, u32)]) -> Option<Vec<(usize, u32)>> {
    let mut out: Vec<(usize, u32)> = whole.to_vec();
    for &(c, m) in part {
        let e = out.iter_mut().find(|e| e.0 == c)?;
        e.1 = e.1.checked_sub(m)?;
    }
    out.retain(|e| e.1 > 0);
    Some(out)
}

/// Identifies the ring with Rep(D_n) or Rep(Z_k ⋊ Z_4) and returns the
/// basis bijection to the reference ring.
pub fn classify(ring: &FusionRing) -> ClassificationResult {
    let hyp = check_hypotheses(ring);
    let mut trace = Vec::new();
    if !hyp.weakened() {
        return ClassificationResult::not_applicable(hyp.reasons.join("; "), trace);
    }
    let x1 = hyp.generator.expect("weakened hypotheses include a generator");
    let one = Cyclotomic::one();
    let is_inv = |a: usize| ring.fp_dimension(a).exact.as_ref() == Some(&one);
    let label = |a: usize| ring.label(a).to_string();
    trace.push(format!("generator X1 = {}", label(x1)));

    let square = subtract(ring.product(x1, x1), &[(0, 1)]);
    let Some(square) = square else {
        return ClassificationResult::not_applicable("X1 ⊗ X1 does not contain the unit".into(), trace);
    };
    let invs: Vec<usize> = square.iter().filter(|e| is_inv(e.0)).map(|e| e.0).collect();
    let twos: Vec<(usize, u32)> = square.iter().copied().filter(|e| !is_inv(e.0)).collect();
    let mut chain = vec![x1];
    let terminal = match (invs.as_slice(), twos.as_slice()) {
        (&[a, b, c], []) => {
            trace.push(format!("X1 ⊗ X1 = 1 + {} + {} + {}: case (b) with k = 1", label(a), label(b), label(c)));
            let (z3, z4) = [(a, b), (a, c), (b, c)].into_iter().find(|&(x, y)| ring.dual(x) == y).unwrap_or((b, c));
            Terminal::B { k: 1, z3, z4 }
        }
        (&[z], &[(w, 1)]) if w == x1 => {
            trace.push(format!("X1 ⊗ X1 = 1 + {} + X1: case (c) with k = 1", label(z)));
            Terminal::C { k: 1 }
        }
        (&[z], &[(w, 1)]) => {
            chain.push(w);
            trace.push(format!("X1 ⊗ X1 = 1 + {} + {}: case (a), X2 = {}", label(z), label(w), label(w)));
            match walk(ring, &mut chain, &mut trace, &is_inv, z) {
                Ok(t) => t,
                Err(reason) => return ClassificationResult::not_applicable(reason, trace),
            }
        }
        _ => {
            return ClassificationResult::not_applicable(
                format!("X1 ⊗ X1 = {} matches none of the cases", ring.product_string(x1, x1)),
                trace,
            )
        }
    };

    let dim = ring.fp_dimension_category().exact;
    let (outcome, reference) = match terminal {
        Terminal::B { k, z3, z4 } => {
            let expected = 4 * k as i64 + 4;
            trace.push(format!("case (b): FPdim = {} (4k+4 = {expected})", fmt_dim(&dim)));
            if ring.dual(z3) == z4 && z3 != z4 {
                trace.push(format!("{}* = {}: reference Rep(Z_{} ⋊ Z_4)", label(z3), label(z4), k + 1));
                if (k + 1) % 2 == 0 {
                    return ClassificationResult::not_applicable(
                        format!("Z_{} ⋊ Z_4 reference needs an odd order", k + 1),
                        trace,
                    );
                }
                (Outcome::SemidirectType(k + 1), semidirect_rep(k + 1))
            } else {
                (Outcome::DihedralType(2 * k + 2), dihedral_rep(2 * k + 2))
            }
        }
        Terminal::C { k } => {
            let expected = 4 * k as i64 + 2;
            trace.push(format!("case (c): FPdim = {} (4k+2 = {expected})", fmt_dim(&dim)));
            (Outcome::DihedralType(2 * k + 1), dihedral_rep(2 * k + 1))
        }
    };
    let reference = match reference {
        Ok(r) => r,
        Err(e) => return ClassificationResult::not_applicable(e.to_string(), trace),
    };
    match grothendieck_equivalent(ring, &reference) {
        Ok(Some(bijection)) => {
            trace.push(format!("verified: basis bijection onto the reference ring of rank {}", reference.rank()));
            ClassificationResult { outcome, bijection: Some(bijection), trace }
        }
        Ok(None) => ClassificationResult::not_applicable(
            format!("chain matches {outcome} but no basis bijection to the reference exists"),
            trace,
        ),
        Err(e) => ClassificationResult::not_applicable(e.to_string(), trace),
    }
}

fn fmt_dim(d: &Option<Cyclotomic>) -> String {
    d.as_ref().map_or("?".into(), |d| d.to_string())
}

/// Follows X₁⊗X_i = X_{i−1} ⊕ X_{i+1} until a terminal case; `chain` holds
/// X₁, X₂ on entry.
fn walk(
    ring: &FusionRing,
    chain: &mut Vec<usize>,
    trace: &mut Vec<String>,
    is_inv: &dyn Fn(usize) -> bool,
    z2: usize,
) -> Result<Terminal, String> {
    let x1 = chain[0];
    let label = |a: usize| ring.label(a).to_string();
    loop {
        let i = chain.len();
        let (prev, cur) = (chain[i - 2], chain[i - 1]);
        let rest = subtract(ring.product(x1, cur), &[(prev, 1)]).ok_or_else(|| {
            format!("X1 ⊗ X{i} = {} does not contain X{}", ring.product_string(x1, cur), i - 1)
        })?;
        match rest.as_slice() {
            &[(w, 1)] if w == cur => {
                trace.push(format!("X1 ⊗ X{i} = X{} + X{i}: case (c) with k = {i}", i - 1));
                return Ok(Terminal::C { k: i });
            }
            &[(w, 1)] if !is_inv(w) && !chain.contains(&w) => {
                trace.push(format!("X1 ⊗ X{i} = X{} + {}: case (a), X{} = {}", i - 1, label(w), i + 1, label(w)));
                chain.push(w);
            }
            &[(a, 1), (b, 1)] if is_inv(a) && is_inv(b) && a != 0 && b != 0 && a != z2 && b != z2 => {
                trace.push(format!("X1 ⊗ X{i} = X{} + {} + {}: case (b) with k = {i}", i - 1, label(a), label(b)));
                return Ok(Terminal::B { k: i, z3: a, z4: b });
            }
            _ => {
                return Err(format!(
                    "chain anomaly: X1 ⊗ X{i} = {} has no admissible form",
                    ring.product_string(x1, cur)
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{b_ring, d_even_part};

    #[test]
    fn hypotheses() {
        assert!(check_hypotheses(&dihedral_rep(7).unwrap()).strict());
        let b4 = check_hypotheses(&b_ring(4).unwrap());
        assert!(!b4.dims_one_or_two);
        let s5 = check_hypotheses(&semidirect_rep(5).unwrap());
        assert!(s5.weakened() && !s5.strict());
    }

    #[test]
    fn dihedral_chain() {
        let r = classify(&dihedral_rep(6).unwrap());
        assert_eq!(r.outcome, Outcome::DihedralType(6));
        assert!(r.trace.iter().any(|l| l.contains("case (b) with k = 2")));
        assert_eq!(classify(&dihedral_rep(4).unwrap()).outcome, Outcome::DihedralType(4));
        assert_eq!(classify(&dihedral_rep(3).unwrap()).outcome, Outcome::DihedralType(3));
        for n in 3..=16 {
            assert_eq!(classify(&dihedral_rep(n).unwrap()).outcome, Outcome::DihedralType(n));
        }
    }

    #[test]
    fn semidirect_chain() {
        for k in [3, 5, 7, 9, 11] {
            assert_eq!(classify(&semidirect_rep(k).unwrap()).outcome, Outcome::SemidirectType(k));
        }
        assert_eq!(classify(&d_even_part(5).unwrap()).outcome, Outcome::SemidirectType(5));
    }

    #[test]
    fn not_applicable() {
        let r = classify(&b_ring(4).unwrap());
        assert!(matches!(r.outcome, Outcome::NotApplicable(_)));
        assert!(r.bijection.is_none());
        let json = r.to_json();
        assert_eq!(json["outcome"], "NotApplicable");
    }
}
