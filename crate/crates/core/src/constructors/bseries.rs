//! so(2r+1) at level 2: ℓ = 4r+2, q = e^{πi/ℓ}.

use num_rational::Rational64;
use num_traits::Zero;

use super::weights::{half, ones, qdim_from_weight, twist_from_weight, Weight, WeightData};
use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::modular::{PartialModularData, SEntry};
use crate::numeric::{Cyclotomic, RootOfUnity};

/// Labels 0, V = 2λ₁, γ¹..γ^r, ε = λ_r, ε′ = λ₁+λ_r.
pub fn b_labels(r: usize) -> Vec<String> {
    let mut l = vec!["0".to_string(), "V".to_string()];
    l.extend((1..=r).map(|j| format!("γ{j}")));
    l.push("ε".into());
    l.push("ε′".into());
    l
}

fn b_weights(r: usize) -> Vec<Weight> {
    let mut w = vec![vec![Rational64::zero(); r]];
    let mut v = vec![Rational64::zero(); r];
    v[0] = Rational64::from_integer(2);
    w.push(v);
    for j in 1..=r {
        w.push(ones(r, j));
    }
    let eps = vec![half(1); r];
    let mut eps2 = eps.clone();
    eps2[0] = half(3);
    w.push(eps);
    w.push(eps2);
    w
}

/// Decomposition of γ^i ⊗ γ^j among the even objects (indices as in
/// [`b_labels`]).
fn gamma_product(r: usize, i: usize, j: usize) -> Vec<(usize, u32)> {
    let n = 2 * r + 1;
    let fold = |m: usize| -> Vec<(usize, u32)> {
        if m == 0 {
            vec![(0, 1), (1, 1)]
        } else {
            vec![(1 + m.min(n - m), 1)]
        }
    };
    let mut out = fold(i + j);
    out.extend(fold(i.abs_diff(j)));
    out
}

/// The full fusion ring of rank r+4.
pub fn b_ring(r: usize) -> Result<FusionRing> {
    if r < 2 {
        return Err(Error::InvalidParameter("B series needs r ≥ 2".into()));
    }
    let (v, eps, eps2) = (1, r + 2, r + 3);
    let gammas: Vec<(usize, u32)> = (2..2 + r).map(|g| (g, 1)).collect();
    let is_gamma = |x: usize| (2..2 + r).contains(&x);
    let rule = |a: usize, b: usize| -> Vec<(usize, u32)> {
        let (a, b) = (a.min(b), a.max(b));
        match (a, b) {
            (0, x) => vec![(x, 1)],
            (1, 1) => vec![(0, 1)],
            (1, x) if is_gamma(x) => vec![(x, 1)],
            (1, x) if x == eps => vec![(eps2, 1)],
            (1, _) => vec![(eps, 1)],
            (x, y) if is_gamma(x) && is_gamma(y) => gamma_product(r, x - 1, y - 1),
            (x, _) if is_gamma(x) => vec![(eps, 1), (eps2, 1)],
            (x, y) if x == y => {
                let mut o = vec![(0, 1)];
                o.extend(gammas.iter().copied());
                o
            }
            _ => {
                let mut o = vec![(v, 1)];
                o.extend(gammas.iter().copied());
                o
            }
        }
    };
    FusionRing::from_rule(b_labels(r), (0..r + 4).collect(), rule)
}

/// The subring spanned by the objects of dimension 1 and 2.
pub fn b_even_part(r: usize) -> Result<FusionRing> {
    b_ring(r)?.restrict(&(0..r + 2).collect::<Vec<_>>())
}

/// Dimensions, twists and the listed S-entries; s̃(ε,ε) = sign·√(2r+1),
/// s̃(ε,ε′) = −s̃(ε,ε), and s̃(ε′,ε′) is left unknown.
pub fn build_b(r: usize, sign: i8) -> Result<PartialModularData> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter("sign must be ±1".into()));
    }
    let ring = b_ring(r)?;
    let n = 2 * r + 1;
    let ell = 4 * r as i64 + 2;
    let w = WeightData::b(r);
    let q = RootOfUnity::from_fraction(1, 2 * ell);
    let weights = b_weights(r);
    let dims = weights.iter().map(|l| qdim_from_weight(&w, l, q)).collect::<Result<Vec<_>>>()?;
    let twists: Vec<Cyclotomic> = weights.iter().map(|l| twist_from_weight(&w, l, q)).collect();
    let sq = Cyclotomic::sqrt_integer(n as u64)?;
    let rank = r + 4;
    let (v, eps, eps2) = (1, r + 2, r + 3);
    let is_gamma = |x: usize| (2..2 + r).contains(&x);
    let mut s = vec![vec![SEntry::Unknown; rank]; rank];
    for a in 0..rank {
        for b in a..rank {
            let value = if a == 0 {
                Some(dims[b].clone())
            } else if a == v {
                Some(match b {
                    1 => Cyclotomic::one(),
                    x if is_gamma(x) => Cyclotomic::from_int(2),
                    _ => -&sq,
                })
            } else if is_gamma(a) && is_gamma(b) {
                let ij = ((a - 1) * (b - 1)) as i64;
                Some(Cyclotomic::from_exponents(n as u32, &[(ij, 2), (-ij, 2)]).minimize())
            } else if is_gamma(a) {
                Some(Cyclotomic::zero())
            } else if a == eps && b == eps {
                Some(sq.scale(&crate::numeric::int(sign as i64)))
            } else if a == eps && b == eps2 {
                Some(sq.scale(&crate::numeric::int(-(sign as i64))))
            } else {
                None
            };
            if let Some(x) = value {
                s[a][b] = SEntry::Known(x.clone());
                s[b][a] = SEntry::Known(x);
            }
        }
    }
    PartialModularData::new(PartialFusionRing::from_ring(&ring), dims, twists, s)
}
