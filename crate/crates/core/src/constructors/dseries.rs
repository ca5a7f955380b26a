//! so(2r) at level 2: ℓ = 2r, q = e^{πi/ℓ}. Fusion among the spin objects is
//! left unknown.

use num_rational::Rational64;
use num_traits::Zero;

use super::weights::{half, ones, qdim_from_weight, twist_from_weight, Weight, WeightData};
use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::modular::{PartialModularData, SEntry};
use crate::numeric::{Cyclotomic, RootOfUnity};

/// Labels 0, V = 2λ₁, U = 2λ_{r−1}, U′ = 2λ_r, γ¹..γ^{r−1}, ε₁..ε₄.
pub fn d_labels(r: usize) -> Vec<String> {
    let mut l: Vec<String> = ["0", "V", "U", "U′"].iter().map(|s| s.to_string()).collect();
    l.extend((1..r).map(|j| format!("γ{j}")));
    l.extend((1..=4).map(|i| format!("ε{i}")));
    l
}

/// Duals: everything is self-dual for r even; for r odd U* = U′, and the
/// spin objects pair as ε₁* = ε₂, ε₃* = ε₄ (the weights λ_{r−1} and λ_r are
/// exchanged by −w₀).
pub fn d_duals(r: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (0..r + 7).collect();
    if r % 2 == 1 {
        d.swap(2, 3);
        d.swap(r + 3, r + 4);
        d.swap(r + 5, r + 6);
    }
    d
}

fn d_weights(r: usize) -> Vec<Weight> {
    let zero = vec![Rational64::zero(); r];
    let mut v = zero.clone();
    v[0] = Rational64::from_integer(2);
    let mut u = ones(r, r);
    u[r - 1] = Rational64::from_integer(-1);
    let mut w = vec![zero, v, u, ones(r, r)];
    for j in 1..r {
        w.push(ones(r, j));
    }
    let mut e1 = vec![half(1); r];
    e1[r - 1] = half(-1);
    let e2 = vec![half(1); r];
    let mut e3 = e1.clone();
    e3[0] = half(3);
    let mut e4 = e2.clone();
    e4[0] = half(3);
    w.extend([e1, e2, e3, e4]);
    w
}

/// Decomposition of a⊗b for a, b among the objects of dimension 1 and 2.
fn even_product(r: usize, a: usize, b: usize) -> Vec<(usize, u32)> {
    let (v, u, u2) = (1, 2, 3);
    let gamma = |j: usize| 3 + j;
    let fold = |m: usize| -> Vec<(usize, u32)> {
        match m {
            0 => vec![(0, 1), (v, 1)],
            m if m == r => vec![(u, 1), (u2, 1)],
            m if m < r => vec![(gamma(m), 1)],
            m => vec![(gamma(2 * r - m), 1)],
        }
    };
    // invertibles as exponents: r even Z₂×Z₂ with V=(1,1), U=(1,0), U′=(0,1);
    // r odd Z₄ generated by U with V = U², U′ = U³
    let inv_mul = |x: usize, y: usize| -> usize {
        if r % 2 == 0 {
            let code = |z: usize| [(0, 0), (1, 1), (1, 0), (0, 1)][z];
            let (p, q) = (code(x), code(y));
            let s = ((p.0 + q.0) % 2, (p.1 + q.1) % 2);
            (0..4).find(|&z| code(z) == s).unwrap()
        } else {
            let exp = |z: usize| [0, 2, 1, 3][z];
            let e = (exp(x) + exp(y)) % 4;
            (0..4).find(|&z| exp(z) == e).unwrap()
        }
    };
    let (a, b) = (a.min(b), a.max(b));
    match (a < 4, b < 4) {
        (true, true) => vec![(inv_mul(a, b), 1)],
        (true, false) => {
            let j = b - 3;
            match a {
                0 | 1 => vec![(b, 1)],
                _ => vec![(gamma(r - j), 1)],
            }
        }
        _ => {
            let (i, j) = (a - 3, b - 3);
            let mut out = fold(i + j);
            out.extend(fold(i.abs_diff(j)));
            out
        }
    }
}

/// The subring spanned by the objects of dimension 1 and 2.
pub fn d_even_part(r: usize) -> Result<FusionRing> {
    if r < 4 {
        return Err(Error::InvalidParameter("D series needs r ≥ 4".into()));
    }
    let labels = d_labels(r)[..r + 3].to_vec();
    let dual = d_duals(r)[..r + 3].to_vec();
    FusionRing::from_rule(labels, dual, |a, b| even_product(r, a, b))
}

/// Partial fusion: even ⊗ even known (and hence even ⊗ spin has no even
/// constituent); products of two spin objects unknown.
pub fn d_partial_ring(r: usize) -> Result<PartialFusionRing> {
    if r < 4 {
        return Err(Error::InvalidParameter("D series needs r ≥ 4".into()));
    }
    let mut p = PartialFusionRing::unknown(d_labels(r), d_duals(r))?;
    for a in 0..r + 3 {
        for b in a..r + 3 {
            p.set_product(a, b, &even_product(r, a, b))?;
        }
    }
    Ok(p)
}

/// Dimensions, twists and the listed S-entries; entries involving a spin
/// object and U or U′, or two spin objects, are unknown.
pub fn build_d(r: usize) -> Result<PartialModularData> {
    let ring = d_partial_ring(r)?;
    let w = WeightData::d(r);
    let q = RootOfUnity::from_fraction(1, 4 * r as i64);
    let weights = d_weights(r);
    let dims = weights.iter().map(|l| qdim_from_weight(&w, l, q)).collect::<Result<Vec<_>>>()?;
    let twists: Vec<Cyclotomic> = weights.iter().map(|l| twist_from_weight(&w, l, q)).collect();
    let sq = Cyclotomic::sqrt_integer(r as u64)?;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let rank = r + 7;
    let is_gamma = |x: usize| (4..r + 3).contains(&x);
    let is_spin = |x: usize| x >= r + 3;
    let mut s = vec![vec![SEntry::Unknown; rank]; rank];
    for a in 0..rank {
        for b in a..rank {
            let value = match (a, b) {
                (0, _) => Some(dims[b].clone()),
                (1, 1..=3) => Some(Cyclotomic::one()),
                (1, x) if is_gamma(x) => Some(Cyclotomic::from_int(2)),
                (1, _) => Some(-&sq),
                (2 | 3, 2 | 3) => Some(Cyclotomic::from_int(sign)),
                (2 | 3, x) if is_gamma(x) => Some(Cyclotomic::from_int(if (x - 3) % 2 == 0 { 2 } else { -2 })),
                (x, y) if is_gamma(x) && is_gamma(y) => {
                    let ij = ((x - 3) * (y - 3)) as i64;
                    Some(Cyclotomic::from_exponents(2 * r as u32, &[(ij, 2), (-ij, 2)]).minimize())
                }
                (x, y) if is_gamma(x) && is_spin(y) => Some(Cyclotomic::zero()),
                _ => None,
            };
            if let Some(x) = value {
                s[a][b] = SEntry::Known(x.clone());
                s[b][a] = SEntry::Known(x);
            }
        }
    }
    PartialModularData::new(ring, dims, twists, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{dihedral_rep, semidirect_rep};
    use crate::fusionring::grothendieck_equivalent;
    use crate::modular::GtVerdict;

    #[test]
    fn dimensions_and_duals() {
        for r in 4..10 {
            let md = build_d(r).unwrap();
            assert_eq!(md.rank(), r + 7);
            assert_eq!(md.global_dimension(), Cyclotomic::from_int(8 * r as i64));
            let sq = Cyclotomic::sqrt_integer(r as u64).unwrap();
            assert!(md.dims()[r + 3..].iter().all(|d| *d == sq));
            assert!(md.check_balancing().passed(), "D{r}");
        }
        assert!(build_d(9).unwrap().is_integral());
        let even5 = d_even_part(5).unwrap();
        assert_eq!(even5.dual(2), 3);
        assert_eq!(d_even_part(4).unwrap().fp_dimension_category().exact, Some(Cyclotomic::from_int(16)));
    }

    #[test]
    fn even_part_matches_group_rings() {
        for r in 4..11 {
            let even = d_even_part(r).unwrap();
            assert!(even.validate().passed());
            let reference = if r % 2 == 0 { dihedral_rep(2 * r) } else { semidirect_rep(r) }.unwrap();
            assert!(grothendieck_equivalent(&even, &reference).unwrap().is_some(), "D{r}");
        }
    }

    #[test]
    fn gamma_twists() {
        let r = 9;
        let md = build_d(r).unwrap();
        for j in 1..r {
            let expected = Cyclotomic::root_of_unity(4 * r as u32, (j * (2 * r - j)) as i64).minimize();
            assert_eq!(md.twists()[3 + j], expected);
        }
    }

    #[test]
    fn group_theoretical_squares() {
        let d4 = build_d(4).unwrap().is_group_theoretical_modular();
        assert_eq!(d4.verdict, GtVerdict::Gt, "{:?}", d4.trail);
        assert_eq!(d4.witness, Some(vec![0, 1, 2, 3]));
        let d9 = build_d(9).unwrap().is_group_theoretical_modular();
        assert_eq!(d9.verdict, GtVerdict::Gt, "{:?}", d9.trail);
        assert_eq!(d9.witness, Some(vec![0, 1, 9]));
        let d5 = build_d(5).unwrap().is_group_theoretical_modular();
        assert_eq!(d5.verdict, GtVerdict::NotGt);
    }
}
