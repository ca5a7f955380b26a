//! Weights of so(2r+1) and so(2r), with the twist and quantum dimension formulas.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Cyclotomic, RootOfUnity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieType {
    B,
    D,
}

/// Root data in the orthonormal basis e_1..e_r, with the pairing scaled so
/// that short roots α satisfy ⟨α, α⟩ = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub kind: LieType,
    pub rank: usize,
    rho: Vec<Rational64>,
    roots: Vec<Vec<i64>>,
    scale: i64,
}

pub type Weight = Vec<Rational64>;

pub fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

/// (1, …, 1, 0, …, 0) with k ones.
pub fn ones(r: usize, k: usize) -> Weight {
    (0..r).map(|i| if i < k { Rational64::one() } else { Rational64::zero() }).collect()
}

impl WeightData {
    pub fn b(r: usize) -> Self {
        let mut roots = Vec::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            roots.push(e);
            for j in i + 1..r {
                let mut m = vec![0; r];
                m[i] = 1;
                m[j] = -1;
                roots.push(m.clone());
                m[j] = 1;
                roots.push(m);
            }
        }
        let rho = (0..r).map(|i| half(2 * (r - i) as i64 - 1)).collect();
        WeightData { kind: LieType::B, rank: r, rho, roots, scale: 2 }
    }

    pub fn d(r: usize) -> Self {
        let mut roots = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let mut m = vec![0; r];
                m[i] = 1;
                m[j] = -1;
                roots.push(m.clone());
                m[j] = 1;
                roots.push(m);
            }
        }
        let rho = (0..r).map(|i| Rational64::from_integer((r - 1 - i) as i64)).collect();
        WeightData { kind: LieType::D, rank: r, rho, roots, scale: 1 }
    }

    pub fn rho(&self) -> &[Rational64] {
        &self.rho
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn pairing(&self, x: &[Rational64], y: &[Rational64]) -> Rational64 {
        x.iter().zip(y).map(|(a, b)| a * b).sum::<Rational64>() * self.scale
    }

    fn pair_root(&self, x: &[Rational64], alpha: &[i64]) -> Rational64 {
        x.iter().zip(alpha).map(|(a, &b)| a * b).sum::<Rational64>() * self.scale
    }

    /// ⟨λ + 2ρ, λ⟩
    pub fn casimir(&self, lambda: &[Rational64]) -> Rational64 {
        let shifted: Weight = lambda.iter().zip(&self.rho).map(|(l, p)| l + p * 2).collect();
        self.pairing(&shifted, lambda)
    }
}

/// [n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)
pub fn quantum_integer(n: i64, q: &Cyclotomic) -> Result<Cyclotomic> {
    let qi = q.inverse()?;
    let den = q - &qi;
    if den.is_zero() {
        return Err(Error::InvalidParameter("q − q⁻¹ vanishes".into()));
    }
    let num = &q.pow(n)? - &qi.pow(n)?;
    num.checked_div(&den)
}

/// θ_λ = q^{⟨λ+2ρ,λ⟩}
pub fn twist_from_weight(w: &WeightData, lambda: &[Rational64], q: RootOfUnity) -> Cyclotomic {
    RootOfUnity::new(q.turn() * w.casimir(lambda)).to_cyclotomic().minimize()
}

/// Π_{α>0} [⟨λ+ρ,α⟩]/[⟨ρ,α⟩]
pub fn qdim_from_weight(w: &WeightData, lambda: &[Rational64], q: RootOfUnity) -> Result<Cyclotomic> {
    let shifted: Weight = lambda.iter().zip(&w.rho).map(|(l, p)| l + p).collect();
    let diff = |k: Rational64| -> Result<Cyclotomic> {
        if !k.is_integer() {
            return Err(Error::InvalidParameter("weight pairs to a non-integer with a root".into()));
        }
        let k = k.to_integer();
        let a = RootOfUnity::new(q.turn() * k).to_cyclotomic();
        let b = RootOfUnity::new(-q.turn() * k).to_cyclotomic();
        Ok(&a - &b)
    };
    let mut num = Cyclotomic::one();
    let mut den = Cyclotomic::one();
    for alpha in &w.roots {
        num = &num * &diff(w.pair_root(&shifted, alpha))?;
        den = &den * &diff(w.pair_root(&w.rho, alpha))?;
    }
    if den.is_zero() {
        return Err(Error::InvalidParameter("vanishing quantum integer in the denominator".into()));
    }
    Ok(num.checked_div(&den)?.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        let q = Cyclotomic::zeta(10);
        assert!(quantum_integer(0, &q).unwrap().is_zero());
        assert!(quantum_integer(1, &q).unwrap().is_one());
        assert_eq!(quantum_integer(2, &q).unwrap(), &q + &q.inverse().unwrap());
        assert!(quantum_integer(3, &Cyclotomic::one()).is_err());
    }

    #[test]
    fn b_series_weights() {
        for r in 2..6usize {
            let w = WeightData::b(r);
            let q = RootOfUnity::from_fraction(1, 2 * (4 * r as i64 + 2));
            let eps: Weight = vec![half(1); r];
            let n = 2 * r as u64 + 1;
            assert_eq!(qdim_from_weight(&w, &eps, q).unwrap(), Cyclotomic::sqrt_integer(n).unwrap());
            let mut v = vec![Rational64::zero(); r];
            v[0] = Rational64::from_integer(2);
            assert!(twist_from_weight(&w, &v, q).is_one());
            assert_eq!(qdim_from_weight(&w, &ones(r, 1), q).unwrap(), Cyclotomic::from_int(2));
            // θ_ε = e^{πir/4}
            assert_eq!(twist_from_weight(&w, &eps, q), Cyclotomic::root_of_unity(8, r as i64));
        }
    }

    #[test]
    fn d_series_gamma_twist() {
        // θ_{γ^j} = q^{j(2r−j)} at q = e^{πi/(2r)}
        for r in [4usize, 9] {
            let w = WeightData::d(r);
            let q = RootOfUnity::from_fraction(1, 4 * r as i64);
            for j in 1..r - 1 {
                let expected = RootOfUnity::new(q.turn() * (j * (2 * r - j)) as i64).to_cyclotomic();
                assert_eq!(twist_from_weight(&w, &ones(r, j), q), expected);
                assert_eq!(qdim_from_weight(&w, &ones(r, j), q).unwrap(), Cyclotomic::from_int(2));
            }
            assert!(qdim_from_weight(&w, &vec![Rational64::zero(); r], q).unwrap().is_one());
        }
    }
}
