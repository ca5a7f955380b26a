//! Pointed modular data from a quadratic form on a finite abelian group.

use super::abelian::{parse_matrix, AbelianGroup};
use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::modular::PartialModularData;
use crate::numeric::{Cyclotomic, RootOfUnity};

/// q(x) = ζ_M^{Σᵢ Qᵢᵢ xᵢ² + Σ_{i<j} Qᵢⱼ xᵢ xⱼ}; entries below the diagonal
/// are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    group: AbelianGroup,
    coeffs: Vec<Vec<i64>>,
    modulus: u32,
}

impl QuadraticForm {
    /// Checks that q is well defined on the group.
    pub fn new(group: AbelianGroup, coeffs: Vec<Vec<i64>>, modulus: u32) -> Result<Self> {
        let k = group.orders().len();
        if modulus == 0 || coeffs.len() != k || coeffs.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidParameter(format!("quadratic form needs a {k}×{k} matrix and a positive order")));
        }
        let form = QuadraticForm { group, coeffs, modulus };
        for x in 0..form.group.order() {
            let rep: Vec<i64> = form.group.element(x).iter().map(|&c| c as i64).collect();
            for i in 0..k {
                let mut shifted = rep.clone();
                shifted[i] += form.group.orders()[i] as i64;
                if form.exponent_of(&shifted) != form.exponent_of(&rep) {
                    return Err(Error::InvalidParameter("quadratic form is not defined on the group".into()));
                }
            }
        }
        Ok(form)
    }

    /// ζ_n^{x²(n+1)/2} on odd factors and ζ_{2n}^{x²} on even ones.
    pub fn default_for(group: AbelianGroup) -> Result<Self> {
        let m = 2 * group.exponent() as i64;
        let k = group.orders().len();
        let mut coeffs = vec![vec![0; k]; k];
        for (i, &n) in group.orders().iter().enumerate() {
            let n = n as i64;
            coeffs[i][i] = if n % 2 == 1 { (n + 1) / 2 * (m / n) } else { m / (2 * n) };
        }
        Self::new(group, coeffs, m as u32)
    }

    /// Parses "Q11,Q12;Q21,Q22@M".
    pub fn parse(group: AbelianGroup, s: &str) -> Result<Self> {
        let (q, m) = s.split_once('@').ok_or_else(|| Error::InvalidParameter(format!("expected matrix@order in '{s}'")))?;
        let modulus = m.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad order '{m}'")))?;
        Self::new(group, parse_matrix(q)?, modulus)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    fn exponent_of(&self, x: &[i64]) -> i64 {
        let mut e = 0;
        for i in 0..x.len() {
            e += self.coeffs[i][i] * x[i] * x[i];
            for j in i + 1..x.len() {
                e += self.coeffs[i][j] * x[i] * x[j];
            }
        }
        e.rem_euclid(self.modulus as i64)
    }

    pub fn value(&self, x: usize) -> RootOfUnity {
        let rep: Vec<i64> = self.group.element(x).iter().map(|&c| c as i64).collect();
        RootOfUnity::from_fraction(self.exponent_of(&rep), self.modulus as i64)
    }

    /// b(x, y) = q(x+y) / (q(x) q(y))
    pub fn bilinear(&self, x: usize, y: usize) -> RootOfUnity {
        self.value(self.group.add(x, y)) * self.value(x).inv() * self.value(y).inv()
    }
}

/// Pointed ring on A with θ_a = q(a) and s̃(a, b) = b(a, b)⁻¹, the normalization
/// under which θ_a θ_b s̃(a,b) = θ_{b−a}.
pub fn build_pointed_modular(q: &QuadraticForm) -> Result<PartialModularData> {
    let g = q.group();
    let n = g.order();
    let radical: Vec<String> = (1..n).filter(|&x| (0..n).all(|y| q.bilinear(x, y).is_one())).map(|x| g.label(x)).collect();
    if !radical.is_empty() {
        return Err(Error::Degenerate(radical.join(", ")));
    }
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.add(a, b)).collect()).collect();
    let ring = FusionRing::group_ring((0..n).map(|a| g.label(a)).collect(), &mul)?;
    let dims = vec![Cyclotomic::one(); n];
    let twists = (0..n).map(|a| q.value(a).to_cyclotomic()).collect();
    let s = (0..n).map(|a| (0..n).map(|b| q.bilinear(a, b).inv().to_cyclotomic()).collect()).collect();
    PartialModularData::from_complete(PartialFusionRing::from_ring(&ring), dims, twists, s)
}
