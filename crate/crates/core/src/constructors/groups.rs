//! Representation rings of the dihedral groups and of Z_k ⋊ Z_4, computed
//! from explicit character tables.

use crate::error::{Error, Result};
use crate::fusionring::FusionRing;
use crate::numeric::{rat, Cyclotomic};

/// Fusion ring of the characters `chars[i][g]` (one value per group element):
/// N_{ij}^k = (1/|G|) Σ_g χ_i(g) χ_j(g) conj(χ_k(g)).
fn character_ring(labels: Vec<String>, chars: Vec<Vec<Cyclotomic>>) -> Result<FusionRing> {
    let r = chars.len();
    let order = chars[0].len();
    let conj: Vec<Vec<Cyclotomic>> = chars.iter().map(|c| c.iter().map(Cyclotomic::conj).collect()).collect();
    let inner = |f: &[Cyclotomic], k: usize| -> Result<u32> {
        let sum: Cyclotomic = f.iter().zip(&conj[k]).map(|(a, b)| a * b).sum();
        let n = sum.scale(&rat(1, order as i64));
        n.to_i64()
            .filter(|&v| v >= 0)
            .map(|v| v as u32)
            .ok_or_else(|| Error::Inconsistent(format!("character multiplicity {n} is not a natural number")))
    };
    let dual = (0..r)
        .map(|i| (0..r).find(|&j| chars[j] == conj[i]).ok_or_else(|| Error::Inconsistent("character without dual".into())))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<Cyclotomic> = chars[i].iter().zip(&chars[j]).map(|(a, b)| a * b).collect();
            for k in 0..r {
                let m = inner(&prod, k)?;
                if m > 0 {
                    entries.push((i, j, k, m));
                }
            }
        }
    }
    FusionRing::from_entries(labels, dual, entries)
}

fn sign(e: usize) -> Cyclotomic {
    Cyclotomic::from_int(if e % 2 == 0 { 1 } else { -1 })
}

/// ζ_n^{jx} + ζ_n^{−jx}
fn two_cos(n: usize, j: usize, x: usize) -> Cyclotomic {
    let e = (j * x) as i64;
    Cyclotomic::from_exponents(n as u32, &[(e, 1), (-e, 1)]).minimize()
}

/// Rep(D_n) for the dihedral group of order 2n. Labels: 1, Z₂ (sign on
/// reflections), for even n also Z₃ (sign on rotations) and Z₄, then
/// X₁..X_m with X_j restricting to rotations as 2cos(2πj/n).
pub fn dihedral_rep(n: usize) -> Result<FusionRing> {
    if n < 3 {
        return Err(Error::InvalidParameter("dihedral group needs n ≥ 3".into()));
    }
    // element r^x s^y at index 2x + y
    let elements: Vec<(usize, usize)> = (0..n).flat_map(|x| [(x, 0), (x, 1)]).collect();
    let linear: Vec<(&str, fn(usize, usize) -> Cyclotomic)> = if n % 2 == 0 {
        vec![
            ("1", |_, _| Cyclotomic::one()),
            ("Z2", |_, y| sign(y)),
            ("Z3", |x, _| sign(x)),
            ("Z4", |x, y| sign(x + y)),
        ]
    } else {
        vec![("1", |_, _| Cyclotomic::one()), ("Z2", |_, y| sign(y))]
    };
    let mut labels: Vec<String> = linear.iter().map(|(l, _)| l.to_string()).collect();
    let mut chars: Vec<Vec<Cyclotomic>> =
        linear.iter().map(|(_, f)| elements.iter().map(|&(x, y)| f(x, y)).collect()).collect();
    for j in 1..=(n - 1) / 2 {
        labels.push(format!("X{j}"));
        chars.push(
            elements
                .iter()
                .map(|&(x, y)| if y == 0 { two_cos(n, j, x) } else { Cyclotomic::zero() })
                .collect(),
        );
    }
    character_ring(labels, chars)
}

/// Rep(Z_k ⋊ Z_4) for odd k, with the generator b of Z_4 acting by
/// inversion. Linear characters send b to 1, −1, i, −i (labels 1, Z₂, Z₃,
/// Z₄, so Z₃* = Z₄). The two-dimensional characters are numbered along the
/// chain X₁ ⊗ X_i = X_{i−1} ⊕ X_{i+1}: X_i is induced from a ↦ ζ_k^{j},
/// b² ↦ (−1)^i with j = min(i, k−i).
pub fn semidirect_rep(k: usize) -> Result<FusionRing> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!("Z_k ⋊ Z_4 needs odd k ≥ 3, got {k}")));
    }
    // element a^x b^y
    let elements: Vec<(usize, usize)> = (0..k).flat_map(|x| (0..4).map(move |y| (x, y))).collect();
    let mut labels = Vec::new();
    let mut chars = Vec::new();
    for (label, m) in [("1", 0usize), ("Z2", 2), ("Z3", 1), ("Z4", 3)] {
        labels.push(label.to_string());
        chars.push(elements.iter().map(|&(_, y)| Cyclotomic::root_of_unity(4, (m * y) as i64).minimize()).collect());
    }
    for i in 1..k {
        let j = i.min(k - i);
        labels.push(format!("X{i}"));
        chars.push(
            elements
                .iter()
                .map(|&(x, y)| {
                    if y % 2 == 1 {
                        Cyclotomic::zero()
                    } else {
                        &two_cos(k, j, x) * &sign(i * (y / 2))
                    }
                })
                .collect(),
        );
    }
    character_ring(labels, chars)
}
