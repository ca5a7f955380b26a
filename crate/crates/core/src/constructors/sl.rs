//! sl₂ fusion at level ℓ−2 and the sl₃ example of rank 10.

use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::modular::{PartialModularData, SEntry};
use crate::numeric::{int, Cyclotomic};

/// Truncated Clebsch–Gordan rule on X₀..X_{ℓ−2}.
pub fn sl2_ring(ell: usize) -> Result<FusionRing> {
    if ell < 2 {
        return Err(Error::InvalidParameter("sl2 needs ℓ ≥ 2".into()));
    }
    let k = ell - 2;
    let labels = (0..=k).map(|a| format!("X{a}")).collect();
    FusionRing::from_rule(labels, (0..=k).collect(), |a, b| {
        let top = (a + b).min(2 * k - a - b);
        (a.abs_diff(b)..=top).step_by(2).map(|c| (c, 1)).collect()
    })
}

pub const SU3_LABELS: [&str; 10] = ["1", "X3", "X3*", "Y", "X1", "X1*", "X2", "X2*", "Z", "Z*"];

/// C(sl₃, e^{πi/6}, 6) in the basis 1, X₃, X₃*, Y, X₁, X₁*, X₂, X₂*, Z, Z*.
/// The blocks A and B of s̃ are entered as printed; the lower-right block
/// is only known up to |s̃| = 2. Of the fusion rules only Y⊗Y and X₃⊗X₃ are
/// entered, plus whatever follows from them.
pub fn su3_example() -> Result<PartialModularData> {
    let labels: Vec<String> = SU3_LABELS.iter().map(|s| s.to_string()).collect();
    let dual = vec![0, 2, 1, 3, 5, 4, 7, 6, 9, 8];
    let dims: Vec<Cyclotomic> = [1, 1, 1, 3, 2, 2, 2, 2, 2, 2].iter().map(|&d| Cyclotomic::from_int(d)).collect();
    let twists: Vec<Cyclotomic> =
        [0, 0, 0, 9, 4, 4, 10, 10, 16, 16].iter().map(|&e| Cyclotomic::root_of_unity(18, e).minimize()).collect();
    let mut ring = PartialFusionRing::unknown(labels, dual)?;
    ring.set_product(3, 3, &[(0, 1), (1, 1), (2, 1), (3, 2)])?;
    ring.set_product(1, 1, &[(2, 1)])?;
    ring.saturate(&dims)?;

    let a = [[1, 1, 1, 3], [1, 1, 1, 3], [1, 1, 1, 3], [3, 3, 3, -3]];
    // exponents of ω in B/2, None for the zero row
    let b: [Option<[i64; 6]>; 4] =
        [Some([0; 6]), Some([1, -1, -1, 1, 1, -1]), Some([-1, 1, 1, -1, -1, 1]), None];
    let mut s = vec![vec![SEntry::UnknownModulus(int(2)); 10]; 10];
    for i in 0..4 {
        for j in 0..4 {
            s[i][j] = SEntry::Known(Cyclotomic::from_int(a[i][j]));
        }
        for j in 0..6 {
            let v = match b[i] {
                Some(e) => Cyclotomic::from_exponents(3, &[(e[j], 2)]),
                None => Cyclotomic::zero(),
            };
            s[i][4 + j] = SEntry::Known(v.clone());
            s[4 + j][i] = SEntry::Known(v);
        }
    }
    PartialModularData::new(ring, dims, twists, s)
}
