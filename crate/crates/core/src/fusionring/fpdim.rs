//! Frobenius–Perron dimensions with exactness certificates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FusionRing;
use crate::numeric::poly::{sign_changes, QPoly};
use crate::numeric::{Cyclotomic, RealInterval, DEFAULT_PRECISION};

/// How the value of an [`FpDim`] was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpCertificate {
    /// Integer root of the characteristic polynomial, with no larger real root.
    IntegerRoot,
    /// Root of the factor x² − s·x + t of the characteristic polynomial,
    /// isolated as the largest real root.
    QuadraticFactor { s: i64, t: i64 },
    /// Part of a positive ring homomorphism checked exactly on every product.
    Character,
    /// Exact combination of certified dimensions.
    Derived,
    /// Only an enclosure is known; the value has degree at least 3 over ℚ.
    Enclosure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpDim {
    pub exact: Option<Cyclotomic>,
    pub enclosure: RealInterval,
    pub certificate: FpCertificate,
}

impl FpDim {
    pub fn from_exact(value: Cyclotomic, certificate: FpCertificate) -> Self {
        let (re, _) = value.embed(DEFAULT_PRECISION);
        FpDim { exact: Some(value), enclosure: re, certificate }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn is_integer(&self) -> bool {
        self.exact.as_ref().is_some_and(|x| x.is_integer())
    }

    /// The square is a rational integer. Enclosure-only values have degree at
    /// least 3 and so never qualify.
    pub fn square_is_integer(&self) -> bool {
        self.exact.as_ref().is_some_and(|x| (x * x).is_integer())
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure.to_f64()
    }
}

impl fmt::Display for FpDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(x) if x.is_rational() => write!(f, "{x}"),
            Some(x) => {
                let sq = x * x;
                if sq.is_integer() {
                    write!(f, "sqrt({sq})")
                } else {
                    write!(f, "{:.12}", self.to_f64())
                }
            }
            None => write!(f, "~{:.12}", self.to_f64()),
        }
    }
}

/// Characteristic polynomial det(xI − A) of an integer matrix, lowest degree
/// first (Faddeev–LeVerrier; every intermediate stays integral).
pub fn characteristic_polynomial(a: &[Vec<u32>]) -> Vec<BigInt> {
    let n = a.len();
    let sparse: Vec<Vec<(usize, i64)>> = a
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v as i64))
                .collect()
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // m <- A*m + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in sparse.iter().enumerate() {
            for &(j, v) in row {
                for (t, x) in m[j].iter().enumerate() {
                    if !x.is_zero() {
                        next[i][t] += x * v;
                    }
                }
            }
        }
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut tr = BigInt::zero();
        for (i, row) in sparse.iter().enumerate() {
            for &(j, v) in row {
                tr += &m[j][i] * v;
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    coeffs
}

fn dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    BigRational::new((x * BigRational::from_integer(scale.clone())).floor().to_integer(), scale)
}

/// Isolating interval (lo, hi] of the largest real root of a squarefree
/// polynomial with a positive real root below `bound`.
fn isolate_largest_root(q: &QPoly, bound: &BigRational, bits: u32) -> (BigRational, BigRational) {
    let chain = q.sturm_chain();
    let count = |a: &BigRational, b: &BigRational| {
        sign_changes(&chain, a) as i64 - sign_changes(&chain, b) as i64
    };
    let mut lo = BigRational::zero();
    let mut hi = bound.clone();
    debug_assert!(count(&lo, &hi) >= 1);
    let eps = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > eps {
        let mid = dyadic(&((&lo + &hi) / &two), bits + 2);
        if mid <= lo || mid >= hi {
            break;
        }
        if count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Perron root of a nonnegative integer matrix with a certificate.
pub fn perron_root(a: &[Vec<u32>]) -> FpDim {
    let n = a.len();
    let row_max = a.iter().map(|r| r.iter().map(|&x| x as u64).sum::<u64>()).max().unwrap_or(0);
    let col_max = (0..n).map(|j| a.iter().map(|r| r[j] as u64).sum::<u64>()).max().unwrap_or(0);
    let bound = BigRational::from_integer(BigInt::from(row_max.min(col_max) + 1));

    let p = characteristic_polynomial(a);
    let q = QPoly::from_ints(&p).squarefree();
    let (lo, hi) = isolate_largest_root(&q, &bound, 56);

    // integer candidates
    let mut d = lo.ceil();
    if d == lo {
        d += BigRational::one();
    }
    while d <= hi {
        if q.eval(&d).is_zero() {
            return FpDim::from_exact(Cyclotomic::from_rational(&d), FpCertificate::IntegerRoot);
        }
        d += BigRational::one();
    }

    // quadratic factors x² − s x + t with roots d ≥ |d'|, so 0 ≤ s ≤ 2d
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    let smax = (&hi * BigRational::from_integer(BigInt::from(2))).ceil().to_integer();
    let mut s = BigInt::zero();
    while s <= smax {
        let sr = BigRational::from_integer(s.clone());
        let t = (&sr * &mid - &mid * &mid).round().to_integer();
        let factor = QPoly::from_ints(&[t.clone(), -s.clone(), BigInt::one()]);
        if q.rem(&factor).is_zero() {
            let disc = &s * &s - BigInt::from(4) * &t;
            if let (Some(disc_u), Some(si), Some(ti)) = (disc.to_u64(), s.to_i64(), t.to_i64()) {
                if disc.is_positive() {
                    let root = (&Cyclotomic::from_bigint(s.clone())
                        + &Cyclotomic::sqrt_integer(disc_u).expect("positive"))
                        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
                    // exactly one root of the factor lies in (lo, hi]; it has to be
                    // the larger one, since q has no root above hi
                    let (flo, fhi) = (factor.eval(&lo), factor.eval(&hi));
                    if fhi.is_zero() || (flo.is_positive() != fhi.is_positive() && !flo.is_zero()) {
                        return FpDim::from_exact(root, FpCertificate::QuadraticFactor { s: si, t: ti });
                    }
                }
            }
        }
        s += 1;
    }

    FpDim {
        exact: None,
        enclosure: RealInterval::new(lo, hi),
        certificate: FpCertificate::Enclosure,
    }
}

/// Guesses all dimensions from a floating-point Perron vector and certifies the
/// guess as a positive character of the ring. Returns `None` when any guess is
/// not of the form k or √m, or the exact check fails.
pub(crate) fn character_dimensions(ring: &FusionRing) -> Option<Vec<FpDim>> {
    let r = ring.rank();
    // sum of all left multiplication matrices: strictly positive
    let mut l = vec![vec![0f64; r]; r];
    for a in 0..r {
        for b in 0..r {
            for &(c, m) in ring.product(a, b) {
                l[c][b] += m as f64;
            }
        }
    }
    let mut v = vec![1f64; r];
    for _ in 0..20000 {
        let mut w = vec![0f64; r];
        for c in 0..r {
            w[c] = (0..r).map(|b| l[c][b] * v[b]).sum();
        }
        let s = w[0];
        if !(s > 0.0) {
            return None;
        }
        for x in &mut w {
            *x /= s;
        }
        let diff = v.iter().zip(&w).map(|(x, y)| (x - y).abs()).fold(0f64, f64::max);
        v = w;
        if diff < 1e-15 {
            break;
        }
    }
    let mut guess = Vec::with_capacity(r);
    for &x in &v {
        let k = x.round();
        if (x - k).abs() < 1e-7 && k >= 1.0 {
            guess.push(Cyclotomic::from_int(k as i64));
            continue;
        }
        let m = (x * x).round();
        if (x * x - m).abs() < 1e-6 && m >= 1.0 {
            guess.push(Cyclotomic::sqrt_integer(m as u64).ok()?);
            continue;
        }
        return None;
    }
    for a in 0..r {
        for b in 0..r {
            let lhs = &guess[a] * &guess[b];
            let rhs: Cyclotomic = ring
                .product(a, b)
                .iter()
                .map(|&(c, m)| guess[c].scale(&BigRational::from_integer(BigInt::from(m))))
                .sum();
            if lhs != rhs {
                return None;
            }
        }
    }
    Some(
        guess
            .into_iter()
            .map(|d| FpDim::from_exact(d, FpCertificate::Character))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn charpoly_small() {
        // [[0,1],[1,1]] -> x² − x − 1
        assert_eq!(characteristic_polynomial(&[vec![0, 1], vec![1, 1]]), ints(&[-1, -1, 1]));
        // identity 3x3 -> (x−1)³
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(characteristic_polynomial(&id), ints(&[-1, 3, -3, 1]));
    }

    #[test]
    fn golden_ratio_is_quadratic() {
        let d = perron_root(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(d.certificate, FpCertificate::QuadraticFactor { s: 1, t: -1 });
        let x = d.exact.unwrap();
        // x² = x + 1
        assert_eq!(&x * &x, &x + &Cyclotomic::one());
        assert!((d.enclosure.to_f64() - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn integer_perron_root() {
        let d = perron_root(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(d.exact, Some(Cyclotomic::from_int(2)));
        assert_eq!(d.certificate, FpCertificate::IntegerRoot);
    }

    #[test]
    fn cubic_perron_root_stays_an_enclosure() {
        // sl2 at level with 2cos(π/7): matrix of X_1 in the rank 3 truncation
        let a = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let d = perron_root(&a);
        assert_eq!(d.certificate, FpCertificate::Enclosure);
        let expect = 2.0 * (std::f64::consts::PI / 7.0).cos();
        assert!((d.to_f64() - expect).abs() < 1e-12);
        assert!(d.enclosure.width() < BigRational::new(BigInt::one(), BigInt::from(10).pow(12)));
        assert!(!d.square_is_integer());
    }
}
