//! Integer and rational univariate polynomials.
//!
//! Coefficients are stored lowest degree first. The cyclotomic polynomials are
//! cached process-wide; the cache is append-only so concurrent readers always
//! observe a complete entry.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Prime factorisation by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u32) -> usize {
    factorize(n as u64)
        .into_iter()
        .fold(1u64, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1)) as usize
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Cached n-th cyclotomic polynomial with machine-integer coefficients.
pub(crate) fn cyclotomic_i64(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().read().expect("poisoned cache").get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by every Phi_d with d a proper divisor of n.
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_i64(d);
        num = exact_div_i128(&num, &div);
    }
    let poly: Arc<Vec<i64>> = Arc::new(
        num.into_iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
            .collect(),
    );
    cache()
        .write()
        .expect("poisoned cache")
        .entry(n)
        .or_insert_with(|| Arc::clone(&poly));
    poly
}

fn exact_div_i128(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quo
}

/// The n-th cyclotomic polynomial, monic of degree phi(n).
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    cyclotomic_i64(n).iter().map(|&c| BigInt::from(c)).collect()
}

/// Dense polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        QPoly::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at x, by integer Horner evaluation when the
    /// coefficients are integers.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = if self.coeffs.iter().all(|c| c.is_integer()) {
            let (n, d) = (x.numer(), x.denom());
            let mut scale = BigInt::one();
            let mut acc = BigInt::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * n + c.numer() * &scale;
                scale *= d;
            }
            BigRational::from_integer(acc)
        } else {
            self.eval(x)
        };
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, other: &QPoly) -> (QPoly, QPoly) {
        let dd = other.degree().expect("division by zero polynomial");
        let lead = other.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::new(vec![]), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in other.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quo), QPoly::new(rem))
    }

    pub fn rem(&self, other: &QPoly) -> QPoly {
        self.div_rem(other).1
    }

    fn monic(&self) -> QPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => QPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// The positive multiple with coprime integer coefficients.
    fn primitive(&self) -> QPoly {
        let den = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() {
            return self.clone();
        }
        QPoly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &content)).collect())
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors.
    pub fn squarefree(&self) -> QPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Sturm chain p, p', -rem(p, p'), ..., each term scaled by a positive
    /// constant to keep coefficients small.
    pub fn sturm_chain(&self) -> Vec<QPoly> {
        let mut chain = vec![self.primitive(), self.derivative().primitive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(QPoly::new(r.coeffs.into_iter().map(|c| -c).collect()).primitive());
        }
        chain
    }
}

/// Number of sign changes of a Sturm chain evaluated at `x` (zeros skipped).
pub fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// True when the monic integer polynomial `divisor` divides `p` exactly.
pub fn int_divides(p: &[BigInt], divisor: &[BigInt]) -> bool {
    let dd = divisor.len() - 1;
    if !divisor[dd].is_one() {
        let pq = QPoly::from_ints(p);
        let dq = QPoly::from_ints(divisor);
        return pq.rem(&dq).is_zero();
    }
    let mut rem = p.to_vec();
    if rem.len() <= dd {
        return rem.iter().all(|c| c.is_zero());
    }
    for i in (0..rem.len() - dd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            for (j, d) in divisor.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
    }
    rem.iter().all(|c| c.is_zero())
}

pub fn eval_int_poly(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
