//! Exact elements of cyclotomic fields.
//!
//! An element of conductor n is stored as a polynomial in ζ_n of degree below
//! φ(n) with a common positive denominator. The representation is reduced
//! modulo Φ_n after every operation, so it is unique for a fixed conductor.
//! Binary operations move both operands to the lcm of their conductors.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::interval::RealInterval;
use super::poly::{cyclotomic_i64, euler_phi, factorize, lcm};
use super::trig::unit_circle;
use crate::error::{Error, Result};

/// Default working precision (bits) for ordering decisions.
pub const DEFAULT_PRECISION: u32 = 128;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

fn reduce_mod_phi(n: u32, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_i64(n);
    let d = phi.len() - 1;
    if v.len() > d {
        for i in (d..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (j, &p) in phi.iter().enumerate().take(d) {
                if p != 0 {
                    v[i - d + j] -= &c * p;
                }
            }
        }
        v.truncate(d);
    }
    v.resize(d, BigInt::zero());
    v
}

impl Cyclotomic {
    fn from_parts(n: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut c = Cyclotomic { n, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for x in &mut self.num {
                *x = -&*x;
            }
        }
        let mut g = self.den.clone();
        for x in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if self.num.iter().all(|x| x.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for x in &mut self.num {
                *x = &*x / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Element of ℚ(ζ_n) from power-basis coefficients; extra coefficients
    /// beyond degree φ(n) are reduced modulo Φ_n.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("conductor must be positive".into()));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::from_parts(n, reduce_mod_phi(n, num), den))
    }

    /// Sum of integer multiples of powers of ζ_n, exponents taken mod n.
    pub fn from_exponents(n: u32, terms: &[(i64, i64)]) -> Self {
        let mut v = vec![BigInt::zero(); n as usize];
        for &(e, c) in terms {
            v[e.rem_euclid(n as i64) as usize] += c;
        }
        Self::from_parts(n, reduce_mod_phi(n, v), BigInt::one())
    }

    pub fn zero() -> Self {
        Cyclotomic { n: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Cyclotomic { n: 1, num: vec![BigInt::from(k)], den: BigInt::one() }
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Cyclotomic { n: 1, num: vec![k], den: BigInt::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn ratio(a: i64, b: i64) -> Self {
        Self::from_parts(1, vec![BigInt::from(a)], BigInt::from(b))
    }

    /// ζ_n^k with ζ_n = e^{2πi/n}.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_exponents(n, &[(k, 1)])
    }

    pub fn zeta(n: u32) -> Self {
        Self::root_of_unity(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.den.is_one() && self.num[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|x| x.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.den.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conj() == *self
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num[0].clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|k| k.to_i64())
    }

    /// The same element written over ℚ(ζ_m); `m` must be a multiple of the conductor.
    pub fn raise(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "conductor {m} is not a multiple of {}", self.n);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut v = vec![BigInt::zero(); m as usize];
        for (j, c) in self.num.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Cyclotomic { n: m, num: reduce_mod_phi(m, v), den: self.den.clone() }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.n, other.n);
        (self.raise(m), other.raise(m))
    }

    /// Rewrites the element over the smallest conductor that contains it.
    pub fn minimize(&self) -> Self {
        if self.is_rational() {
            return Self::from_parts(1, vec![self.num[0].clone()], self.den.clone());
        }
        let mut cur = self.clone();
        'outer: loop {
            for (p, _) in factorize(cur.n as u64) {
                let m = cur.n / p as u32;
                if let Some(smaller) = cur.descend(m) {
                    cur = smaller;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Writes the element over ℚ(ζ_m) for m | n when it lies there.
    fn descend(&self, m: u32) -> Option<Self> {
        if m == 0 || self.n % m != 0 {
            return None;
        }
        let dm = euler_phi(m);
        // images of the basis of ℚ(ζ_m) inside ℚ(ζ_n)
        let basis: Vec<Cyclotomic> = (0..dm)
            .map(|j| Self::root_of_unity(m, j as i64).raise(self.n))
            .collect();
        let rows = self.num.len();
        let mut mat: Vec<Vec<BigRational>> = (0..rows)
            .map(|i| {
                let mut row: Vec<BigRational> = basis
                    .iter()
                    .map(|b| BigRational::new(b.num[i].clone(), b.den.clone()))
                    .collect();
                row.push(BigRational::new(self.num[i].clone(), self.den.clone()));
                row
            })
            .collect();
        let sol = solve_consistent(&mut mat, dm)?;
        Some(Self::from_coeffs(m, &sol).expect("positive conductor"))
    }

    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.n as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n: self.n });
        }
        let mut v = vec![BigInt::zero(); self.n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[(j as i64 * k).rem_euclid(n) as usize] += c;
            }
        }
        Ok(Cyclotomic { n: self.n, num: reduce_mod_phi(self.n, v), den: self.den.clone() })
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        if self.n <= 2 {
            return self.clone();
        }
        self.galois(self.n as i64 - 1).expect("n - 1 is a unit")
    }

    /// Product over all Galois conjugates; a rational number.
    pub fn norm(&self) -> BigRational {
        let n = self.n as i64;
        let mut acc = Self::one();
        for k in 1..n.max(2) {
            if k.gcd(&n) == 1 {
                acc = &acc * &self.galois(k).expect("coprime");
            }
        }
        acc.to_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(&(BigRational::one() / q)));
        }
        let n = self.n as i64;
        let mut others = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k).expect("coprime");
            }
        }
        let norm = (self * &others).to_rational().expect("norm is rational");
        Ok(&others * &Self::from_rational(&(BigRational::one() / norm)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(
            self.n,
            self.num.iter().map(|x| x * q.numer()).collect(),
            &self.den * q.denom(),
        )
    }

    /// True when the element is a root of unity, i.e. ±ζ_n^k for some k.
    pub fn is_root_of_unity(&self) -> bool {
        let m = if self.n % 2 == 1 { 2 * self.n } else { self.n };
        let x = self.raise(m);
        match x.pow(m as i64) {
            Ok(p) => p.is_one(),
            Err(_) => false,
        }
    }

    /// Exponent k with self = ζ_m^k (m the even closure of the conductor).
    pub fn root_exponent(&self) -> Option<(u32, u32)> {
        let m = if self.n % 2 == 1 { 2 * self.n } else { self.n };
        let x = self.raise(m);
        (0..m).find(|&k| Self::root_of_unity(m, k as i64) == x).map(|k| (k, m))
    }

    /// The positive square root of a positive integer, built from Gauss sums.
    pub fn sqrt_integer(m: u64) -> Result<Self> {
        if m == 0 {
            return Ok(Self::zero());
        }
        let mut square = 1u64;
        let mut free = Vec::new();
        for (p, e) in factorize(m) {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free.push(p);
            }
        }
        let mut acc = Self::from_int(square as i64);
        for p in free {
            acc = &acc * &sqrt_prime(p);
        }
        match acc.sign_real() {
            Some(Ordering::Greater) => Ok(acc),
            Some(Ordering::Less) => Ok(-acc),
            _ => Err(Error::Inconsistent("square root embedding undecided".into())),
        }
    }

    /// Certified enclosures of the real and imaginary parts under ζ_n ↦ e^{2πi/n}.
    pub fn embed(&self, precision: u32) -> (RealInterval, RealInterval) {
        if let Some(q) = self.to_rational() {
            return (RealInterval::point(q), RealInterval::point(BigRational::zero()));
        }
        let w = precision.max(32) + 64;
        let table = unit_circle(self.n, self.num.len(), w);
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        let mut err = BigInt::zero();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            re += c * &table.cos[j];
            im += c * &table.sin[j];
            err += c.abs() * &table.err_ulps;
        }
        let scale = &self.den << w;
        let rad = BigRational::new(err, scale.clone());
        (
            RealInterval::around(BigRational::new(re, scale.clone()), rad.clone()),
            RealInterval::around(BigRational::new(im, scale), rad),
        )
    }

    /// Sign of a real element, refining precision until decided.
    pub fn sign_real(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        let mut prec = DEFAULT_PRECISION;
        loop {
            let (re, _) = self.embed(prec);
            match re.sign() {
                Some(1) => return Some(Ordering::Greater),
                Some(-1) => return Some(Ordering::Less),
                _ => prec *= 2,
            }
        }
    }

    /// Ordering of two real elements; `None` if either is not real.
    pub fn cmp_real(&self, other: &Self) -> Option<Ordering> {
        (self - other).sign_real()
    }

    /// Approximate complex value (display only).
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let (re, im) = self.embed(64);
        (re.to_f64(), im.to_f64())
    }
}

fn sqrt_prime(p: u64) -> Cyclotomic {
    if p == 2 {
        return Cyclotomic::from_exponents(8, &[(1, 1), (-1, 1)]);
    }
    let terms: Vec<(i64, i64)> = (1..p)
        .map(|k| (k as i64, legendre(k, p)))
        .collect();
    let g = Cyclotomic::from_exponents(p as u32, &terms);
    if p % 4 == 1 {
        g
    } else {
        // g² = -p, so g = ±i√p
        &g * &Cyclotomic::root_of_unity(4, 3)
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else if result == 0 {
        0
    } else {
        -1
    }
}

/// Solves an overdetermined consistent system [A | b] for its first `cols`
/// unknowns; `None` when inconsistent. Free variables are set to zero.
fn solve_consistent(mat: &mut [Vec<BigRational>], cols: usize) -> Option<Vec<BigRational>> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = BigRational::one() / &mat[r][c];
        for x in mat[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..=cols {
                    let t = &f * &mat[r][j];
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !mat[i][cols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][cols].clone();
    }
    Some(sol)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = if self.n == other.n { (self.clone(), other.clone()) } else { self.common(other) };
        let num = if a.den == b.den {
            a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect()
        } else {
            a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect()
        };
        let den = if a.den == b.den { a.den.clone() } else { &a.den * &b.den };
        Cyclotomic::from_parts(a.n, num, den)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = self.to_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.to_rational() {
            return self.scale(&q);
        }
        let (a, b) = if self.n == other.n { (self.clone(), other.clone()) } else { self.common(other) };
        let n = a.n as usize;
        let mut v = vec![BigInt::zero(); n];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    v[(i + j) % n] += x * y;
                }
            }
        }
        Cyclotomic::from_parts(a.n, reduce_mod_phi(a.n, v), &a.den * &b.den)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, num: self.num.iter().map(|x| -x).collect(), den: self.den.clone() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$f(&other)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, other: &Cyclotomic) -> Cyclotomic {
                (&self).$f(other)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimize();
        if let Some(q) = m.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (j, c) in m.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), m.den.clone());
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let z = match j {
                0 => String::new(),
                1 => format!("z{}", m.n),
                _ => format!("z{}^{}", m.n, j),
            };
            if j == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{a}*{z}")?;
            }
        }
        Ok(())
    }
}

// JSON: {"n": conductor, "c": [[num, den], ...]} with φ(n) reduced pairs.

fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(k) => serde_json::Value::from(k),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer number {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer string {s:?}")),
        other => Err(format!("expected integer, found {other}")),
    }
}

impl Cyclotomic {
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .coeffs()
            .iter()
            .map(|q| serde_json::Value::Array(vec![int_to_json(q.numer()), int_to_json(q.denom())]))
            .collect();
        serde_json::json!({ "n": self.n, "c": pairs })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: String| Error::Malformed(m);
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .filter(|&n| n >= 1 && n <= u32::MAX as u64)
            .ok_or_else(|| bad("cyclotomic: missing or invalid \"n\"".into()))? as u32;
        let c = v
            .get("c")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("cyclotomic: missing \"c\"".into()))?;
        if c.len() != euler_phi(n) {
            return Err(bad(format!(
                "cyclotomic: conductor {n} needs {} coefficients, found {}",
                euler_phi(n),
                c.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(c.len());
        for (i, pair) in c.iter().enumerate() {
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad(format!("cyclotomic: c[{i}] is not a [num, den] pair")))?;
            let p = int_from_json(&arr[0]).map_err(|e| bad(format!("cyclotomic: c[{i}][0]: {e}")))?;
            let q = int_from_json(&arr[1]).map_err(|e| bad(format!("cyclotomic: c[{i}][1]: {e}")))?;
            if !q.is_positive() || !p.gcd(&q).is_one() {
                return Err(bad(format!("cyclotomic: c[{i}] = {p}/{q} is not in lowest terms")));
            }
            coeffs.push(BigRational::new(p, q));
        }
        Self::from_coeffs(n, &coeffs)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Cyclotomic::from_json(&v).map_err(de::Error::custom)
    }
}
