//! Fixed-point values of cos and sin at rational multiples of 2π.
//!
//! Everything is an integer scaled by 2^w. Each table carries an error bound in
//! units of 2^-w covering every entry; the bound is deliberately loose.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub(crate) struct UnitCircle {
    pub cos: Vec<BigInt>,
    pub sin: Vec<BigInt>,
    pub err_ulps: BigInt,
}

/// arctan(1/x) * 2^w, with the number of truncated terms.
fn atan_inv(x: u64, w: u32) -> (BigInt, u64) {
    let one = BigInt::from(1) << w;
    let x2 = BigInt::from(x * x);
    let mut power = &one / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // one truncation per term plus one per power step
    (sum, 2 * k + 2)
}

/// pi * 2^w and its error in ulps (Machin's formula).
fn pi_fixed(w: u32) -> (BigInt, u64) {
    let (a, ea) = atan_inv(5, w);
    let (b, eb) = atan_inv(239, w);
    (a * 16 - b * 4, 16 * ea + 4 * eb)
}

fn taylor(theta: &BigInt, w: u32, sine: bool) -> (BigInt, u64) {
    let theta2: BigInt = (theta * theta) >> w;
    let mut term = if sine { theta.clone() } else { BigInt::from(1) << w };
    let mut sum = term.clone();
    let mut k: u64 = 0;
    loop {
        let (a, b) = if sine { (2 * k + 2, 2 * k + 3) } else { (2 * k + 1, 2 * k + 2) };
        term = -((&term * &theta2) >> w) / BigInt::from(a * b);
        k += 1;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    (sum, 16 * k * k + 16)
}

fn table(n: u32, len: usize, w: u32) -> UnitCircle {
    let (pi, epi) = pi_fixed(w);
    let mut cos = Vec::with_capacity(len);
    let mut sin = Vec::with_capacity(len);
    let mut worst = 0u64;
    for j in 0..len as i64 {
        let mut jr = j % n as i64;
        if 2 * jr > n as i64 {
            jr -= n as i64;
        }
        let theta = (&pi * BigInt::from(2 * jr)) / BigInt::from(n);
        let (c, ec) = taylor(&theta, w, false);
        let (s, es) = taylor(&theta, w, true);
        worst = worst.max(ec.max(es));
        cos.push(c);
        sin.push(s);
    }
    // angle error is at most epi + 1 ulps; cos and sin are 1-Lipschitz
    let err = BigInt::from(worst + epi + 2);
    debug_assert!(!err.is_negative());
    UnitCircle { cos, sin, err_ulps: err }
}

type Key = (u32, usize, u32);

fn cache() -> &'static RwLock<HashMap<Key, Arc<UnitCircle>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<UnitCircle>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// cos(2πj/n), sin(2πj/n) for j < len, scaled by 2^w.
pub(crate) fn unit_circle(n: u32, len: usize, w: u32) -> Arc<UnitCircle> {
    let key = (n, len, w);
    if let Some(t) = cache().read().expect("poisoned cache").get(&key) {
        return Arc::clone(t);
    }
    let t = Arc::new(table(n, len, w));
    cache()
        .write()
        .expect("poisoned cache")
        .entry(key)
        .or_insert_with(|| Arc::clone(&t));
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn to_f64(x: &BigInt, w: u32) -> f64 {
        (x >> (w - 52)).to_f64().unwrap() / (1u64 << 52) as f64
    }

    #[test]
    fn pi_matches_double() {
        let (pi, _) = pi_fixed(200);
        assert!((to_f64(&pi, 200) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn table_matches_libm() {
        let t = unit_circle(9, 9, 160);
        for j in 0..9 {
            let a = 2.0 * std::f64::consts::PI * j as f64 / 9.0;
            assert!((to_f64(&t.cos[j], 160) - a.cos()).abs() < 1e-14);
            assert!((to_f64(&t.sin[j], 160) - a.sin()).abs() < 1e-14);
        }
    }
}
