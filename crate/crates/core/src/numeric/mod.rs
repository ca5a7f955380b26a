//! Exact rational and cyclotomic arithmetic with certified real enclosures.

mod cyclotomic;
mod interval;
pub mod poly;
mod root;
mod trig;

pub use cyclotomic::{Cyclotomic, DEFAULT_PRECISION};
pub use interval::RealInterval;
pub use poly::{cyclotomic_polynomial, euler_phi, QPoly};
pub use root::RootOfUnity;

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
