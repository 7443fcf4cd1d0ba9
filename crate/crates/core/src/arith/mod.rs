//! Exact arithmetic: big integers, reduced rationals, dense integer
//! polynomials and truncated rational power series.
//!
//! Integers and rationals are the `num` types directly; polynomials and
//! series are small dense wrappers over them.

mod poly;
mod series;

pub use poly::IntPoly;
pub use series::RatSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// `base^exp` with `0^0 = 1`.
pub fn pow_u(base: &BigInt, exp: u32) -> BigInt {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}
