//! Exact rational arithmetic, Bernoulli and Euler polynomials, and the
//! values of the Hurwitz zeta function and its alternating counterpart at
//! non-positive integers.

mod poly;
mod polys;

pub use num_rational::BigRational;
pub use poly::PolyRational;
pub use polys::{bernoulli_poly, euler_poly, zeta_neg, zeta_star_neg};

use num_bigint::BigInt;
use num_traits::One;

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}
