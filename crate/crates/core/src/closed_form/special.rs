use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactValue, TrigFn};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::exact_kernel::{bernoulli_poly, rat};

fn pow(base: i64, exp: u32) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}

fn alternating(k: u32) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::from_integer(1.into())
    } else {
        BigRational::from_integer((-1).into())
    }
}

/// `(-1)^(k-1) 4 * base^(2k) / (2k+1) * B_{2k+1}(1/4)`, the rational part of
/// both even-order shortcuts (`base = 4` for csc at 1/2, `8` for cot at 1/4).
fn even_order_quarter(k: u32, base: i64) -> BigRational {
    alternating(k - 1) * pow(base, 2 * k) * BigRational::from_integer(4.into())
        / BigRational::from_integer((2 * k as i64 + 1).into())
        * bernoulli_poly(2 * k as usize + 1).eval(&rat(1, 4))
}

/// `(-1)^k 4^(2k-1) (2^(2k) - 1) B_{2k}(0) / k`, cot of order `2k-1` at 1/4 and 3/4.
fn cot_odd_quarter(k: u32) -> BigRational {
    alternating(k) * pow(4, 2 * k - 1) * (pow(2, 2 * k) - BigRational::one())
        * bernoulli_poly(2 * k as usize).eval(&BigRational::zero())
        / BigRational::from_integer(k.into())
}

/// Dedicated shortcuts at `x = 1/2` (csc) and `x = 1/4, 3/4` (cot).
///
/// The witness lives in the same field as the general closed form at that
/// point, so results compare equal to it exactly.
pub fn special_case(function: TrigFn, order: u32, x: &BigRational) -> Result<ExactValue> {
    let unsupported = || Error::UnsupportedSpecialCase {
        function,
        order,
        x: x.clone(),
    };
    if order == 0 {
        return Err(Error::InvalidArgument("derivative order must be >= 1".into()));
    }
    let (witness_order, value) = match function {
        TrigFn::Csc if *x == rat(1, 2) => {
            let v = if order % 2 == 1 {
                BigRational::zero()
            } else {
                even_order_quarter(order / 2, 4)
            };
            (4, v)
        }
        TrigFn::Cot if *x == rat(1, 4) || *x == rat(3, 4) => {
            let v = if order % 2 == 1 {
                cot_odd_quarter(order.div_ceil(2))
            } else if *x == rat(1, 4) {
                even_order_quarter(order / 2, 8)
            } else {
                -even_order_quarter(order / 2, 8)
            };
            (8, v)
        }
        _ => return Err(unsupported()),
    };
    ExactValue::from_witness(order, CycloNum::from_rational(witness_order, value))
}
