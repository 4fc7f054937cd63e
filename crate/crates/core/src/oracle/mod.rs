//! Independent checks for the closed forms.
//!
//! The derivative oracle differentiates `cot`, `csc`, `tan` and `sec` with
//! the elementary substitution rules and evaluates the resulting polynomial
//! with arbitrary-precision `sin` and `cos`. It shares nothing with the
//! Bernoulli/Euler path except the [`TrigFn`] tag.
//!
//! The series oracle sums the zeta-type series directly and checks the
//! decompositions into Hurwitz zeta values that the closed forms rest on.

mod deriv_poly;
mod identities;
mod series;
mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use deriv_poly::{deriv_poly, DerivPoly};
pub use identities::{check_decompositions, DecompositionReport, DecompositionRow, Identity};
pub use series::{
    alt_hurwitz_zeta, chi, chi_star, hurwitz_zeta, lerch_l, lerch_l_star, sum_periodic_terms,
    unit_root, SeriesEstimate,
};
pub use verify::{sweep, sweep_cases, verify, verify_theorem, SweepCase, VerificationReport};

pub use crate::numeric::HighPrecisionReal;
use crate::closed_form::{ExactValue, TrigFn};
use crate::error::{Error, Result};

/// `d^n/dx^n f(pi x)` at `x = p/q` from the derivative polynomial.
pub fn eval_oracle(function: TrigFn, n: u32, p: i64, q: u64, precision_bits: usize) -> Result<HighPrecisionReal> {
    if q == 0 {
        return Err(Error::InvalidArgument("denominator must be nonzero".into()));
    }
    eval_oracle_at(function, n, &BigRational::new(p.into(), q.into()), precision_bits)
}

/// [`eval_oracle`] at an arbitrary rational point.
pub fn eval_oracle_at(function: TrigFn, n: u32, x: &BigRational, precision_bits: usize) -> Result<HighPrecisionReal> {
    let den = x.denom();
    let pole = if function.is_half_window() {
        *den == BigInt::from(2)
    } else {
        *den == BigInt::from(1)
    };
    if pole {
        return Err(Error::Pole {
            function,
            x: x.clone(),
        });
    }
    let poly = deriv_poly(function, n);
    // sin or cos near zero costs log2(q) bits per power of the state variables
    let q_bits = den.bits() as usize + 1;
    let work = precision_bits.max(64) + 32 + (n as usize + 1) * q_bits + poly.coeff_bits() as usize + 16;
    let pi = HighPrecisionReal::pi(work);
    let value = poly.eval_at(&pi.mul_rational(x));
    Ok(value.mul(&pi.powi(n as usize)).with_precision(precision_bits))
}

/// Numeric value of a closed form.
pub fn eval_exact(value: &ExactValue, precision_bits: usize) -> HighPrecisionReal {
    value.eval(precision_bits)
}
