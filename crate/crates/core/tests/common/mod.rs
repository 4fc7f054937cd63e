//! Test-only oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use trigderiv::exact_kernel::{rat, PolyRational};
use trigderiv::numeric::HighPrecisionReal;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Coefficients `G_0..G_N` (polynomials in `x`) of `e^{tx} / D(t)`, where
/// `d[j]` is the `t^j` coefficient of `D` and `d[0] = 1`.
fn divide_exp_series(d: &[BigRational], max_n: usize) -> Vec<PolyRational> {
    assert!(d[0].is_one());
    let mut g: Vec<PolyRational> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        // t^n coefficient of e^{tx} is x^n / n!
        let mut acc = PolyRational::monomial(BigRational::new(BigInt::one(), factorial(n)), n);
        for j in 1..=n {
            if !d[j].is_zero() {
                acc = &acc - &g[n - j].scale(&d[j]);
            }
        }
        g.push(acc);
    }
    g
}

/// `B_0..B_N` read off the Taylor expansion of `t e^{tx} / (e^t - 1)`.
pub fn taylor_bernoulli(max_n: usize) -> Vec<PolyRational> {
    // (e^t - 1)/t = sum_j t^j / (j+1)!
    let d: Vec<BigRational> = (0..=max_n)
        .map(|j| BigRational::new(BigInt::one(), factorial(j + 1)))
        .collect();
    divide_exp_series(&d, max_n)
        .into_iter()
        .enumerate()
        .map(|(n, g)| g.scale(&BigRational::from_integer(factorial(n))))
        .collect()
}

/// `E_0..E_N` read off the Taylor expansion of `2 e^{tx} / (e^t + 1)`.
pub fn taylor_euler(max_n: usize) -> Vec<PolyRational> {
    // (e^t + 1)/2 = 1 + sum_{j>=1} t^j / (2 j!)
    let d: Vec<BigRational> = (0..=max_n)
        .map(|j| {
            if j == 0 {
                BigRational::one()
            } else {
                BigRational::new(BigInt::one(), factorial(j) * 2)
            }
        })
        .collect();
    divide_exp_series(&d, max_n)
        .into_iter()
        .enumerate()
        .map(|(n, g)| g.scale(&BigRational::from_integer(factorial(n))))
        .collect()
}

/// `2^-bits` as an exact rational.
pub fn two_pow_neg(bits: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// `|a - b| <= 2^-bits * max(1, |b|)`, compared exactly.
pub fn close_rel(a: &HighPrecisionReal, b: &HighPrecisionReal, bits: usize) -> bool {
    let a = a.to_rational().expect("finite");
    let b = b.to_rational().expect("finite");
    let scale = if b.abs() > BigRational::one() { b.abs() } else { BigRational::one() };
    (a - &b).abs() <= scale * two_pow_neg(bits)
}

/// A fixed grid of sample points in `[-2, 2]`.
pub fn rational_grid() -> Vec<BigRational> {
    let mut v = Vec::new();
    for den in [1i64, 2, 3, 5, 7, 12] {
        for num in -2 * den..=2 * den {
            v.push(rat(num, den));
        }
    }
    v.sort();
    v.dedup();
    v
}
