mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use trigderiv::cyclo::CycloNum;
use trigderiv::exact_kernel::{bernoulli_poly, euler_poly, rat, PolyRational};
use trigderiv::numeric::HighPrecisionReal;

use common::two_pow_neg;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// An order `m <= 24` and a random element of that order given as group-ring
/// weights on `zeta^0 .. zeta^{m-1}`.
fn cyclo_pair() -> impl Strategy<Value = (CycloNum, CycloNum)> {
    (1u64..=24).prop_flat_map(|m| {
        let weights = || prop::collection::vec(small_rational(), m as usize);
        (weights(), weights()).prop_map(move |(a, b)| {
            (CycloNum::from_group_ring(m, &a), CycloNum::from_group_ring(m, &b))
        })
    })
}

fn within(a: &HighPrecisionReal, b: &HighPrecisionReal, bits: usize) -> bool {
    let a = a.to_rational().unwrap();
    let b = b.to_rational().unwrap();
    let scale = if b.abs() > BigRational::one() { b.abs() } else { BigRational::one() };
    (a - b).abs() <= scale * two_pow_neg(bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclo_product_matches_numeric_product((z, w) in cyclo_pair()) {
        let exact = z.mul(&w).unwrap().to_complex_float(256);
        let product = z.to_complex_float(300).mul(&w.to_complex_float(300));
        prop_assert!(within(&exact.re, &product.re, 216));
        prop_assert!(within(&exact.im, &product.im, 216));
    }

    #[test]
    fn real_elements_have_no_imaginary_part((z, _w) in cyclo_pair()) {
        let real = z.add(&z.conj()).unwrap();
        prop_assert!(real.is_real());
        let im = real.to_complex_float(256).im.to_rational().unwrap();
        prop_assert!(im.abs() <= two_pow_neg(200));
        if z.is_real() {
            prop_assert!(z.to_complex_float(256).im.to_rational().unwrap().abs() <= two_pow_neg(200));
        }
    }

    #[test]
    fn conjugation_is_an_involution((z, w) in cyclo_pair()) {
        prop_assert_eq!(z.conj().conj(), z.clone());
        prop_assert_eq!(z.mul(&w).unwrap().conj(), z.conj().mul(&w.conj()).unwrap());
    }

    #[test]
    fn ring_laws((z, w) in cyclo_pair()) {
        let m = z.order();
        prop_assert_eq!(z.add(&w).unwrap(), w.add(&z).unwrap());
        prop_assert_eq!(z.mul(&w).unwrap(), w.mul(&z).unwrap());
        prop_assert!(z.sub(&z).unwrap().is_zero());
        prop_assert_eq!(z.mul(&CycloNum::one(m)).unwrap(), z.clone());
        prop_assert_eq!(z.coeffs().len() as u64, trigderiv::cyclo::totient(m));
    }

    #[test]
    fn lifting_commutes_with_arithmetic((z, w) in cyclo_pair(), k in 1u64..=3) {
        let big = z.order() * k;
        let lifted = z.lift(big).unwrap().mul(&w.lift(big).unwrap()).unwrap();
        prop_assert_eq!(lifted, z.mul(&w).unwrap().lift(big).unwrap());
    }

    #[test]
    fn rationals_stay_reduced(a in small_rational(), b in small_rational()) {
        for r in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }
    }

    #[test]
    fn horner_matches_power_sum(n in 0usize..=20, x in small_rational()) {
        for poly in [bernoulli_poly(n), euler_poly(n)] {
            let direct = poly
                .coeffs()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (k, c)| acc + c * num_traits::pow(x.clone(), k));
            prop_assert_eq!(poly.eval(&x), direct);
        }
    }

    #[test]
    fn polynomial_division_reconstructs(a in prop::collection::vec(-9i64..=9, 1..8), b in prop::collection::vec(-9i64..=9, 1..5)) {
        let a = PolyRational::from_i64_coeffs(&a);
        let b = PolyRational::from_i64_coeffs(&b);
        if let Some((q, r)) = a.div_rem(&b) {
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        } else {
            prop_assert!(b.is_zero());
        }
    }

    #[test]
    fn high_precision_round_trip(num in -1_000_000i64..1_000_000, den in 1i64..1_000_000) {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        let x = HighPrecisionReal::from_rational(&r, 256);
        prop_assert!((x.to_rational().unwrap() - &r).abs() <= r.abs().max(BigRational::one()) * two_pow_neg(250));
    }
}
