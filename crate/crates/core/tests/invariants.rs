mod common;

use num_rational::BigRational;
use num_traits::{One, Signed};

use trigderiv::closed_form::{cot_deriv, evaluate, theorem_deriv, DerivativeQuery, TrigFn};
use trigderiv::exact_kernel::{bernoulli_poly, int, rat};
use trigderiv::numeric::HighPrecisionReal;
use trigderiv::oracle::{deriv_poly, eval_exact, eval_oracle_at};

use common::{close_rel, two_pow_neg};

#[test]
fn cot_reflection_parity() {
    for q in 2..=10u64 {
        for p in 1..q {
            for n in 1..=8u32 {
                let a = eval_exact(&cot_deriv(n, p, q).unwrap(), 256);
                let b = eval_exact(&cot_deriv(n, q - p, q).unwrap(), 256);
                let expected = if n % 2 == 1 { a } else { a.neg() };
                assert!(close_rel(&b, &expected, 200), "n={n} p={p} q={q}");
            }
        }
    }
}

#[test]
fn sum_and_witness_agree() {
    for f in TrigFn::ALL {
        for (p, q) in [(1, 3), (2, 5), (1, 7), (3, 8), (5, 12)] {
            if f.is_half_window() && 2 * p >= q {
                continue;
            }
            let v = theorem_deriv(f, 4, p, q).unwrap();
            let from_sum = v.sum.eval(256);
            let from_witness = v.witness.to_complex_float(256);
            assert!(close_rel(&from_sum, &from_witness.re, 220), "{f} {p}/{q}");
            assert!(close_rel(&from_witness.im, &HighPrecisionReal::zero(256), 220));
        }
    }
}

#[test]
fn cosecant_real_forms() {
    // odd order via cos, even order via sin, both over (2a-1)/(2q)
    let bits = 320;
    let pi = HighPrecisionReal::pi(bits);
    for (p, q) in [(1i64, 3i64), (2, 5), (1, 6), (3, 7), (5, 8)] {
        for k in 1..=4u32 {
            for order in [2 * k - 1, 2 * k] {
                let even = order % 2 == 0;
                let poly = bernoulli_poly(order as usize + 1);
                let mut acc = HighPrecisionReal::zero(bits);
                for a in 1..=q {
                    let b = HighPrecisionReal::from_rational(&poly.eval(&rat(2 * a - 1, 2 * q)), bits);
                    let theta = pi.mul_rational(&rat((2 * a - 1) * p, q));
                    let t = if even { theta.sin() } else { theta.cos() };
                    acc = acc.add(&b.mul(&t));
                }
                let two_pi_q = pi.mul_rational(&int(2 * q)).powi(order as usize);
                let sign = if (k % 2 == 1) == even { 1 } else { -1 };
                let prefactor = if even {
                    rat(2 * sign, 2 * k as i64 + 1)
                } else {
                    rat(sign, k as i64)
                };
                let expected = acc.mul(&two_pi_q).mul_rational(&prefactor);
                let query = DerivativeQuery::new(TrigFn::Csc, order, rat(p, q)).unwrap();
                let got = eval_exact(&evaluate(&query).unwrap().value, 256);
                assert!(close_rel(&got, &expected, 200), "order {order} at {p}/{q}");
            }
        }
    }
}

#[test]
fn oracle_leibniz_consistency() {
    let bits = 256;
    let h = two_pow_neg(40);
    let two_h = &h * int(2);
    let points = [
        (TrigFn::Cot, rat(1, 3)),
        (TrigFn::Csc, rat(2, 7)),
        (TrigFn::Tan, rat(1, 5)),
        (TrigFn::Sec, rat(3, 8)),
        (TrigFn::Cot, rat(-5, 4)),
    ];
    for (f, x) in points {
        for n in 1..=5u32 {
            let at = |x: &BigRational, n| eval_oracle_at(f, n, x, bits).unwrap().to_rational().unwrap();
            let central = (at(&(&x + &h), n) - at(&(&x - &h), n)) / &two_h;
            let derivative = at(&x, n + 1);
            // truncation error h^2/6 |f^(n+3)|, doubled for slack, plus rounding
            let allowed = &h * &h * (at(&x, n + 3).abs() + BigRational::one()) / int(3) + two_pow_neg(150);
            assert!((central - derivative).abs() <= allowed, "{f} n={n} x={x}");
        }
    }
}

#[test]
fn deriv_poly_parity_to_fifteen() {
    for n in 1..=15 {
        assert!(deriv_poly(TrigFn::Csc, n).x_degrees_have_parity(true));
        assert!(deriv_poly(TrigFn::Sec, n).x_degrees_have_parity(true));
        let odd = n % 2 == 0;
        assert!(deriv_poly(TrigFn::Cot, n).total_degrees_have_parity(odd));
        assert!(deriv_poly(TrigFn::Tan, n).total_degrees_have_parity(odd));
    }
}

#[test]
fn normalization_covers_all_branches() {
    // every residue of x mod 2 lands on the same value as the oracle
    for f in TrigFn::ALL {
        for num in -23..=23i64 {
            let x = rat(num, 6);
            let Ok(query) = DerivativeQuery::new(f, 3, x.clone()) else { continue };
            let Ok(ev) = evaluate(&query) else {
                assert!(f.is_half_window() && x.is_integer());
                continue;
            };
            let oracle = eval_oracle_at(f, 3, &x, 256).unwrap();
            assert!(close_rel(&eval_exact(&ev.value, 256), &oracle, 200), "{f} at {x}");
        }
    }
}
