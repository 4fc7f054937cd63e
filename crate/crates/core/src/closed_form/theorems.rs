use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ExactValue, TrigFn};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::exact_kernel::{bernoulli_poly, euler_poly};

/// Cyclotomic order holding `i`, `e^{2 pi i / q}` and `e^{pi i / q}`.
fn field_order(q: u64) -> u64 {
    4u64.lcm(&(2 * q))
}

fn r(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pow_rational(base: i64, exp: u32) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}

/// Accumulates `sum_j weight_j * zeta_m^{exponent_j}`.
struct RootSum {
    order: u64,
    group: Vec<BigRational>,
}

impl RootSum {
    fn new(order: u64) -> Self {
        Self {
            order,
            group: vec![BigRational::zero(); order as usize],
        }
    }

    fn push(&mut self, exponent: u64, weight: BigRational) {
        let j = (exponent % self.order) as usize;
        self.group[j] += weight;
    }

    /// `i^i_power * factor * sum` as a real exact value with `pi^n`.
    fn finish(self, n: u32, i_power: u32, factor: &BigRational) -> Result<ExactValue> {
        let m = self.order as usize;
        let shift = (i_power as usize % 4) * m / 4;
        let mut rotated = vec![BigRational::zero(); m];
        for (j, w) in self.group.into_iter().enumerate() {
            if !w.is_zero() {
                rotated[(j + shift) % m] = w * factor;
            }
        }
        let witness = CycloNum::from_group_ring(self.order, &rotated);
        ExactValue::from_witness(n, witness)
    }
}

fn check_full_window(function: TrigFn, n: u32, p: u64, q: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("derivative order must be >= 1".into()));
    }
    if p == 0 || p >= q {
        return Err(Error::InvalidArgument(format!(
            "{function}: closed form needs 1 <= p < q, got p = {p}, q = {q}"
        )));
    }
    Ok(())
}

fn check_half_window(function: TrigFn, n: u32, p: u64, q: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("derivative order must be >= 1".into()));
    }
    if q < 3 {
        return Err(Error::Domain(format!(
            "{function}: closed form needs q >= 3, got q = {q}"
        )));
    }
    if p == 0 || 2 * p >= q {
        return Err(Error::InvalidArgument(format!(
            "{function}: closed form needs 1 <= p < q/2, got p = {p}, q = {q}"
        )));
    }
    Ok(())
}

/// n-th derivative of `cot(pi x)` at `x = p/q`, `1 <= p < q`.
///
/// `i^{n+1} * 2 (2 pi q)^n / (n+1) * sum_{a=1}^q e^{2 pi i a p / q} B_{n+1}(a/q)`.
/// `p/q` need not be in lowest terms.
pub fn cot_deriv(n: u32, p: u64, q: u64) -> Result<ExactValue> {
    check_full_window(TrigFn::Cot, n, p, q)?;
    let m = field_order(q);
    let step = m / q;
    let b = bernoulli_poly(n as usize + 1);
    let mut sum = RootSum::new(m);
    for a in 1..=q {
        sum.push(a * p % q * step, b.eval(&r(a as i64, q as i64)));
    }
    let factor = pow_rational(2 * q as i64, n) * r(2, n as i64 + 1);
    sum.finish(n, n + 1, &factor)
}

/// n-th derivative of `csc(pi x)` at `x = p/q`, `1 <= p < q`.
///
/// `i^{n+1} * 2 (2 pi q)^n / (n+1) * sum_a e^{pi i (2a-1) p / q} B_{n+1}((2a-1)/(2q))`.
pub fn csc_deriv(n: u32, p: u64, q: u64) -> Result<ExactValue> {
    check_full_window(TrigFn::Csc, n, p, q)?;
    let m = field_order(q);
    let step = m / (2 * q);
    let b = bernoulli_poly(n as usize + 1);
    let mut sum = RootSum::new(m);
    for a in 1..=q {
        let odd = 2 * a - 1;
        sum.push(odd * p % (2 * q) * step, b.eval(&r(odd as i64, 2 * q as i64)));
    }
    let factor = pow_rational(2 * q as i64, n) * r(2, n as i64 + 1);
    sum.finish(n, n + 1, &factor)
}

/// n-th derivative of `tan(pi x)` at `x = p/q`, `q >= 3`, `1 <= p < q/2`.
///
/// `i^{n+1} (2 pi q)^n sum_a (-1)^{a-1} e^{2 pi i a p / q} w_a` with
/// `w_a = -E_n(a/q)` for odd `q` and `2 B_{n+1}(a/q) / (n+1)` for even `q`.
pub fn tan_deriv(n: u32, p: u64, q: u64) -> Result<ExactValue> {
    check_half_window(TrigFn::Tan, n, p, q)?;
    let m = field_order(q);
    let step = m / q;
    let odd_q = q % 2 == 1;
    let e = euler_poly(n as usize);
    let b = bernoulli_poly(n as usize + 1);
    let b_scale = r(2, n as i64 + 1);
    let mut sum = RootSum::new(m);
    for a in 1..=q {
        let x = r(a as i64, q as i64);
        let w = if odd_q { -e.eval(&x) } else { b.eval(&x) * &b_scale };
        let w = if a % 2 == 1 { w } else { -w };
        sum.push(a * p % q * step, w);
    }
    sum.finish(n, n + 1, &pow_rational(2 * q as i64, n))
}

/// n-th derivative of `sec(pi x)` at `x = p/q`, `q >= 3`, `1 <= p < q/2`.
///
/// `i^n (2 pi q)^n sum_a (-1)^{a-1} e^{pi i (2a-1) p / q} w_a` with
/// `w_a = E_n((2a-1)/(2q))` for odd `q` and `-2 B_{n+1}((2a-1)/(2q)) / (n+1)`
/// for even `q`.
pub fn sec_deriv(n: u32, p: u64, q: u64) -> Result<ExactValue> {
    check_half_window(TrigFn::Sec, n, p, q)?;
    let m = field_order(q);
    let step = m / (2 * q);
    let odd_q = q % 2 == 1;
    let e = euler_poly(n as usize);
    let b = bernoulli_poly(n as usize + 1);
    let b_scale = -r(2, n as i64 + 1);
    let mut sum = RootSum::new(m);
    for a in 1..=q {
        let odd = 2 * a - 1;
        let x = r(odd as i64, 2 * q as i64);
        let w = if odd_q { e.eval(&x) } else { b.eval(&x) * &b_scale };
        let w = if a % 2 == 1 { w } else { -w };
        sum.push(odd * p % (2 * q) * step, w);
    }
    sum.finish(n, n, &pow_rational(2 * q as i64, n))
}

/// Dispatches to the closed form for `function`.
pub fn theorem_deriv(function: TrigFn, n: u32, p: u64, q: u64) -> Result<ExactValue> {
    match function {
        TrigFn::Cot => cot_deriv(n, p, q),
        TrigFn::Csc => csc_deriv(n, p, q),
        TrigFn::Tan => tan_deriv(n, p, q),
        TrigFn::Sec => sec_deriv(n, p, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{TrigKind, TrigSum};
    use crate::exact_kernel::{int, rat};

    fn constant(v: &ExactValue) -> BigRational {
        v.sum.as_rational().expect("rational value")
    }

    #[test]
    fn cot_spot_values() {
        let v = cot_deriv(1, 1, 2).unwrap();
        assert_eq!(v.pi_power, 1);
        assert_eq!(v.sum, TrigSum::constant(int(-1)));
        assert_eq!(constant(&cot_deriv(2, 1, 4).unwrap()), int(4));
        assert_eq!(constant(&cot_deriv(1, 1, 4).unwrap()), int(-2));
    }

    #[test]
    fn csc_spot_values() {
        assert!(csc_deriv(1, 1, 2).unwrap().is_zero());
        assert_eq!(constant(&csc_deriv(2, 1, 2).unwrap()), int(1));
        // -pi csc(pi/3) cot(pi/3) = -2 pi / 3
        assert_eq!(constant(&csc_deriv(1, 1, 3).unwrap()), rat(-2, 3));
    }

    #[test]
    fn tan_spot_values() {
        assert_eq!(constant(&tan_deriv(1, 1, 3).unwrap()), int(4));
        assert_eq!(constant(&tan_deriv(1, 1, 4).unwrap()), int(2));
    }

    #[test]
    fn sec_spot_values() {
        // 2 sqrt(3) = 4 cos(pi/6)
        let v = sec_deriv(1, 1, 3).unwrap();
        assert_eq!(v.sum, TrigSum::from_terms([(int(4), TrigKind::Cos, rat(1, 6))]));
        assert_eq!(constant(&sec_deriv(2, 1, 3).unwrap()), int(14));
        // sqrt(2) = 2 cos(pi/4)
        let v = sec_deriv(1, 1, 4).unwrap();
        assert_eq!(v.sum, TrigSum::from_terms([(int(2), TrigKind::Cos, rat(1, 4))]));
    }

    #[test]
    fn witness_order() {
        assert_eq!(cot_deriv(3, 1, 3).unwrap().witness.order(), 12);
        assert_eq!(tan_deriv(3, 1, 4).unwrap().witness.order(), 8);
        assert_eq!(sec_deriv(3, 2, 5).unwrap().witness.order(), 20);
    }

    #[test]
    fn window_errors() {
        assert!(matches!(cot_deriv(1, 0, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(cot_deriv(1, 3, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(cot_deriv(0, 1, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(tan_deriv(1, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(tan_deriv(1, 2, 4), Err(Error::InvalidArgument(_))));
        assert!(matches!(sec_deriv(1, 2, 3), Err(Error::InvalidArgument(_))));
    }
}
