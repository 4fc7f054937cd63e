use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_kernel::PolyRational;

pub(crate) fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial division.
pub fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Arc<PolyRational>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<PolyRational>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The m-th cyclotomic polynomial, from `x^m - 1 = prod_{d | m} Phi_d(x)`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: u64) -> Arc<PolyRational> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().read().expect("cyclotomic cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let mut coeffs = vec![0i64; m as usize + 1];
    coeffs[0] = -1;
    coeffs[m as usize] = 1;
    let mut quotient = PolyRational::from_i64_coeffs(&coeffs);
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        let (q, r) = quotient
            .div_rem(&cyclotomic_poly(d))
            .expect("cyclotomic polynomials are nonzero");
        debug_assert!(r.is_zero());
        quotient = q;
    }
    let mut cache = cyclotomic_cache().write().expect("cyclotomic cache poisoned");
    Arc::clone(cache.entry(m).or_insert_with(|| Arc::new(quotient)))
}

/// Per-order reduction data for `Q(zeta_m)`.
#[derive(Debug)]
pub(crate) struct Field {
    pub order: u64,
    pub degree: usize,
    /// `powers[j]` holds the canonical coordinates of `zeta^j`, `0 <= j < m`.
    pub powers: Vec<Vec<BigInt>>,
}

impl Field {
    fn build(order: u64) -> Self {
        let phi = cyclotomic_poly(order);
        let degree = phi.degree().expect("nonzero") ;
        // low coefficients of x^degree = -(phi - x^degree)
        let tail: Vec<BigInt> = (0..degree)
            .map(|k| -phi.coeff(k).to_integer())
            .collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![BigInt::zero(); degree];
        if degree > 0 {
            current[0] = BigInt::from(1);
        }
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x, then fold the overflow coefficient back
            let top = current.pop().unwrap_or_default();
            current.insert(0, BigInt::zero());
            for (c, t) in current.iter_mut().zip(&tail) {
                *c += &top * t;
            }
        }
        Self {
            order,
            degree,
            powers,
        }
    }
}

pub(crate) fn field(order: u64) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.read().expect("field cache poisoned").get(&order) {
        return Arc::clone(f);
    }
    let built = Field::build(order);
    let mut w = cache.write().expect("field cache poisoned");
    Arc::clone(w.entry(order).or_insert_with(|| Arc::new(built)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1).to_string(), "x - 1");
        assert_eq!(cyclotomic_poly(2).to_string(), "x + 1");
        assert_eq!(cyclotomic_poly(12).to_string(), "x^4 - x^2 + 1");
        assert_eq!(cyclotomic_poly(8).to_string(), "x^4 + 1");
        assert_eq!(cyclotomic_poly(9).to_string(), "x^6 + x^3 + 1");
    }

    #[test]
    fn product_over_divisors_and_degree() {
        for m in 1..=48u64 {
            let mut prod = PolyRational::one();
            for d in divisors(m) {
                prod = &prod * &cyclotomic_poly(d);
            }
            let mut coeffs = vec![0i64; m as usize + 1];
            coeffs[0] = -1;
            coeffs[m as usize] = 1;
            assert_eq!(prod, PolyRational::from_i64_coeffs(&coeffs), "m = {m}");
            let phi = cyclotomic_poly(m);
            assert_eq!(phi.degree(), Some(totient(m) as usize), "m = {m}");
            assert!(phi.is_integral());
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn power_table_wraps() {
        let f = field(6);
        // zeta_6^3 = -1
        assert_eq!(f.powers[3], vec![BigInt::from(-1), BigInt::zero()]);
    }
}
