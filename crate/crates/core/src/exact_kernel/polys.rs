use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{binomial, PolyRational};
use crate::error::{Error, Result};

/// Append-only memo of polynomials indexed by degree.
///
/// Readers take the shared lock; the first caller needing a missing degree
/// takes the write lock and extends the table up to it.
struct PolyTable {
    entries: RwLock<Vec<Arc<PolyRational>>>,
    next: fn(&[Arc<PolyRational>]) -> PolyRational,
}

impl PolyTable {
    fn get(&self, n: usize) -> Arc<PolyRational> {
        if let Some(p) = self.entries.read().expect("poly cache poisoned").get(n) {
            return Arc::clone(p);
        }
        let mut entries = self.entries.write().expect("poly cache poisoned");
        while entries.len() <= n {
            let p = (self.next)(&entries);
            entries.push(Arc::new(p));
        }
        Arc::clone(&entries[n])
    }
}

// (n+1) B_n(x) = (n+1) x^n - sum_{k<n} C(n+1, k) B_k(x)
fn next_bernoulli(prev: &[Arc<PolyRational>]) -> PolyRational {
    let n = prev.len();
    let n1 = BigRational::from_integer((n as u64 + 1).into());
    let mut acc = PolyRational::monomial(n1.clone(), n);
    for (k, bk) in prev.iter().enumerate() {
        let c = BigRational::from_integer(binomial(n as u32 + 1, k as u32));
        acc = &acc - &bk.scale(&c);
    }
    acc.scale(&n1.recip())
}

// 2 E_n(x) = 2 x^n - sum_{k<n} C(n, k) E_k(x)
fn next_euler(prev: &[Arc<PolyRational>]) -> PolyRational {
    let n = prev.len();
    let mut acc = PolyRational::monomial(BigRational::from_integer(2.into()), n);
    for (k, ek) in prev.iter().enumerate() {
        let c = BigRational::from_integer(binomial(n as u32, k as u32));
        acc = &acc - &ek.scale(&c);
    }
    acc.scale(&BigRational::new(1.into(), 2.into()))
}

fn bernoulli_table() -> &'static PolyTable {
    static TABLE: OnceLock<PolyTable> = OnceLock::new();
    TABLE.get_or_init(|| PolyTable {
        entries: RwLock::new(Vec::new()),
        next: next_bernoulli,
    })
}

fn euler_table() -> &'static PolyTable {
    static TABLE: OnceLock<PolyTable> = OnceLock::new();
    TABLE.get_or_init(|| PolyTable {
        entries: RwLock::new(Vec::new()),
        next: next_euler,
    })
}

/// The Bernoulli polynomial `B_n(x)`, exact and memoized.
pub fn bernoulli_poly(n: usize) -> Arc<PolyRational> {
    bernoulli_table().get(n)
}

/// The Euler polynomial `E_n(x)`, exact and memoized.
pub fn euler_poly(n: usize) -> Arc<PolyRational> {
    euler_table().get(n)
}

fn require_positive(a: &BigRational) -> Result<()> {
    if a.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "zeta parameter must be positive, got {a}"
        )))
    }
}

/// `zeta(1 - n, a) = -B_n(a) / n` for `n >= 1` and rational `a > 0`.
pub fn zeta_neg(n: usize, a: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "zeta_neg needs n >= 1 (s = 1 is the pole)".into(),
        ));
    }
    require_positive(a)?;
    let n_rat = BigRational::from_integer((n as u64).into());
    Ok(-bernoulli_poly(n).eval(a) / n_rat)
}

/// `zeta*(-n, a) = E_n(a) / 2` for `n >= 0` and rational `a > 0`.
pub fn zeta_star_neg(n: usize, a: &BigRational) -> Result<BigRational> {
    require_positive(a)?;
    let half = BigRational::new(One::one(), 2.into());
    Ok(euler_poly(n).eval(a) * half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::rat;

    #[test]
    fn low_order_bernoulli() {
        assert_eq!(*bernoulli_poly(0), PolyRational::one());
        assert_eq!(bernoulli_poly(1).to_string(), "x - 1/2");
        assert_eq!(bernoulli_poly(2).to_string(), "x^2 - x + 1/6");
        assert_eq!(bernoulli_poly(3).to_string(), "x^3 - 3/2*x^2 + 1/2*x");
    }

    #[test]
    fn low_order_euler() {
        assert_eq!(*euler_poly(0), PolyRational::one());
        assert_eq!(euler_poly(1).to_string(), "x - 1/2");
        assert_eq!(euler_poly(2).to_string(), "x^2 - x");
        assert_eq!(euler_poly(3).to_string(), "x^3 - 3/2*x^2 + 1/4");
    }

    #[test]
    fn poly_eval_examples() {
        assert_eq!(bernoulli_poly(1).eval(&rat(1, 2)), rat(0, 1));
        assert_eq!(bernoulli_poly(2).eval(&rat(1, 4)), rat(-1, 48));
    }

    #[test]
    fn cached_instances_are_shared() {
        let a = bernoulli_poly(12);
        let b = bernoulli_poly(12);
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_neg(1, &rat(1, 2)).unwrap(), rat(0, 1));
        assert_eq!(zeta_neg(2, &rat(1, 1)).unwrap(), rat(-1, 12));
        assert_eq!(zeta_neg(2, &rat(1, 4)).unwrap(), rat(1, 96));
        assert_eq!(zeta_star_neg(0, &rat(3, 7)).unwrap(), rat(1, 2));
        assert_eq!(zeta_star_neg(1, &rat(1, 6)).unwrap(), rat(-1, 6));
        assert_eq!(zeta_star_neg(1, &rat(1, 2)).unwrap(), rat(0, 1));
    }

    #[test]
    fn zeta_rejects_nonpositive_parameter() {
        assert!(matches!(zeta_neg(2, &rat(0, 1)), Err(Error::InvalidArgument(_))));
        assert!(matches!(zeta_neg(2, &rat(-1, 3)), Err(Error::InvalidArgument(_))));
        assert!(matches!(zeta_star_neg(2, &rat(-5, 1)), Err(Error::InvalidArgument(_))));
        assert!(zeta_neg(0, &rat(1, 2)).is_err());
    }

    #[test]
    fn concurrent_first_access() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || euler_poly(20 + i % 3).to_string()))
            .collect();
        let out: Vec<String> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, s) in out.iter().enumerate() {
            assert_eq!(s, &euler_poly(20 + i % 3).to_string());
        }
    }
}
