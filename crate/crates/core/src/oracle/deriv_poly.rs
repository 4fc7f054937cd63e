use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::closed_form::TrigFn;
use crate::numeric::HighPrecisionReal;

/// Exact polynomial for the n-th theta-derivative of a trig function.
///
/// `terms[(a, b)]` is the coefficient of `X^a Y^b` where `(X, Y)` is
/// `(csc, cot)` for cot and csc, `(sec, tan)` for tan and sec. cot and tan
/// polynomials only use `a = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivPoly {
    pub function: TrigFn,
    pub order: u32,
    pub terms: BTreeMap<(u32, u32), BigInt>,
}

impl DerivPoly {
    fn base(function: TrigFn) -> Self {
        let key = match function {
            TrigFn::Cot | TrigFn::Tan => (0, 1),
            TrigFn::Csc | TrigFn::Sec => (1, 0),
        };
        Self {
            function,
            order: 0,
            terms: BTreeMap::from([(key, BigInt::from(1))]),
        }
    }

    /// Applies `X' = sigma X Y`, `Y' = sigma (1 + Y^2)` with `sigma = -1`
    /// for the cot family and `+1` for the tan family.
    fn differentiate(&self) -> Self {
        let sigma = match self.function {
            TrigFn::Cot | TrigFn::Csc => BigInt::from(-1),
            TrigFn::Tan | TrigFn::Sec => BigInt::from(1),
        };
        let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        let mut bump = |key: (u32, u32), c: BigInt| {
            *out.entry(key).or_insert_with(BigInt::zero) += c;
        };
        for (&(a, b), c) in &self.terms {
            // d(X^a Y^b) = sigma [a X^a Y^(b+1) + b X^a Y^(b-1) + b X^a Y^(b+1)]
            let sc = c * &sigma;
            if a > 0 {
                bump((a, b + 1), &sc * a);
            }
            if b > 0 {
                bump((a, b - 1), &sc * b);
                bump((a, b + 1), &sc * b);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self {
            function: self.function,
            order: self.order + 1,
            terms: out,
        }
    }

    /// Largest coefficient size in bits.
    pub fn coeff_bits(&self) -> u64 {
        self.terms.values().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Value at the given `(X, Y)` state.
    pub fn eval_state(&self, x: &HighPrecisionReal, y: &HighPrecisionReal) -> HighPrecisionReal {
        let p = x.precision();
        let mut acc = HighPrecisionReal::zero(p);
        for (&(a, b), c) in &self.terms {
            let term = HighPrecisionReal::from_bigint(c, p)
                .mul(&x.powi(a as usize))
                .mul(&y.powi(b as usize));
            acc = acc.add(&term);
        }
        acc
    }

    /// Value at angle `theta`, computing the state from `sin` and `cos`.
    pub fn eval_at(&self, theta: &HighPrecisionReal) -> HighPrecisionReal {
        let s = theta.sin();
        let c = theta.cos();
        let (x, y) = match self.function {
            TrigFn::Cot | TrigFn::Csc => (s.recip(), c.div(&s)),
            TrigFn::Tan | TrigFn::Sec => (c.recip(), s.div(&c)),
        };
        self.eval_state(&x, &y)
    }

    /// Every term has `X`-degree of the given parity.
    pub fn x_degrees_have_parity(&self, odd: bool) -> bool {
        self.terms.keys().all(|&(a, _)| (a % 2 == 1) == odd)
    }

    /// Every term has total degree of the given parity.
    pub fn total_degrees_have_parity(&self, odd: bool) -> bool {
        self.terms.keys().all(|&(a, b)| ((a + b) % 2 == 1) == odd)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

fn cache() -> &'static RwLock<HashMap<TrigFn, Vec<Arc<DerivPoly>>>> {
    static CACHE: OnceLock<RwLock<HashMap<TrigFn, Vec<Arc<DerivPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The n-th derivative polynomial, memoized per function. Order 0 is the
/// function itself.
pub fn deriv_poly(function: TrigFn, n: u32) -> Arc<DerivPoly> {
    let n = n as usize;
    if let Some(p) = cache()
        .read()
        .expect("deriv cache poisoned")
        .get(&function)
        .and_then(|v| v.get(n))
    {
        return Arc::clone(p);
    }
    let mut w = cache().write().expect("deriv cache poisoned");
    let table = w
        .entry(function)
        .or_insert_with(|| vec![Arc::new(DerivPoly::base(function))]);
    while table.len() <= n {
        let next = table.last().expect("non-empty").differentiate();
        table.push(Arc::new(next));
    }
    Arc::clone(&table[n])
}
