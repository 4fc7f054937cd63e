use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{theorem_deriv, ExactValue, TrigFn};
use crate::error::{Error, Result};

/// The n-th x-derivative of `f(pi x)` at a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeQuery {
    pub function: TrigFn,
    pub order: u32,
    pub x: BigRational,
}

impl DerivativeQuery {
    /// Validates `order >= 1` and that `x` is not a pole.
    pub fn new(function: TrigFn, order: u32, x: BigRational) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("derivative order must be >= 1".into()));
        }
        check_pole(function, &x)?;
        Ok(Self { function, order, x })
    }
}

fn check_pole(function: TrigFn, x: &BigRational) -> Result<()> {
    let den = x.denom();
    let pole = if function.is_half_window() {
        *den == BigInt::from(2)
    } else {
        den.is_one()
    };
    if pole {
        Err(Error::Pole {
            function,
            x: x.clone(),
        })
    } else {
        Ok(())
    }
}

/// Where a query lands after folding into the closed-form window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub p: u64,
    pub q: u64,
    /// `+1` or `-1`, multiplied into the closed-form value.
    pub sign: i8,
    /// `x` was mapped to `1 - x` (tan and sec only).
    pub reflected: bool,
}

/// Maps an arbitrary rational onto `1 <= p < q` (cot, csc) or
/// `1 <= p < q/2` (tan, sec) in lowest terms.
///
/// Period 1 for cot and tan, antiperiod 1 for csc and sec. The reflection
/// `x -> 1 - x` uses `f(pi(1-x)) = -f(pi x)`, which gives
/// `f^(n)(x) = (-1)^(n+1) f^(n)(1-x)`.
pub fn normalize_argument(function: TrigFn, order: u32, x: &BigRational) -> Result<Normalized> {
    check_pole(function, x)?;
    let whole = x.floor().to_integer();
    let frac = x - BigRational::from_integer(whole.clone());
    let too_big = || Error::Domain(format!("argument {x} has a denominator beyond 64 bits"));
    let mut p = frac.numer().to_u64().ok_or_else(too_big)?;
    let q = frac.denom().to_u64().ok_or_else(too_big)?;
    let mut sign: i8 = 1;
    if function.is_antiperiodic() && whole.is_odd() {
        sign = -sign;
    }
    if q == 1 {
        // only reachable for tan/sec: integer points are regular but outside the window
        return Err(Error::Domain(format!(
            "{function}: no closed form at integer x = {x} (needs q >= 3)"
        )));
    }
    let mut reflected = false;
    if function.is_half_window() && 2 * p > q {
        p = q - p;
        reflected = true;
        if order.is_multiple_of(2) {
            sign = -sign;
        }
    }
    Ok(Normalized {
        p,
        q,
        sign,
        reflected,
    })
}

/// A query together with its normalization and exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub query: DerivativeQuery,
    pub normalized: Normalized,
    pub value: ExactValue,
}

/// Exact value of any admissible query, via normalization and the closed forms.
pub fn evaluate(query: &DerivativeQuery) -> Result<Evaluation> {
    let normalized = normalize_argument(query.function, query.order, &query.x)?;
    let base = theorem_deriv(query.function, query.order, normalized.p, normalized.q)?;
    let value = if normalized.sign < 0 { base.neg() } else { base };
    Ok(Evaluation {
        query: query.clone(),
        normalized,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::{int, rat};

    fn norm(f: TrigFn, n: u32, x: BigRational) -> Normalized {
        normalize_argument(f, n, &x).unwrap()
    }

    #[test]
    fn period_fold() {
        assert_eq!(norm(TrigFn::Cot, 1, rat(7, 3)), Normalized { p: 1, q: 3, sign: 1, reflected: false });
        assert_eq!(norm(TrigFn::Cot, 2, rat(-2, 3)), Normalized { p: 1, q: 3, sign: 1, reflected: false });
    }

    #[test]
    fn antiperiod_fold() {
        assert_eq!(norm(TrigFn::Csc, 1, rat(4, 3)), Normalized { p: 1, q: 3, sign: -1, reflected: false });
        assert_eq!(norm(TrigFn::Csc, 1, rat(7, 3)), Normalized { p: 1, q: 3, sign: 1, reflected: false });
        // -1/3 = -1 + 2/3
        assert_eq!(norm(TrigFn::Sec, 1, rat(-1, 3)), Normalized { p: 1, q: 3, sign: -1, reflected: true });
    }

    #[test]
    fn reflection_sign_follows_order() {
        assert_eq!(norm(TrigFn::Tan, 1, rat(2, 3)), Normalized { p: 1, q: 3, sign: 1, reflected: true });
        assert_eq!(norm(TrigFn::Tan, 2, rat(2, 3)), Normalized { p: 1, q: 3, sign: -1, reflected: true });
        assert_eq!(norm(TrigFn::Sec, 2, rat(3, 4)), Normalized { p: 1, q: 4, sign: -1, reflected: true });
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(norm(TrigFn::Cot, 1, rat(4, 6)), Normalized { p: 2, q: 3, sign: 1, reflected: false });
    }

    #[test]
    fn poles_and_domain() {
        assert!(matches!(normalize_argument(TrigFn::Cot, 1, &int(1)), Err(Error::Pole { .. })));
        assert!(matches!(normalize_argument(TrigFn::Csc, 1, &int(-3)), Err(Error::Pole { .. })));
        assert!(matches!(normalize_argument(TrigFn::Tan, 1, &rat(3, 2)), Err(Error::Pole { .. })));
        assert!(matches!(normalize_argument(TrigFn::Sec, 1, &rat(-1, 2)), Err(Error::Pole { .. })));
        assert!(matches!(normalize_argument(TrigFn::Tan, 3, &int(2)), Err(Error::Domain(_))));
        assert!(DerivativeQuery::new(TrigFn::Cot, 0, rat(1, 3)).is_err());
        assert!(DerivativeQuery::new(TrigFn::Cot, 1, int(0)).is_err());
    }

    #[test]
    fn reflected_tan_matches_direct_value() {
        let q = DerivativeQuery::new(TrigFn::Tan, 1, rat(2, 3)).unwrap();
        let ev = evaluate(&q).unwrap();
        assert_eq!(ev.value.sum.as_rational(), Some(int(4)));
    }
}
