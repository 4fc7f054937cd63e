use std::fmt;
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::{eval_exact, eval_oracle_at};
use crate::closed_form::{evaluate, theorem_deriv, DerivativeQuery, ExactValue, TrigFn};
use crate::error::Result;

/// Outcome of comparing a closed form with the derivative oracle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "fn")]
    pub function: TrigFn,
    pub n: u32,
    pub p: i64,
    pub q: u64,
    pub pass: bool,
    /// Decimal renderings, 40 digits after the point.
    pub exact: String,
    pub oracle: String,
    pub abs_gap: f64,
    pub rel_gap: f64,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fn={} n={} p={} q={} exact={} oracle={} abs_gap={:.3e} rel_gap={:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.function,
            self.n,
            self.p,
            self.q,
            self.exact,
            self.oracle,
            self.abs_gap,
            self.rel_gap
        )
    }
}

const SHOWN_DIGITS: usize = 40;

fn compare(
    function: TrigFn,
    n: u32,
    x: &BigRational,
    value: &ExactValue,
    precision_bits: usize,
) -> Result<VerificationReport> {
    let exact = eval_exact(value, precision_bits);
    let oracle = eval_oracle_at(function, n, x, precision_bits)?;
    let e = exact.to_rational()?;
    let o = oracle.to_rational()?;
    let abs_gap = (&e - &o).abs();
    let scale = if o.abs() > BigRational::one() { o.abs() } else { BigRational::one() };
    let allowed_bits = precision_bits.saturating_sub(56);
    let allowed = &scale / BigRational::from_integer(BigInt::one() << allowed_bits);
    let rel_gap = &abs_gap / &scale;
    Ok(VerificationReport {
        function,
        n,
        p: x.numer().to_i64().unwrap_or(i64::MAX),
        q: x.denom().to_u64().unwrap_or(u64::MAX),
        pass: abs_gap <= allowed,
        exact: exact.to_decimal_string(SHOWN_DIGITS)?,
        oracle: oracle.to_decimal_string(SHOWN_DIGITS)?,
        abs_gap: abs_gap.to_f64().unwrap_or(f64::INFINITY),
        rel_gap: rel_gap.to_f64().unwrap_or(f64::INFINITY),
    })
}

/// Checks an arbitrary query (normalization included) against the oracle.
pub fn verify(query: &DerivativeQuery, precision_bits: usize) -> Result<VerificationReport> {
    let ev = evaluate(query)?;
    compare(query.function, query.order, &query.x, &ev.value, precision_bits)
}

/// Checks the raw closed form at `(p, q)` as given, without reduction.
/// The report carries the unreduced pair.
pub fn verify_theorem(function: TrigFn, n: u32, p: u64, q: u64, precision_bits: usize) -> Result<VerificationReport> {
    let value = theorem_deriv(function, n, p, q)?;
    let x = BigRational::new(BigInt::from(p), BigInt::from(q));
    let mut report = compare(function, n, &x, &value, precision_bits)?;
    report.p = p as i64;
    report.q = q;
    Ok(report)
}

/// One point of the theorem-window sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepCase {
    pub function: TrigFn,
    pub n: u32,
    pub p: u64,
    pub q: u64,
}

/// Every `(fn, n, p, q)` with `1 <= n <= max_n`, `2 <= q <= max_q` and `p` in
/// the closed-form window, unreduced pairs included. Sorted by function,
/// then `n`, `q`, `p`.
pub fn sweep_cases(max_n: u32, max_q: u64) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    for function in TrigFn::ALL {
        for n in 1..=max_n {
            for q in 2..=max_q {
                let ps: Vec<u64> = if function.is_half_window() {
                    (1..q).filter(|p| 2 * p < q).collect()
                } else {
                    (1..q).collect()
                };
                cases.extend(ps.into_iter().map(|p| SweepCase { function, n, p, q }));
            }
        }
    }
    cases
}

/// Verifies every sweep case on all available cores. Output order matches
/// [`sweep_cases`].
pub fn sweep(max_n: u32, max_q: u64, precision_bits: usize) -> Result<Vec<VerificationReport>> {
    let cases = sweep_cases(max_n, max_q);
    let workers = thread::available_parallelism().map_or(1, |w| w.get()).min(cases.len().max(1));
    let chunk = cases.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<VerificationReport>>> = thread::scope(|scope| {
        let handles: Vec<_> = cases
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|c| verify_theorem(c.function, c.n, c.p, c.q, precision_bits))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut out = Vec::with_capacity(cases.len());
    for part in results {
        out.extend(part?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::rat;

    fn query(f: TrigFn, n: u32, x: BigRational) -> DerivativeQuery {
        DerivativeQuery::new(f, n, x).unwrap()
    }

    #[test]
    fn examples() {
        let r = verify(&query(TrigFn::Cot, 1, rat(1, 2)), 256).unwrap();
        assert!(r.pass && r.rel_gap < 2f64.powi(-200), "{r}");
        let r = verify(&query(TrigFn::Sec, 1, rat(1, 3)), 256).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.exact.starts_with("10.882796185"));
        let r = verify(&query(TrigFn::Csc, 3, rat(1, 2)), 256).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.exact.trim_start_matches(['0', '.']).is_empty());
    }

    #[test]
    fn outside_window_arguments() {
        for (f, x) in [(TrigFn::Tan, rat(5, 3)), (TrigFn::Sec, rat(-7, 4)), (TrigFn::Csc, rat(9, 5))] {
            for n in 1..=5 {
                let r = verify(&query(f, n, x.clone()), 192).unwrap();
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn unreduced_pairs_keep_their_form() {
        let r = verify_theorem(TrigFn::Cot, 3, 2, 6, 192).unwrap();
        assert!(r.pass);
        assert_eq!((r.p, r.q), (2, 6));
    }

    #[test]
    fn wrong_value_fails() {
        let q = query(TrigFn::Cot, 2, rat(1, 3));
        let wrong = evaluate(&query(TrigFn::Cot, 2, rat(1, 4))).unwrap().value;
        let r = compare(q.function, q.order, &q.x, &wrong, 128).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn small_sweep_is_ordered_and_passes() {
        let reports = sweep(3, 6, 128).unwrap();
        assert_eq!(reports.len(), sweep_cases(3, 6).len());
        for (r, c) in reports.iter().zip(sweep_cases(3, 6)) {
            assert_eq!((r.function, r.n, r.p as u64, r.q), (c.function, c.n, c.p, c.q));
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn json_field_names() {
        let r = verify(&query(TrigFn::Tan, 1, rat(1, 4)), 128).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["fn", "n", "p", "q", "pass", "exact", "oracle", "abs_gap", "rel_gap"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["fn"], "tan");
    }
}
