//! Direct-series evaluators for the Hurwitz zeta function, its alternating
//! counterpart, the Lerch zeta function and the Legendre chi function, each
//! with a rigorous truncation bound.
//!
//! All of them are instances of `sum_{j>=0} c_{j mod P} (j + a)^{-s}` with a
//! periodic coefficient sequence. After `N` terms (`N` a multiple of `P`) the
//! tail is split into the coefficient mean `mu` times a pure power tail and
//! a zero-mean remainder:
//!
//! * pure tail: midpoint-rule integral `(N - 1/2 + a)^{1-s} / (s-1)`, error
//!   at most `s/24 (N - 3/2 + a)^{-s-1}`;
//! * zero-mean remainder: two rounds of summation by parts give
//!   `Dbar w_N`, error at most `M2 s (N + a)^{-s-1}`, where `Dbar` is the mean
//!   of the per-period partial sums and `M2` bounds the partial sums of their
//!   deviations.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A truncated series value and a bound on its distance to the true sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesEstimate {
    pub value: Complex64,
    pub tail_bound: f64,
    pub terms: usize,
}

impl SeriesEstimate {
    fn scale(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            tail_bound: self.tail_bound * factor.abs(),
            terms: self.terms,
        }
    }
}

/// Neumaier-compensated accumulator for complex sums.
#[derive(Default)]
struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
    abs_total: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: Complex64) {
        self.abs_total += x.norm();
        self.sum = Complex64::new(
            neumaier(&mut self.comp.re, self.sum.re, x.re),
            neumaier(&mut self.comp.im, self.sum.im, x.im),
        );
    }

    fn total(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn neumaier(comp: &mut f64, sum: f64, x: f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

struct PeriodicSeries<'a> {
    coeffs: &'a [Complex64],
    a: f64,
    s: f64,
    mean: Complex64,
    dbar: Complex64,
    m2: f64,
}

impl<'a> PeriodicSeries<'a> {
    fn new(coeffs: &'a [Complex64], a: f64, s: f64) -> Result<Self> {
        if coeffs.is_empty() || a.is_nan() || a <= 0.0 || s.is_nan() || s <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "series needs a > 0, s > 0 and coefficients (a = {a}, s = {s})"
            )));
        }
        let period = coeffs.len() as f64;
        let mut mean = coeffs.iter().sum::<Complex64>() / period;
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if mean.norm() <= 1e-13 * scale {
            mean = Complex64::new(0.0, 0.0);
        }
        if mean.norm() > 0.0 && s <= 1.0 {
            return Err(Error::Domain(format!(
                "series with nonzero coefficient mean diverges for s = {s} <= 1"
            )));
        }
        let mut partial = Vec::with_capacity(coeffs.len());
        let mut run = Complex64::new(0.0, 0.0);
        for c in coeffs {
            run += c - mean;
            partial.push(run);
        }
        let dbar = partial.iter().sum::<Complex64>() / period;
        let mut m2: f64 = 0.0;
        let mut run = Complex64::new(0.0, 0.0);
        for d in &partial {
            run += d - dbar;
            m2 = m2.max(run.norm());
        }
        Ok(Self {
            coeffs,
            a,
            s,
            mean,
            dbar,
            m2,
        })
    }

    fn truncation_bound(&self, n: usize) -> f64 {
        let n = n as f64;
        let mut bound = self.m2 * self.s * (n + self.a).powf(-self.s - 1.0);
        if self.mean.norm() > 0.0 {
            bound += self.mean.norm() * self.s / 24.0 * (n - 1.5 + self.a).powf(-self.s - 1.0);
        }
        bound
    }

    fn evaluate(&self, n: usize) -> SeriesEstimate {
        let period = self.coeffs.len();
        let mut acc = CompensatedSum::default();
        for j in 0..n {
            let w = (j as f64 + self.a).powf(-self.s);
            acc.add(self.coeffs[j % period] * w);
        }
        let nf = n as f64;
        let mut tail = self.dbar * (nf + self.a).powf(-self.s);
        if self.mean.norm() > 0.0 {
            tail += self.mean * (nf - 0.5 + self.a).powf(1.0 - self.s) / (self.s - 1.0);
        }
        acc.add(tail);
        let rounding = 4.0 * f64::EPSILON * acc.abs_total;
        SeriesEstimate {
            value: acc.total(),
            tail_bound: self.truncation_bound(n) + rounding,
            terms: n,
        }
    }

    /// Smallest power-of-two multiple of the period whose bound is below `tol`.
    fn terms_for(&self, tol: f64) -> Result<usize> {
        let period = self.coeffs.len();
        let mut n = period * 64usize.div_ceil(period).max(1);
        while self.truncation_bound(n) > tol / 2.0 {
            n *= 2;
            if n > 1 << 34 {
                return Err(Error::Domain(format!(
                    "tolerance {tol} needs more than 2^34 terms at s = {}",
                    self.s
                )));
            }
        }
        Ok(n)
    }
}

fn sum_periodic(coeffs: &[Complex64], a: f64, s: f64, tol: f64) -> Result<SeriesEstimate> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let series = PeriodicSeries::new(coeffs, a, s)?;
    Ok(series.evaluate(series.terms_for(tol)?))
}

/// Same series with an explicit number of terms (rounded up to a whole period).
pub fn sum_periodic_terms(coeffs: &[Complex64], a: f64, s: f64, terms: usize) -> Result<SeriesEstimate> {
    let series = PeriodicSeries::new(coeffs, a, s)?;
    let period = coeffs.len();
    Ok(series.evaluate(terms.div_ceil(period).max(2) * period))
}

fn check_parameter(a: f64) -> Result<()> {
    if a > 0.0 && a <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("parameter a must lie in (0, 1], got {a}")))
    }
}

/// `e^{2 pi i k / m}` in double precision.
pub fn unit_root(k: i64, m: u64) -> Complex64 {
    let r = k.rem_euclid(m as i64) as f64 / m as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r)
}

pub(crate) fn hurwitz_coeffs() -> Vec<Complex64> {
    vec![Complex64::new(1.0, 0.0)]
}

pub(crate) fn alt_hurwitz_coeffs() -> Vec<Complex64> {
    vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]
}

/// `zeta(s, a) = sum_{k>=0} (k + a)^{-s}` for `s > 1`, `0 < a <= 1`.
pub fn hurwitz_zeta(s: f64, a: f64, tol: f64) -> Result<SeriesEstimate> {
    check_parameter(a)?;
    if s.is_nan() || s <= 1.0 {
        return Err(Error::Domain(format!("hurwitz_zeta needs s > 1, got {s}")));
    }
    sum_periodic(&hurwitz_coeffs(), a, s, tol)
}

/// `zeta*(s, a) = sum_{k>=0} (-1)^k (k + a)^{-s}` for `s > 0`, `0 < a <= 1`.
pub fn alt_hurwitz_zeta(s: f64, a: f64, tol: f64) -> Result<SeriesEstimate> {
    check_parameter(a)?;
    sum_periodic(&alt_hurwitz_coeffs(), a, s, tol)
}

fn check_pq(p: u64, q: u64) -> Result<()> {
    if q >= 1 && (1..=q).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("need 1 <= p <= q, got p = {p}, q = {q}")))
    }
}

/// Lerch zeta `l_s(p/q) = sum_{k>=1} e^{2 pi i k p/q} k^{-s}`.
pub fn lerch_l(s: f64, p: u64, q: u64, tol: f64) -> Result<SeriesEstimate> {
    check_pq(p, q)?;
    let coeffs: Vec<Complex64> = (0..q).map(|j| unit_root(((j + 1) * p) as i64, q)).collect();
    sum_periodic(&coeffs, 1.0, s, tol)
}

/// Alternating Lerch zeta `l*_s(p/q) = sum_{k>=1} (-1)^{k-1} e^{2 pi i k p/q} k^{-s}`.
pub fn lerch_l_star(s: f64, p: u64, q: u64, tol: f64) -> Result<SeriesEstimate> {
    check_pq(p, q)?;
    let coeffs: Vec<Complex64> = (0..2 * q)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            unit_root(((j + 1) * p) as i64, q) * sign
        })
        .collect();
    sum_periodic(&coeffs, 1.0, s, tol)
}

/// Legendre chi `chi_s(z) = sum_{k>=0} z^{2k+1} (2k+1)^{-s}` at `z = e^{i pi p/q}`.
pub fn chi(s: f64, p: u64, q: u64, tol: f64) -> Result<SeriesEstimate> {
    check_pq(p, q)?;
    let coeffs: Vec<Complex64> = (0..q)
        .map(|j| unit_root(((2 * j + 1) * p) as i64, 2 * q))
        .collect();
    let scale = 2f64.powf(-s);
    Ok(sum_periodic(&coeffs, 0.5, s, tol / scale)?.scale(scale))
}

/// Alternating chi `chi*_s(z) = sum_{k>=0} (-1)^k z^{2k+1} (2k+1)^{-s}` at `z = e^{i pi p/q}`.
pub fn chi_star(s: f64, p: u64, q: u64, tol: f64) -> Result<SeriesEstimate> {
    check_pq(p, q)?;
    let coeffs: Vec<Complex64> = (0..2 * q)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            unit_root(((2 * j + 1) * p) as i64, 2 * q) * sign
        })
        .collect();
    let scale = 2f64.powf(-s);
    Ok(sum_periodic(&coeffs, 0.5, s, tol / scale)?.scale(scale))
}
