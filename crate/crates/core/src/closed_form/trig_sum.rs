use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::numeric::HighPrecisionReal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigKind {
    Cos,
    Sin,
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrigKind::Cos => "cos",
            TrigKind::Sin => "sin",
        })
    }
}

/// `coeff * kind(pi * k / d)` with `0 <= k/d <= 1/2` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrigTerm {
    pub coeff: BigRational,
    pub kind: TrigKind,
    pub k: u64,
    pub d: u64,
}

impl TrigTerm {
    pub fn angle(&self) -> BigRational {
        BigRational::new(BigInt::from(self.k), BigInt::from(self.d))
    }
}

/// A real number written as `sum_j c_j cos(pi a_j) + s_j sin(pi b_j)`.
///
/// Canonical: every angle is folded into `[0, 1/2]`, angles with a rational
/// cosine or sine are absorbed into the constant `cos(0)` term, equal
/// `(kind, angle)` pairs are merged, zeros are dropped, and terms are
/// ordered cos before sin, then by ascending angle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TrigSum {
    terms: Vec<TrigTerm>,
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn third() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(3))
}

fn sixth() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(6))
}

/// `angle mod 2`, in `[0, 2)`.
fn mod_two(angle: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let turns = (angle / &two).floor();
    angle - turns * two
}

/// Folds one term into `(coeff, kind, angle)` with `angle` in `[0, 1/2]`,
/// or `None` if it vanishes. Rational values land on `(Cos, 0)`.
fn fold(mut coeff: BigRational, kind: TrigKind, angle: &BigRational) -> Option<(BigRational, TrigKind, BigRational)> {
    let one = BigRational::one();
    let mut theta = mod_two(angle);
    match kind {
        TrigKind::Cos => {
            if theta > one {
                theta = BigRational::from_integer(2.into()) - theta;
            }
            if theta > half() {
                coeff = -coeff;
                theta = one - theta;
            }
            if theta == half() {
                return None;
            }
            if theta == third() {
                return Some((coeff * half(), TrigKind::Cos, BigRational::zero()));
            }
            Some((coeff, TrigKind::Cos, theta))
        }
        TrigKind::Sin => {
            if theta >= one {
                coeff = -coeff;
                theta -= one.clone();
            }
            if theta > half() {
                theta = one - theta;
            }
            if theta.is_zero() {
                return None;
            }
            if theta == half() {
                return Some((coeff, TrigKind::Cos, BigRational::zero()));
            }
            if theta == sixth() {
                return Some((coeff * half(), TrigKind::Cos, BigRational::zero()));
            }
            Some((coeff, TrigKind::Sin, theta))
        }
    }
}

impl TrigSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A rational constant, `r * cos(0)`.
    pub fn constant(r: BigRational) -> Self {
        Self::from_terms([(r, TrigKind::Cos, BigRational::zero())])
    }

    /// Builds the canonical form of `sum coeff * kind(pi * angle)`.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, TrigKind, BigRational)>,
    {
        let mut merged: BTreeMap<(TrigKind, OrdRational), BigRational> = BTreeMap::new();
        for (coeff, kind, angle) in terms {
            if coeff.is_zero() {
                continue;
            }
            if let Some((c, kd, theta)) = fold(coeff, kind, &angle) {
                *merged.entry((kd, OrdRational(theta))).or_insert_with(BigRational::zero) += c;
            }
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((kind, OrdRational(theta)), coeff)| TrigTerm {
                coeff,
                kind,
                k: theta.numer().to_u64().expect("folded angle numerator"),
                d: theta.denom().to_u64().expect("folded angle denominator"),
            })
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[TrigTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value when the sum is a bare constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [t] if t.kind == TrigKind::Cos && t.k == 0 => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| TrigTerm {
                    coeff: -&t.coeff,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Numeric value at `precision` bits.
    pub fn eval(&self, precision: usize) -> HighPrecisionReal {
        let headroom = self
            .terms
            .iter()
            .map(|t| t.coeff.numer().bits() + t.coeff.denom().bits())
            .max()
            .unwrap_or(0) as usize;
        let work = precision + 32 + headroom;
        let pi = HighPrecisionReal::pi(work);
        let mut acc = HighPrecisionReal::zero(work);
        for t in &self.terms {
            let c = HighPrecisionReal::from_rational(&t.coeff, work);
            let value = if t.k == 0 {
                c
            } else {
                let theta = pi.mul_rational(&t.angle());
                match t.kind {
                    TrigKind::Cos => c.mul(&theta.cos()),
                    TrigKind::Sin => c.mul(&theta.sin()),
                }
            };
            acc = acc.add(&value);
        }
        acc.with_precision(precision)
    }
}

/// Total order wrapper so rationals can key a `BTreeMap`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct OrdRational(BigRational);

impl PartialOrd for OrdRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Real form of a real cyclotomic element by pairing `zeta^k` with `zeta^{-k}`.
///
/// For real `z = sum_k c_k zeta_m^k` the imaginary parts cancel, so
/// `z = sum_k c_k cos(2 pi k / m)`.
pub fn to_trig_sum(witness: &CycloNum) -> Result<TrigSum> {
    if !witness.is_real() {
        return Err(Error::NotReal);
    }
    let m = witness.order() as i64;
    Ok(TrigSum::from_terms(witness.coeffs().iter().enumerate().map(|(k, c)| {
        (
            c.clone(),
            TrigKind::Cos,
            BigRational::new(BigInt::from(2 * k as i64), BigInt::from(m)),
        )
    })))
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    write!(f, "{}", c.abs())
}

/// Plain-text form, e.g. `3/2 - 4*cos(pi/6) + sin(2*pi/5)`. The empty sum is `0`.
impl fmt::Display for TrigSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.k == 0 {
                write_coeff(f, &t.coeff, i == 0)?;
                continue;
            }
            let neg = t.coeff.is_negative();
            let mag = t.coeff.abs();
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let num = if t.k == 1 { "pi".to_string() } else { format!("{}*pi", t.k) };
            write!(f, "{}({}/{})", t.kind, num, t.d)?;
        }
        Ok(())
    }
}
