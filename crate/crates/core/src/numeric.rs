//! Arbitrary-precision reals backed by `astro-float`.
//!
//! Every value carries the precision (in bits) it was computed at. Exact
//! conversion back to a rational is available for rendering and for
//! comparisons that should not lose anything to a final rounding.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct HighPrecisionReal {
    value: BigFloat,
    precision: usize,
}

impl HighPrecisionReal {
    pub fn zero(precision: usize) -> Self {
        Self::from_i64(0, precision)
    }

    pub fn from_i64(v: i64, precision: usize) -> Self {
        Self {
            value: BigFloat::from_i64(v, precision),
            precision,
        }
    }

    pub fn from_f64(v: f64, precision: usize) -> Self {
        Self {
            value: BigFloat::from_f64(v, precision),
            precision,
        }
    }

    pub fn from_bigint(v: &BigInt, precision: usize) -> Self {
        let (sign, digits) = v.to_u32_digits();
        // wide enough that every intermediate is exact
        let exact = (v.bits() as usize + 64).max(precision);
        let base = BigFloat::from_u64(1 << 32, exact);
        let mut acc = BigFloat::from_u64(0, exact);
        for d in digits.iter().rev() {
            acc = acc
                .mul(&base, exact, RM)
                .add(&BigFloat::from_u64(u64::from(*d), exact), exact, RM);
        }
        if sign == num_bigint::Sign::Minus {
            acc.inv_sign();
        }
        let _ = acc.set_precision(precision, RM);
        Self {
            value: acc,
            precision,
        }
    }

    pub fn from_rational(v: &BigRational, precision: usize) -> Self {
        let work = precision + 64;
        let num = Self::from_bigint(v.numer(), work);
        let den = Self::from_bigint(v.denom(), work);
        Self {
            value: num.value.div(&den.value, precision, RM),
            precision,
        }
    }

    pub fn pi(precision: usize) -> Self {
        Self {
            value: with_consts(|cc| cc.pi(precision, RM)),
            precision,
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.value
    }

    fn wrap(&self, value: BigFloat) -> Self {
        Self {
            value,
            precision: self.precision,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.wrap(self.value.add(&rhs.value, self.precision, RM))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.wrap(self.value.sub(&rhs.value, self.precision, RM))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.wrap(self.value.mul(&rhs.value, self.precision, RM))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.wrap(self.value.div(&rhs.value, self.precision, RM))
    }

    pub fn recip(&self) -> Self {
        self.wrap(self.value.reciprocal(self.precision, RM))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.value.neg())
    }

    pub fn abs(&self) -> Self {
        self.wrap(self.value.abs())
    }

    pub fn powi(&self, n: usize) -> Self {
        if n == 0 {
            return Self::from_i64(1, self.precision);
        }
        self.wrap(self.value.powi(n, self.precision, RM))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rational(r, self.precision))
    }

    pub fn cos(&self) -> Self {
        self.wrap(with_consts(|cc| self.value.cos(self.precision, RM, cc)))
    }

    pub fn sin(&self) -> Self {
        self.wrap(with_consts(|cc| self.value.sin(self.precision, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        self.wrap(self.value.sqrt(self.precision, RM))
    }

    /// Re-rounds to a different precision.
    pub fn with_precision(&self, precision: usize) -> Self {
        let mut value = self.value.clone();
        // set_precision only fails for invalid precisions, which callers never pass
        let _ = value.set_precision(precision, RM);
        Self { value, precision }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    /// The exact rational value of the binary float.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.value.is_zero() {
            return Ok(BigRational::zero());
        }
        let (words, _bits, sign, exp, _) = self
            .value
            .as_raw_parts()
            .ok_or_else(|| Error::Domain("non-finite high-precision value".into()))?;
        let mut mantissa = BigUint::zero();
        for w in words.iter().rev() {
            mantissa = (mantissa << WORD_BIT_SIZE) + BigUint::from(*w);
        }
        let shift = i64::from(exp) - (words.len() * WORD_BIT_SIZE) as i64;
        let mut num = BigInt::from(mantissa);
        if sign == Sign::Neg {
            num = -num;
        }
        let r = if shift >= 0 {
            BigRational::from_integer(num << shift as usize)
        } else {
            BigRational::new(num, BigInt::one() << (-shift) as usize)
        };
        Ok(r)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational()
            .ok()
            .and_then(|r| r.to_f64())
            .unwrap_or(f64::NAN)
    }

    /// `floor(log2 |x|)`, or `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.value.is_zero() {
            return None;
        }
        self.value.exponent().map(|e| i64::from(e) - 1)
    }

    /// Fixed-point decimal with `digits` digits after the point,
    /// rounded half to even.
    pub fn to_decimal_string(&self, digits: usize) -> Result<String> {
        Ok(format_fixed(&self.to_rational()?, digits))
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match self.value.abs_cmp(&other.value) {
            Some(c) if c < 0 => Ordering::Less,
            Some(0) => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30);
        match self.to_decimal_string(digits) {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str("NaN"),
        }
    }
}

/// Exact rational rounded to `digits` decimals, half to even, fixed
/// notation. Zero is printed without a sign.
pub fn format_fixed(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = round_half_even(&scaled);
    let negative = rounded.is_negative();
    let mag = rounded.abs();
    let (int_part, frac_part) = mag.div_rem(&scale);
    if digits == 0 {
        return format!("{}{}", if negative { "-" } else { "" }, int_part);
    }
    format!(
        "{}{}.{:0>width$}",
        if negative { "-" } else { "" },
        int_part,
        frac_part.to_string(),
        width = digits
    )
}

fn round_half_even(r: &BigRational) -> BigInt {
    let floor = r.floor().to_integer();
    let frac = r - BigRational::from_integer(floor.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

/// Parses a plain decimal literal such as `-3.1415` into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a decimal literal: {s:?}"));
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        num = -num;
    }
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    Ok(BigRational::new(num, den))
}

#[derive(Clone, Debug)]
pub struct HighPrecisionComplex {
    pub re: HighPrecisionReal,
    pub im: HighPrecisionReal,
}

impl HighPrecisionComplex {
    pub fn zero(precision: usize) -> Self {
        Self {
            re: HighPrecisionReal::zero(precision),
            im: HighPrecisionReal::zero(precision),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
}
