use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyRational {
    coeffs: Vec<BigRational>,
}

impl PolyRational {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The polynomial `p(1 - x)`.
    pub fn reflect(&self) -> Self {
        // Horner in the polynomial ring with x replaced by (1 - x).
        let one_minus_x = Self::from_i64_coeffs(&[1, -1]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &one_minus_x) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division; `None` if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = &rem[idx] - &factor * dc;
            }
            quot[i - dd] = factor;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// True if every coefficient has denominator one.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &PolyRational {
    type Output = PolyRational;

    fn add(self, rhs: &PolyRational) -> PolyRational {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyRational::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PolyRational {
    type Output = PolyRational;

    fn sub(self, rhs: &PolyRational) -> PolyRational {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyRational::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &PolyRational {
    type Output = PolyRational;

    fn mul(self, rhs: &PolyRational) -> PolyRational {
        if self.is_zero() || rhs.is_zero() {
            return PolyRational::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyRational::from_coeffs(out)
    }
}

impl Neg for &PolyRational {
    type Output = PolyRational;

    fn neg(self) -> PolyRational {
        PolyRational::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Renders as e.g. `x^2 - x + 1/6`, highest degree first.
impl fmt::Display for PolyRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::rat;

    #[test]
    fn zero_poly_evaluates_to_zero() {
        assert_eq!(PolyRational::zero().eval(&rat(7, 3)), BigRational::zero());
        assert_eq!(PolyRational::zero().degree(), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = PolyRational::from_i64_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!((&p - &p), PolyRational::zero());
    }

    #[test]
    fn display_forms() {
        let b2 = PolyRational::from_coeffs(vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
        assert_eq!(b2.to_string(), "x^2 - x + 1/6");
        let p = PolyRational::from_coeffs(vec![rat(0, 1), rat(-3, 2), rat(0, 1), rat(-1, 1)]);
        assert_eq!(p.to_string(), "-x^3 - 3/2*x");
        assert_eq!(PolyRational::zero().to_string(), "0");
    }

    #[test]
    fn division_reconstructs() {
        let a = PolyRational::from_i64_coeffs(&[-1, 0, 0, 0, 0, 0, 1]);
        let b = PolyRational::from_i64_coeffs(&[1, 1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
        let c = PolyRational::from_i64_coeffs(&[3, 0, 2]);
        let (q, r) = c.div_rem(&PolyRational::from_i64_coeffs(&[1, 1])).unwrap();
        assert_eq!(&(&q * &PolyRational::from_i64_coeffs(&[1, 1])) + &r, c);
        assert!(c.div_rem(&PolyRational::zero()).is_none());
    }

    #[test]
    fn reflect_linear() {
        let p = PolyRational::from_coeffs(vec![rat(-1, 2), rat(1, 1)]);
        // (1 - x) - 1/2
        assert_eq!(p.reflect(), PolyRational::from_coeffs(vec![rat(1, 2), rat(-1, 1)]));
    }
}
