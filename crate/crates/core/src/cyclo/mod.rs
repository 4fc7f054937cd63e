//! Exact arithmetic in the cyclotomic field `Q(zeta_m)`, `zeta_m = e^{2 pi i / m}`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^{phi(m)-1}`
//! modulo the m-th cyclotomic polynomial, so two elements of the same order
//! are equal exactly when their coefficient vectors are.

mod cyclotomic;

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

pub use cyclotomic::{cyclotomic_poly, totient};
use cyclotomic::{field, Field};

use crate::error::{Error, Result};
use crate::numeric::{HighPrecisionComplex, HighPrecisionReal};

#[derive(Clone)]
pub struct CycloNum {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(m={}, {})", self.order(), self)
    }
}

/// Renders as `c0 + c1*z + c2*z^2 ...` in the power basis.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl CycloNum {
    pub fn zero(order: u64) -> Self {
        let field = field(order);
        let coeffs = vec![BigRational::zero(); field.degree];
        Self { field, coeffs }
    }

    pub fn from_rational(order: u64, r: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::from_integer(1.into()))
    }

    /// `e^{2 pi i k / m}`.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let field = field(order);
        let j = k.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[j]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Self { field, coeffs }
    }

    /// Reduces `sum_j group[j] * zeta^j` (indices taken mod `order`).
    pub fn from_group_ring(order: u64, group: &[BigRational]) -> Self {
        let field = field(order);
        let mut coeffs = vec![BigRational::zero(); field.degree];
        for (j, g) in group.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let row = &field.powers[j % order as usize];
            for (c, p) in coeffs.iter_mut().zip(row) {
                if !p.is_zero() {
                    *c += g * BigRational::from_integer(p.clone());
                }
            }
        }
        Self { field, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    /// Coordinates in the basis `zeta^0 .. zeta^{phi(m)-1}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let (first, rest) = self.coeffs.split_first()?;
        rest.iter().all(Zero::is_zero).then(|| first.clone())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let m = self.order() as usize;
        let mut group = vec![BigRational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    group[(i + j) % m] += a * b;
                }
            }
        }
        Ok(Self::from_group_ring(self.order(), &group))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Complex conjugation: `zeta -> zeta^{m-1}`.
    pub fn conj(&self) -> Self {
        let m = self.order() as usize;
        let mut group = vec![BigRational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            group[(m - k) % m] = c.clone();
        }
        Self::from_group_ring(self.order(), &group)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Embeds into `Q(zeta_n)` for a multiple `n` of the current order.
    pub fn lift(&self, order: u64) -> Result<Self> {
        let m = self.order();
        if !order.is_multiple_of(m) {
            return Err(Error::OrderMismatch { left: m, right: order });
        }
        let step = (order / m) as usize;
        let mut group = vec![BigRational::zero(); order as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            group[k * step] = c.clone();
        }
        Ok(Self::from_group_ring(order, &group))
    }

    /// Lifts both operands to the least common order.
    pub fn common_order(&self, other: &Self) -> Result<(Self, Self)> {
        let l = self.order().lcm(&other.order());
        Ok((self.lift(l)?, other.lift(l)?))
    }

    /// Numeric value under `zeta_m = e^{2 pi i / m}`.
    ///
    /// Works at `precision_bits + 32` bits plus headroom for the size of the
    /// coefficients, and returns values at `precision_bits`.
    pub fn to_complex_float(&self, precision_bits: usize) -> HighPrecisionComplex {
        let headroom = self
            .coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .max()
            .unwrap_or(0) as usize;
        let work = precision_bits.max(64) + 32 + headroom;
        let pi = HighPrecisionReal::pi(work);
        let m = self.order() as i64;
        let mut acc = HighPrecisionComplex::zero(work);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = HighPrecisionReal::from_rational(c, work);
            if k == 0 {
                acc.re = acc.re.add(&coeff);
                continue;
            }
            let angle = pi.mul_rational(&BigRational::new((2 * k as i64).into(), m.into()));
            acc.re = acc.re.add(&coeff.mul(&angle.cos()));
            acc.im = acc.im.add(&coeff.mul(&angle.sin()));
        }
        HighPrecisionComplex {
            re: acc.re.with_precision(precision_bits),
            im: acc.im.with_precision(precision_bits),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::{int, rat};
    use num_traits::Signed;

    #[test]
    fn i_is_fourth_root() {
        let i = CycloNum::root_of_unity(4, 1);
        assert_eq!(i.mul(&i).unwrap(), CycloNum::from_rational(4, int(-1)));
        assert!(!i.is_real());
        assert_eq!(i.conj(), i.neg());
        assert_eq!(CycloNum::root_of_unity(2, 1), CycloNum::from_rational(2, int(-1)));
    }

    #[test]
    fn conjugate_pair_sum() {
        let z = CycloNum::root_of_unity(6, 1)
            .add(&CycloNum::root_of_unity(6, 5))
            .unwrap();
        assert_eq!(z, CycloNum::one(6));
    }

    #[test]
    fn identities() {
        for m in [3u64, 5, 8, 12, 24] {
            let z = CycloNum::root_of_unity(m, 1);
            let zero = CycloNum::zero(m);
            assert_eq!(z.add(&zero).unwrap(), z);
            let inv = CycloNum::root_of_unity(m, m as i64 - 1);
            assert_eq!(z.mul(&inv).unwrap(), CycloNum::one(m));
            let mut sum = CycloNum::zero(m);
            for k in 0..m as i64 {
                sum = sum.add(&CycloNum::root_of_unity(m, k)).unwrap();
            }
            assert!(sum.is_zero(), "m = {m}");
            assert!(z.add(&z.conj()).unwrap().is_real());
        }
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(CycloNum::root_of_unity(12, -1), CycloNum::root_of_unity(12, 11));
        assert_eq!(CycloNum::root_of_unity(12, 25), CycloNum::root_of_unity(12, 1));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = CycloNum::one(4);
        let b = CycloNum::one(6);
        assert_eq!(a.add(&b), Err(Error::OrderMismatch { left: 4, right: 6 }));
        assert!(a.mul(&b).is_err());
        assert!(a.lift(6).is_err());
        let (x, y) = a.common_order(&b).unwrap();
        assert_eq!(x.order(), 12);
        assert_eq!(x, y);
    }

    #[test]
    fn lift_preserves_values() {
        let i4 = CycloNum::root_of_unity(4, 1);
        assert_eq!(i4.lift(12).unwrap(), CycloNum::root_of_unity(12, 3));
    }

    #[test]
    fn numeric_embedding() {
        let one = CycloNum::one(7).to_complex_float(128);
        assert_eq!(one.re.to_rational().unwrap(), int(1));
        assert!(one.im.is_zero());

        let z8 = CycloNum::root_of_unity(8, 1).to_complex_float(128);
        let half_sqrt2 = HighPrecisionReal::from_i64(2, 200).sqrt().mul_rational(&rat(1, 2));
        let tol = num_traits::pow(BigRational::from_integer(2.into()), 128).recip();
        for part in [&z8.re, &z8.im] {
            let gap = (part.to_rational().unwrap() - half_sqrt2.to_rational().unwrap()).abs();
            assert!(gap < tol);
        }

        let w = CycloNum::root_of_unity(3, 1)
            .add(&CycloNum::root_of_unity(3, 2))
            .unwrap();
        assert_eq!(w, CycloNum::from_rational(3, int(-1)));
        let v = w.to_complex_float(128);
        assert_eq!(v.re.to_rational().unwrap(), int(-1));
    }


}
