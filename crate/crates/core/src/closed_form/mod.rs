//! Closed forms for the derivatives of `cot(pi x)`, `csc(pi x)`, `tan(pi x)`
//! and `sec(pi x)` at rational points.
//!
//! Each derivative is `pi^n` times a finite sum of roots of unity weighted by
//! Bernoulli or Euler polynomial values. The sum is computed exactly in a
//! cyclotomic field of order `lcm(4, 2q)` (which contains `i` and every root
//! the sums need) and then rewritten as a rational combination of cosines.

mod normalize;
mod special;
mod theorems;
mod trig_sum;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::numeric::HighPrecisionReal;

pub use normalize::{evaluate, normalize_argument, DerivativeQuery, Evaluation, Normalized};
pub use special::special_case;
pub use theorems::{cot_deriv, csc_deriv, sec_deriv, tan_deriv, theorem_deriv};
pub use trig_sum::{to_trig_sum, TrigKind, TrigSum, TrigTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigFn {
    Cot,
    Csc,
    Tan,
    Sec,
}

impl TrigFn {
    pub const ALL: [TrigFn; 4] = [TrigFn::Cot, TrigFn::Csc, TrigFn::Tan, TrigFn::Sec];

    pub fn name(self) -> &'static str {
        match self {
            TrigFn::Cot => "cot",
            TrigFn::Csc => "csc",
            TrigFn::Tan => "tan",
            TrigFn::Sec => "sec",
        }
    }

    /// `f(pi(x + 1)) = -f(pi x)` rather than `f(pi x)`.
    pub fn is_antiperiodic(self) -> bool {
        matches!(self, TrigFn::Csc | TrigFn::Sec)
    }

    /// tan and sec: poles at half-integers, closed forms need `p < q/2`.
    pub fn is_half_window(self) -> bool {
        matches!(self, TrigFn::Tan | TrigFn::Sec)
    }
}

impl fmt::Display for TrigFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrigFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cot" => Ok(TrigFn::Cot),
            "csc" => Ok(TrigFn::Csc),
            "tan" => Ok(TrigFn::Tan),
            "sec" => Ok(TrigFn::Sec),
            other => Err(Error::Parse(format!("unknown function {other:?}"))),
        }
    }
}

/// `pi^pi_power * sum`, with the cyclotomic element the sum was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactValue {
    pub pi_power: u32,
    pub sum: TrigSum,
    pub witness: CycloNum,
}

impl ExactValue {
    /// Wraps a real witness, deriving its trig form.
    pub fn from_witness(pi_power: u32, witness: CycloNum) -> Result<Self> {
        let sum = to_trig_sum(&witness)?;
        Ok(Self {
            pi_power,
            sum,
            witness,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self {
            pi_power: self.pi_power,
            sum: self.sum.neg(),
            witness: self.witness.neg(),
        }
    }

    /// `pi^pi_power * value(sum)` at `precision` bits.
    pub fn eval(&self, precision: usize) -> HighPrecisionReal {
        let work = precision + 32 + 2 * self.pi_power as usize;
        let pi_n = HighPrecisionReal::pi(work).powi(self.pi_power as usize);
        self.sum.eval(work).mul(&pi_n).with_precision(precision)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sum.is_zero() {
            return f.write_str("0");
        }
        write!(f, "pi^{} * ({})", self.pi_power, self.sum)
    }
}
