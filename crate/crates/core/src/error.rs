use num_rational::BigRational;
use thiserror::Error;

use crate::closed_form::TrigFn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The evaluation point is a singularity of the function.
    #[error("{function}(pi*x) has a pole at x = {x}")]
    Pole { function: TrigFn, x: BigRational },

    /// The point is regular but outside what the closed forms cover.
    #[error("{0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("expected a real cyclotomic element")]
    NotReal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no dedicated formula for {function} of order {order} at x = {x}")]
    UnsupportedSpecialCase {
        function: TrigFn,
        order: u32,
        x: BigRational,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
