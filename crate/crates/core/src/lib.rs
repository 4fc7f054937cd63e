//! Exact values of every derivative of `cot(pi x)`, `csc(pi x)`, `tan(pi x)`
//! and `sec(pi x)` at rational `x`, written as `pi^n` times a finite rational
//! combination of cosines, together with an independent high-precision
//! oracle that checks them.
//!
//! ```
//! use trigderiv::closed_form::{evaluate, DerivativeQuery, TrigFn};
//! use trigderiv::exact_kernel::rat;
//!
//! // d/dx cot(pi x) at x = 1/2 is -pi
//! let q = DerivativeQuery::new(TrigFn::Cot, 1, rat(1, 2)).unwrap();
//! let v = evaluate(&q).unwrap().value;
//! assert_eq!(v.pi_power, 1);
//! assert_eq!(v.sum.to_string(), "-1");
//! ```

pub mod cli;
pub mod closed_form;
pub mod cyclo;
pub mod error;
pub mod exact_kernel;
pub mod numeric;
pub mod oracle;

pub use error::{Error, Result};
