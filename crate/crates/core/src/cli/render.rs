use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::closed_form::{Evaluation, ExactValue, TrigFn, TrigKind, TrigSum};
use crate::error::{Error, Result};
use crate::numeric::format_fixed;

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    kind: TrigKind,
    k: u64,
    d: u64,
}

/// Stable JSON form of one evaluation.
#[derive(Serialize)]
pub struct EvalJson {
    function: TrigFn,
    n: u32,
    p: i64,
    q: u64,
    sign: i8,
    pi_power: u32,
    terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decimal: Option<String>,
}

impl EvalJson {
    pub fn new(ev: &Evaluation, digits: Option<usize>) -> Result<Self> {
        let x = &ev.query.x;
        let too_big = || Error::Domain(format!("x = {x} does not fit 64-bit JSON integers"));
        Ok(Self {
            function: ev.query.function,
            n: ev.query.order,
            p: x.numer().to_i64().ok_or_else(too_big)?,
            q: x.denom().to_u64().ok_or_else(too_big)?,
            sign: ev.normalized.sign,
            pi_power: ev.value.pi_power,
            terms: ev
                .value
                .sum
                .terms()
                .iter()
                .map(|t| TermJson {
                    coeff: t.coeff.to_string(),
                    kind: t.kind,
                    k: t.k,
                    d: t.d,
                })
                .collect(),
            decimal: digits.map(|d| decimal(&ev.value, d)).transpose()?,
        })
    }
}

/// `value` rounded to `digits` places after the point.
pub fn decimal(value: &ExactValue, digits: usize) -> Result<String> {
    if value.is_zero() {
        return Ok(format_fixed(&BigRational::from_integer(0.into()), digits));
    }
    let magnitude = value.eval(64).log2_floor().unwrap_or(0).max(0) as usize;
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + magnitude + 64;
    Ok(format_fixed(&value.eval(bits).to_rational()?, digits))
}

fn pi_power(n: u32) -> String {
    match n {
        1 => "\\pi".into(),
        _ => format!("\\pi^{{{n}}}"),
    }
}

/// `2`, `-1`, `(2/3)`, `(-1/6)`.
fn latex_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

fn latex_angle(k: u64, d: u64) -> String {
    let num = if k == 1 { "\\pi".to_string() } else { format!("{k}\\pi") };
    if d == 1 {
        num
    } else {
        format!("{num}/{d}")
    }
}

fn latex_sum(sum: &TrigSum) -> String {
    let mut out = String::new();
    for (i, t) in sum.terms().iter().enumerate() {
        let negative = t.coeff.is_negative();
        let mag = t.coeff.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if t.k == 0 {
            out.push_str(&latex_coeff(&mag));
            continue;
        }
        if !mag.is_one() {
            out.push_str(&latex_coeff(&mag));
        }
        let f = match t.kind {
            TrigKind::Cos => "\\cos",
            TrigKind::Sin => "\\sin",
        };
        out.push_str(&format!("{f}({})", latex_angle(t.k, t.d)));
    }
    out
}

/// LaTeX using only `\pi`, `\cos` and `\sin`.
pub fn latex(value: &ExactValue) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let pi = pi_power(value.pi_power);
    if let Some(c) = value.sum.as_rational() {
        let head = if c.is_one() {
            String::new()
        } else if c == -BigRational::one() {
            "-".into()
        } else {
            latex_coeff(&c)
        };
        return format!("{head}{pi}");
    }
    format!("{pi}({})", latex_sum(&value.sum))
}
