// The derivative polynomials behind the oracle.
//
// cargo run --example derivative_polynomials

use num_traits::{One, Signed};

use trigderiv::closed_form::TrigFn;
use trigderiv::numeric::HighPrecisionReal;
use trigderiv::oracle::deriv_poly;

fn render(f: TrigFn, n: u32) -> String {
    let (x, y) = match f {
        TrigFn::Cot | TrigFn::Csc => ("csc", "cot"),
        TrigFn::Tan | TrigFn::Sec => ("sec", "tan"),
    };
    let mut out = String::new();
    for (&(a, b), c) in &deriv_poly(f, n).terms {
        let mut factors: Vec<String> = Vec::new();
        for (var, e) in [(x, a), (y, b)] {
            match e {
                0 => {}
                1 => factors.push(var.to_string()),
                _ => factors.push(format!("{var}^{e}")),
            }
        }
        let magnitude = c.abs();
        let mut term = if magnitude.is_one() && !factors.is_empty() { String::new() } else { magnitude.to_string() };
        if !term.is_empty() && !factors.is_empty() {
            term.push('*');
        }
        term.push_str(&factors.join("*"));
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            out = if c.is_negative() { format!("-{term}") } else { term };
        } else {
            out.push_str(&format!(" {sign} {term}"));
        }
    }
    out
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for f in TrigFn::ALL {
        for n in 1..=3 {
            println!("{f}^({n}) = {}", render(f, n));
        }
    }
    let p = deriv_poly(TrigFn::Sec, 2);
    let sec = HighPrecisionReal::from_i64(2, 128);
    let tan = HighPrecisionReal::from_i64(3, 128).sqrt();
    println!("sec''(pi/3) = {:.20}", p.eval_state(&sec, &tan));
    let big = deriv_poly(TrigFn::Tan, 30);
    println!("tan^(30): {} terms, largest coefficient {} bits", big.terms.len(), big.coeff_bits());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("derivative_polynomials example failed");
}
