// Direct series for the Hurwitz, Lerch and Legendre chi functions, and the
// finite Hurwitz-zeta decompositions checked against them.
//
// cargo run --example zeta_decompositions

use std::f64::consts::PI;

use trigderiv::oracle::{alt_hurwitz_zeta, check_decompositions, chi, hurwitz_zeta, lerch_l};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = hurwitz_zeta(2.0, 1.0, 1e-12)?;
    println!("zeta(2, 1)  = {:.15} (pi^2/6 = {:.15}), {} terms, bound {:.1e}", z.value.re, PI * PI / 6.0, z.terms, z.tail_bound);
    let z = alt_hurwitz_zeta(1.0, 0.5, 1e-12)?;
    println!("zeta*(1, 1/2) = {:.15} (pi/2 = {:.15})", z.value.re, PI / 2.0);
    let l = lerch_l(2.0, 1, 2, 1e-12)?;
    println!("l_2(1/2) = {:.15}", l.value);
    let c = chi(3.0, 1, 4, 1e-12)?;
    println!("chi_3(e^(i pi/4)) = {:.15}", c.value);

    let report = check_decompositions(&[2.0, 3.0], 5, 1e-10)?;
    for note in &report.notes {
        println!("note: {note}");
    }
    for (identity, worst) in report.max_by_identity() {
        println!("{identity:<18} max residual {worst:.2e}");
    }
    if !report.pass() {
        return Err("decomposition residual above tolerance".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("zeta_decompositions example failed");
}
