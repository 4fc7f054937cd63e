// Bernoulli and Euler polynomials and the zeta values they encode.
//
// cargo run --example bernoulli_euler

use trigderiv::exact_kernel::{bernoulli_poly, euler_poly, int, rat, zeta_neg, zeta_star_neg};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=6 {
        println!("B_{n}(x) = {}", bernoulli_poly(n));
    }
    for n in 0..=6 {
        println!("E_{n}(x) = {}", euler_poly(n));
    }
    let b2 = bernoulli_poly(2);
    println!("B_2(1/4) = {}", b2.eval(&rat(1, 4)));
    println!("B_2(1 - x) = {}", b2.reflect());
    println!("zeta(-1, 1) = {}", zeta_neg(2, &int(1))?);
    println!("zeta(-1, 1/4) = {}", zeta_neg(2, &rat(1, 4))?);
    println!("zeta*(-1, 1/6) = {}", zeta_star_neg(1, &rat(1, 6))?);
    println!("zeta(0, 0) -> {}", zeta_neg(1, &int(0)).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bernoulli_euler example failed");
}
