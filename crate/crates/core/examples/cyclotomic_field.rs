// Exact arithmetic with roots of unity.
//
// cargo run --example cyclotomic_field

use trigderiv::cyclo::{cyclotomic_poly, CycloNum};
use trigderiv::exact_kernel::int;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in [1, 2, 6, 8, 12, 15] {
        println!("Phi_{m}(x) = {}", cyclotomic_poly(m));
    }

    let i = CycloNum::root_of_unity(4, 1);
    println!("i * i = {}", i.mul(&i)?);

    // 2 cos(pi/6) = zeta_12 + zeta_12^-1 squares to 3
    let c = CycloNum::root_of_unity(12, 1).add(&CycloNum::root_of_unity(12, -1))?;
    let square = c.mul(&c)?;
    println!("(2 cos(pi/6))^2 = {square}, real: {}", c.is_real());
    assert_eq!(square.as_rational(), Some(int(3)));

    let z = CycloNum::root_of_unity(5, 2);
    let v = z.to_complex_float(128);
    println!("zeta_5^2 = {:.20} + {:.20} i", v.re, v.im);

    let (a, b) = CycloNum::root_of_unity(4, 1).common_order(&CycloNum::root_of_unity(6, 1))?;
    println!("lifted to order {}: {} and {}", a.order(), a, b);
    println!("mixing orders directly: {}", i.add(&CycloNum::one(6)).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cyclotomic_field example failed");
}
