// Shortcut formulas at 1/2, 1/4 and 3/4 next to the general path.
//
// cargo run --example special_cases

use trigderiv::closed_form::{evaluate, special_case, DerivativeQuery, TrigFn};
use trigderiv::exact_kernel::rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<4} {:>2} {:<4} value", "fn", "n", "x");
    for (f, x) in [(TrigFn::Csc, rat(1, 2)), (TrigFn::Cot, rat(1, 4)), (TrigFn::Cot, rat(3, 4))] {
        for n in 1..=6 {
            let shortcut = special_case(f, n, &x)?;
            let general = evaluate(&DerivativeQuery::new(f, n, x.clone())?)?.value;
            assert_eq!(shortcut, general);
            println!("{:<4} {:>2} {:<4} {}", f.name(), n, x.to_string(), shortcut);
        }
    }
    match special_case(TrigFn::Tan, 2, &rat(1, 3)) {
        Err(e) => println!("tan at 1/3: {e}"),
        Ok(v) => return Err(format!("unexpected shortcut {v}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("special_cases example failed");
}
