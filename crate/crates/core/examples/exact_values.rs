// Exact derivative values at rational points, with each output format.
//
// cargo run --example exact_values

use trigderiv::cli::{decimal, latex};
use trigderiv::closed_form::{evaluate, DerivativeQuery, TrigFn};
use trigderiv::exact_kernel::rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let queries = [
        (TrigFn::Cot, 1, rat(1, 2)),
        (TrigFn::Cot, 3, rat(1, 5)),
        (TrigFn::Csc, 2, rat(1, 2)),
        (TrigFn::Tan, 1, rat(2, 3)),
        (TrigFn::Sec, 1, rat(1, 3)),
        (TrigFn::Sec, 4, rat(-7, 5)),
    ];
    for (f, n, x) in queries {
        let ev = evaluate(&DerivativeQuery::new(f, n, x.clone())?)?;
        println!("d^{n}/dx^{n} {f}(pi x) at x = {x}");
        println!("  exact   {}", ev.value);
        println!("  latex   {}", latex(&ev.value));
        println!("  decimal {}", decimal(&ev.value, 25)?);
        println!(
            "  window  p/q = {}/{}, sign {:+}, reflected {}",
            ev.normalized.p, ev.normalized.q, ev.normalized.sign, ev.normalized.reflected
        );
    }

    let pole = DerivativeQuery::new(TrigFn::Tan, 2, rat(5, 2));
    println!("tan at 5/2: {}", pole.unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact_values example failed");
}
