// Compares closed forms against the derivative-polynomial oracle.
//
// cargo run --example oracle_verification

use trigderiv::closed_form::{DerivativeQuery, TrigFn};
use trigderiv::exact_kernel::rat;
use trigderiv::oracle::{eval_oracle, sweep, verify};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = verify(&DerivativeQuery::new(TrigFn::Sec, 1, rat(1, 3))?, 256)?;
    println!("{r}");
    println!("{}", serde_json::to_string(&r)?);

    let direct = eval_oracle(TrigFn::Tan, 5, 2, 9, 128)?;
    println!("oracle tan^(5)(2/9) = {direct:.30}");

    let reports = sweep(4, 8, 192)?;
    let failures = reports.iter().filter(|r| !r.pass).count();
    let worst = reports.iter().map(|r| r.rel_gap).fold(0.0, f64::max);
    println!("sweep: {} cases, {failures} failures, worst relative gap {worst:.2e}", reports.len());
    if failures > 0 {
        return Err("sweep found disagreements".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oracle_verification example failed");
}
