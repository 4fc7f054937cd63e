// Drives the command-line front end in-process.
//
// cargo run --example command_line

use trigderiv::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 6] = [
        &["eval", "--fn", "cot", "--n", "2", "--x", "1/3", "--format", "json", "--digits", "15"],
        &["eval", "--fn", "csc", "--n", "1", "--x", "2"],
        &["table", "--fn", "csc", "--n", "1..4", "--x", "1/2,1/3", "--format", "latex"],
        &["poly", "cyclotomic", "20"],
        &["verify", "--max-n", "2", "--max-q", "4", "--precision", "128"],
        &["identities", "--s", "2", "--max-q", "2"],
    ];
    for args in commands {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("trigderiv").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        println!("$ trigderiv {}", args.join(" "));
        print!("{}{}", String::from_utf8(out)?, String::from_utf8(err)?);
        println!("[exit {code}]");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("command_line example failed");
}
