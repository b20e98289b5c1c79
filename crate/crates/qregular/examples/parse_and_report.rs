//! Expression parsing, normal forms, and the JSON report.

use qregular::expr::parse_function;
use qregular::integrate::DomainSpec;
use qregular::report::{analyze, AnalyzeOptions};

fn main() {
    // products normalize through j·P = conj(P)·j
    for src in ["z1*j", "j*z1", "(z1 + z2*j)*j", "(i+j)^2", "conj(z1 + z2*j)"] {
        let f = parse_function(src).unwrap();
        println!("{src:24} -> {f}");
    }

    let src = "conj(z1) + (z1 + conj(z2))*j";
    let f = parse_function(src).unwrap();
    let report = analyze(
        &f,
        src,
        &DomainSpec::unit_ball(),
        AnalyzeOptions { include_approx: true },
    );
    println!("\n{}", report.to_json());

    let err = parse_function("z1 + conj(z3)").unwrap_err();
    println!("\nerror reporting: {err}");
}
