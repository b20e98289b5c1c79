//! The four classes of psi-regular functions by the size of their sets of
//! compatible complex structures.

use qregular::energy::classify;
use qregular::expr::parse_function;
use qregular::integrate::DomainSpec;

fn main() {
    let ball = DomainSpec::unit_ball();
    let cases = [
        ("constant", "1 + k"),
        ("identity", "z1 + z2*j"),
        ("right multiple of the identity", "(z1 + z2*j)*(1 + 2i - j)"),
        ("antiholomorphic pair", "conj(z1) + conj(z2)*j"),
        ("one-structure example", "conj(z1) + (z1 + conj(z2))*j"),
        ("no-structure linear example", "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j"),
        ("no-structure quadratic example", "z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j"),
        ("not psi-regular", "conj(z1)"),
    ];
    for (label, src) in cases {
        let f = parse_function(src).unwrap();
        let cl = classify(&f, &ball);
        println!("{label}: f = {f}");
        println!("  class {}  J(f) = {}", cl.class, cl.structures);
        println!(
            "  energy {}  tr A {}",
            qregular::scalar::rat_to_string(cl.energy_matrix.energy()),
            qregular::scalar::rat_to_string(cl.energy_matrix.trace())
        );
    }
}
