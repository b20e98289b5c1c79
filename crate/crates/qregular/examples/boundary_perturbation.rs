//! psi-regular functions minimize energy among maps with the same boundary
//! values: perturbing by (1 - |z1|² - |z2|²)·g keeps K and never lowers E.

use qregular::energy::{energy, invariant_k, perturb_fixed_boundary};
use qregular::expr::parse_function;
use qregular::integrate::DomainSpec;
use qregular::scalar::rat_to_string;

fn main() {
    let ball = DomainSpec::unit_ball();
    let f = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    println!("f = {f}");
    println!(
        "E(f) = {}, K(f) = {}",
        rat_to_string(&energy(&f, &ball)),
        rat_to_string(&invariant_k(&f, &ball))
    );

    let perturbations = ["1", "i + 2*j", "z1", "z2*j - k", "z1 + conj(z2)*j"];
    for src in perturbations {
        let g = parse_function(src).unwrap();
        let u = perturb_fixed_boundary(&f, &g);
        let e_u = energy(&u, &ball);
        let k_u = invariant_k(&u, &ball);
        println!("\ng = {g}");
        println!("  u = f + (1 - |z1|² - |z2|²)g = {u}");
        println!(
            "  E(u) = {} (>= E(f): {})",
            rat_to_string(&e_u),
            e_u >= energy(&f, &ball)
        );
        println!(
            "  K(u) = {} (= K(f): {})",
            rat_to_string(&k_u),
            k_u == invariant_k(&f, &ball)
        );
    }
}
