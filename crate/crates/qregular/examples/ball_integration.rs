//! Exact volume-normalized integration over the unit ball and a box, checked
//! against the seeded Monte Carlo oracle.

use qregular::cpoly::{CPoly, Var};
use qregular::integrate::{integrate_monomial, integrate_poly, monte_carlo_integral, DomainSpec};
use qregular::scalar::{grat_to_string, rat_int};

fn main() {
    let ball = DomainSpec::unit_ball();

    println!("normalized monomial integrals over the unit ball:");
    for expo in [[0, 0, 0, 0], [1, 1, 0, 0], [1, 0, 0, 0], [2, 2, 0, 0], [1, 1, 1, 1]] {
        println!(
            "  z1^{} z̄1^{} z2^{} z̄2^{} -> {}",
            expo[0],
            expo[1],
            expo[2],
            expo[3],
            grat_to_string(&integrate_monomial(&expo, &ball))
        );
    }

    let p = &(&CPoly::var(Var::Z1) * &CPoly::var(Var::Z1Bar))
        + &(&CPoly::var(Var::Z2) * &CPoly::var(Var::Z2Bar));
    let exact = integrate_poly(&p, &ball);
    println!("\nP = {p}");
    println!("exact integral: {}", grat_to_string(&exact));

    let est = monte_carlo_integral(&p, &ball, 200_000, 2024);
    println!(
        "Monte Carlo (200k samples, seed 2024): {:.6} ± {:.6}",
        est.re, est.re_stderr
    );
    println!("within 4 standard errors: {}", est.agrees_with(&exact, 4.0));

    let cube = DomainSpec::cuboid([
        (rat_int(0), rat_int(1)),
        (rat_int(0), rat_int(1)),
        (rat_int(0), rat_int(1)),
        (rat_int(0), rat_int(1)),
    ])
    .unwrap();
    let z1 = CPoly::var(Var::Z1);
    let exact = integrate_poly(&z1, &cube);
    let est = monte_carlo_integral(&z1, &cube, 200_000, 7);
    println!("\nz1 over the unit box: exact {}", grat_to_string(&exact));
    println!(
        "Monte Carlo: {:.6}+{:.6}i (stderr {:.6}, {:.6})",
        est.re, est.im, est.re_stderr, est.im_stderr
    );
}
