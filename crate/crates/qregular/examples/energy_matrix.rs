//! Dirichlet energy and the 3x3 energy matrix A for the published example
//! functions, with the invariants tying them together.

use qregular::energy::{energy, invariant_i, invariant_i_p, invariant_k, matrix_a};
use qregular::expr::parse_function;
use qregular::integrate::DomainSpec;
use qregular::quaternion::ImaginaryDirection;
use qregular::scalar::{rat, rat_to_string};

fn main() {
    let ball = DomainSpec::unit_ball();
    let cases = [
        "z1 + z2*j",
        "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j",
        "conj(z1) + (z1 + conj(z2))*j",
        "z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j",
    ];
    for src in cases {
        let f = parse_function(src).unwrap();
        let em = matrix_a(&f, &ball);
        println!("f = {f}");
        println!("  energy = {}", rat_to_string(em.energy()));
        println!("  A =");
        for row in em.entries() {
            println!(
                "    [{}]",
                row.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
            );
        }
        println!("  tr A = {}", rat_to_string(em.trace()));
        println!("  det(A - trA·I) = {}", rat_to_string(em.det_shifted()));
        println!();
    }

    // E + K = I/4 on a function that is not psi-regular
    let g = parse_function("conj(z1)").unwrap();
    let e = energy(&g, &ball);
    let k = invariant_k(&g, &ball);
    let i = invariant_i(&g, &ball);
    println!("g = conj(z1): E = {}, K = {}, I = {}", rat_to_string(&e), rat_to_string(&k), rat_to_string(&i));
    println!("E + K - I/4 = {}", rat_to_string(&(&(&e + &k) - &(i * rat(1, 4)))));

    // X A Xᵀ = E - I_p/4 along a direction
    let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    let em = matrix_a(&h, &ball);
    let w = ImaginaryDirection::from_ints(1, 0, 2).unwrap();
    let lhs = em.quadratic_form(&w);
    let ip = invariant_i_p(&h, &w, &ball);
    println!(
        "\nh along w = {w}: XAXᵀ = {}, E - I_p/4 = {}",
        rat_to_string(&lhs),
        rat_to_string(&(em.energy() - &(ip * rat(1, 4))))
    );
}
