//! Wirtinger derivatives and the two Jacobians of a quaternionic function.

use qregular::cpoly::{CPoly, Var};
use qregular::expr::parse_function;

fn main() {
    let p = parse_function("z1^2*conj(z2)").unwrap().f1().clone();
    println!("P            = {p}");
    println!("dP/dz1       = {}", p.wirtinger(Var::Z1));
    println!("dP/dconj(z1) = {}", p.wirtinger(Var::Z1Bar));
    println!("dP/dconj(z2) = {}", p.wirtinger(Var::Z2Bar));
    println!("laplacian    = {}", p.laplacian());

    let modsq = &CPoly::var(Var::Z1) * &CPoly::var(Var::Z1Bar);
    println!("\n|z1|²        = {modsq}");
    println!("d|z1|²/dz̄1   = {}", modsq.wirtinger(Var::Z1Bar));
    println!("laplacian    = {}", modsq.laplacian());

    let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    println!("\nh = {h}");
    println!("complex Jacobian (rows f̄1, f1, f̄2, f2; columns z̄1, z1, z̄2, z2):");
    let jc = h.jacobian_complex();
    for row in &jc.mat().e {
        println!(
            "  [{}]",
            row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    println!("rank = {}", jc.rank());

    println!("real Jacobian (rows components of f; columns x0..x3):");
    let jr = h.jacobian_real();
    for row in &jr.mat().e {
        println!(
            "  [{}]",
            row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    println!(
        "Frobenius² equals tr(J_C conj(J_C)ᵀ) as polynomials: {}",
        jr.frobenius_sq() == jc.norm_density()
    );

    let g = parse_function("z1 + conj(z1) + conj(z2)*j").unwrap();
    println!("\ng = {g} has Jacobian rank {} (odd)", g.jacobian_complex().rank());
}
