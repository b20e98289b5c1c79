//! The hypercomplex structure triple J1, J2, J3 = -J1·J2, the dual matrices
//! M_alpha on the covector basis {dz̄1, dz1, dz̄2, dz2}, and the combination
//! J_w for an unnormalized direction.

use qregular::quaternion::ImaginaryDirection;
use qregular::structures::{structure_j, structure_jp, structure_m, value_structure};

fn main() {
    for alpha in 1..=3 {
        println!("J{alpha} =");
        print!("{}", structure_j(alpha));
    }

    println!(
        "J3 = -J1·J2: {}",
        structure_j(3) == -&(&structure_j(1) * &structure_j(2))
    );

    for alpha in 1..=3 {
        println!("\nM{alpha} (dual action on covectors) =");
        print!("{}", structure_m(alpha));
    }

    println!(
        "M3 = M1·M2: {}",
        structure_m(3) == &structure_m(1) * &structure_m(2)
    );

    println!("\nvalue-side structures (left multiplication on components):");
    for beta in 1..=3 {
        println!("L{beta} =");
        print!("{}", value_structure(beta));
    }

    let w = ImaginaryDirection::from_ints(1, 0, 2).unwrap();
    println!("\nJ_w for w = {w} (unnormalized J1 + 2·J3):");
    print!("{}", structure_jp(&w));
    let jw = structure_jp(&w);
    println!(
        "J_w² = -|w|²·identity with |w|² = {}:",
        qregular::scalar::rat_to_string(&w.norm_sq())
    );
    print!("{}", &jw * &jw);
}
