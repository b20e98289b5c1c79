//! Fueter, psi-regularity, harmonicity and Hol_p membership verdicts.

use qregular::expr::parse_function;
use qregular::quaternion::ImaginaryDirection;
use qregular::regularity::{
    check_fueter, check_harmonic, check_holomorphic_p, check_psi, check_q_holomorphic,
};

fn main() {
    let samples = [
        "z1 + z2*j",
        "conj(z1)",
        "conj(z1) + conj(z2)*j",
        "conj(z1) + (z1 + conj(z2))*j",
        "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j",
        "z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j",
    ];
    for src in samples {
        let f = parse_function(src).unwrap();
        let psi = check_psi(&f);
        let fueter = check_fueter(&f);
        println!("f = {f}");
        println!(
            "  psi-regular={} fueter-regular={} q-holomorphic={} harmonic={}",
            psi.holds,
            fueter.holds,
            check_q_holomorphic(&f),
            check_harmonic(&f)
        );
        if !psi.holds {
            println!("  D'f = {}", psi.residual);
        }
    }

    println!("\nmembership in Hol_p (direction carried unnormalized):");
    let id = parse_function("z1 + z2*j").unwrap();
    for (w1, w2, w3) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -3, 0)] {
        let w = ImaginaryDirection::from_ints(w1, w2, w3).unwrap();
        println!(
            "  identity in Hol along ±{w}: {}",
            check_holomorphic_p(&id, &w)
        );
    }
    let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    let w = ImaginaryDirection::from_ints(1, 0, 2).unwrap();
    println!("  h along ±{w}: {}", check_holomorphic_p(&h, &w));
}
