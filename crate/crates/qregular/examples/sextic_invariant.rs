//! The degree-6 invariant of linear psi-regular functions: its explicit
//! 66-monomial expansion against the energy-matrix pipeline.

use qregular::linear::{linear_function, sextic_cross_check, sextic_value, LinearCoefficients};
use qregular::quaternion::Quaternion;
use qregular::scalar::rat_to_string;

fn main() {
    let cases = [
        (
            "identity",
            LinearCoefficients::new(Quaternion::one(), Quaternion::zero(), Quaternion::zero()),
        ),
        (
            "antiholomorphic generator",
            LinearCoefficients::new(Quaternion::zero(), Quaternion::zero(), Quaternion::one()),
        ),
        (
            "generic member",
            LinearCoefficients::new(
                Quaternion::from_ints(1, 0, 0, 0),
                Quaternion::from_ints(0, 1, 0, 0),
                Quaternion::from_ints(1, 1, 0, 0),
            ),
        ),
        (
            "another generic member",
            LinearCoefficients::new(
                Quaternion::from_ints(2, -1, 1, 0),
                Quaternion::from_ints(0, 0, 1, 1),
                Quaternion::from_ints(1, 0, -2, 3),
            ),
        ),
    ];
    for (label, coeffs) in cases {
        let f = linear_function(&coeffs);
        println!("{label}: f = {f}");
        println!("  sextic value = {}", rat_to_string(&sextic_value(&coeffs)));
        match sextic_cross_check(&coeffs) {
            Ok(v) => println!(
                "  pipeline det(A - trA·I)/16 agrees: {}{}",
                rat_to_string(&v),
                if v == qregular::scalar::rat_int(0) {
                    "  (holomorphic for some structure)"
                } else {
                    "  (holomorphic for no structure)"
                }
            ),
            Err(e) => println!("  MISMATCH: {e}"),
        }
    }
}
