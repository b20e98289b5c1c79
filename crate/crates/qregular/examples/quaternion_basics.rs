//! Quaternion arithmetic: Hamilton product, conjugation, and the matrices of
//! left multiplication.

use qregular::quaternion::Quaternion;
use qregular::structures::left_mult_matrix;

fn main() {
    let i = Quaternion::i();
    let j = Quaternion::j();
    let k = Quaternion::k();

    println!("i·j   = {}", &i * &j);
    println!("j·i   = {}", &j * &i);
    println!("i·j·k = {}", &(&i * &j) * &k);

    let a = Quaternion::from_ints(1, 1, 0, 0);
    let b = Quaternion::from_ints(1, 0, 1, 0);
    println!("(1+i)(1+j) = {}", &a * &b);

    let q = Quaternion::from_ints(1, 2, -1, 3);
    println!("q        = {}", q);
    println!("conj(q)  = {}", q.conjugate());
    println!("|q|²     = {}", qregular::scalar::rat_to_string(&q.norm_sq()));
    println!(
        "conj(ab) = conj(b)conj(a): {}",
        (&a * &b).conjugate() == &b.conjugate() * &a.conjugate()
    );

    println!("\nmatrix of left multiplication by i:");
    print!("{}", left_mult_matrix(&i));

    let li = left_mult_matrix(&i);
    println!("L_i² = -identity: {}", &li * &li == left_mult_matrix(&Quaternion::from_ints(-1, 0, 0, 0)));
}
