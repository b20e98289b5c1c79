//! Shared deterministic generators for the integration suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qregular::cpoly::CPoly;
use qregular::quaternion::{ImaginaryDirection, Quaternion};
use qregular::scalar::{grat, rat, GRat};
use qregular::QFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> qregular::Rat {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=3);
    rat(num, den)
}

pub fn random_grat(rng: &mut ChaCha8Rng) -> GRat {
    grat(random_rat(rng), random_rat(rng))
}

pub fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        random_rat(rng),
        random_rat(rng),
        random_rat(rng),
        random_rat(rng),
    )
}

pub fn random_nonzero_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_direction(rng: &mut ChaCha8Rng) -> ImaginaryDirection {
    loop {
        let w1 = rng.gen_range(-4i64..=4);
        let w2 = rng.gen_range(-4i64..=4);
        let w3 = rng.gen_range(-4i64..=4);
        if let Ok(w) = ImaginaryDirection::from_ints(w1, w2, w3) {
            return w;
        }
    }
}

/// Random polynomial with a handful of monomials of total degree <= max_deg.
pub fn random_cpoly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> CPoly {
    let mut p = CPoly::zero();
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let expo = loop {
            let e: [u32; 4] = std::array::from_fn(|_| rng.gen_range(0..=max_deg));
            if e.iter().sum::<u32>() <= max_deg {
                break e;
            }
        };
        p = &p + &CPoly::monomial(expo, random_grat(rng));
    }
    p
}

/// Random quaternionic polynomial function, generically not psi-regular.
pub fn random_function(rng: &mut ChaCha8Rng, max_deg: u32) -> QFunction {
    QFunction::from_parts(
        random_cpoly(rng, max_deg, 4),
        random_cpoly(rng, max_deg, 4),
    )
}

fn mono(e: [u32; 4], num: i64) -> CPoly {
    CPoly::monomial(e, grat(rat(num, 1), rat(0, 1)))
}

/// A spanning family of psi-regular functions of degree <= 3: constants,
/// holomorphic pairs, and the bar-containing solutions of the CR system.
/// Every element satisfies the psi-regularity equations by construction.
pub fn psi_regular_basis(max_deg: u32) -> Vec<QFunction> {
    let mut basis = vec![
        QFunction::constant(&Quaternion::one()),
        QFunction::constant(&Quaternion::i()),
        QFunction::constant(&Quaternion::j()),
        QFunction::constant(&Quaternion::k()),
    ];
    if max_deg == 0 {
        return basis;
    }

    // holomorphic monomials up to degree 3 in the two slots
    let hol: &[[u32; 4]] = match max_deg {
        1 => &[[1, 0, 0, 0], [0, 0, 1, 0]],
        2 => &[
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [2, 0, 0, 0],
            [1, 0, 1, 0],
            [0, 0, 2, 0],
        ],
        _ => &[
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [2, 0, 0, 0],
            [1, 0, 1, 0],
            [0, 0, 2, 0],
            [3, 0, 0, 0],
            [2, 0, 1, 0],
            [1, 0, 2, 0],
            [0, 0, 3, 0],
        ],
    };
    for e in hol {
        basis.push(QFunction::from_parts(mono(*e, 1), CPoly::zero()));
        basis.push(QFunction::from_parts(CPoly::zero(), mono(*e, 1)));
    }

    // z̄1 + z̄2 j
    basis.push(QFunction::from_parts(
        mono([0, 1, 0, 0], 1),
        mono([0, 0, 0, 1], 1),
    ));

    if max_deg >= 2 {
        // solutions with conjugate variables, from harmonic data
        basis.push(QFunction::from_parts(
            &mono([1, 1, 0, 0], 1) - &mono([0, 0, 1, 1], 1),
            mono([0, 1, 0, 1], 1),
        ));
        basis.push(QFunction::from_parts(
            mono([1, 0, 0, 1], -2),
            mono([0, 2, 0, 0], 1),
        ));
        basis.push(QFunction::from_parts(
            mono([0, 1, 1, 0], 2),
            mono([0, 0, 0, 2], 1),
        ));
        basis.push(QFunction::from_parts(
            mono([0, 2, 0, 0], 1),
            mono([1, 0, 0, 1], 2),
        ));
        basis.push(QFunction::from_parts(
            mono([0, 0, 0, 2], -1),
            mono([0, 1, 1, 0], 2),
        ));
    }

    if max_deg >= 3 {
        basis.push(QFunction::from_parts(
            &mono([2, 1, 0, 0], 1) - &mono([1, 0, 1, 1], 2),
            mono([0, 2, 0, 1], 1),
        ));
        basis.push(QFunction::from_parts(
            &mono([1, 1, 1, 0], 2) - &mono([0, 0, 2, 1], 1),
            mono([0, 1, 0, 2], 1),
        ));
        basis.push(QFunction::from_parts(
            mono([2, 0, 0, 1], -3),
            mono([0, 3, 0, 0], 1),
        ));
        basis.push(QFunction::from_parts(
            mono([0, 1, 2, 0], 3),
            mono([0, 0, 0, 3], 1),
        ));
    }

    basis
}

/// Random psi-regular function: a short combination of basis elements, each
/// multiplied on the right by a random quaternion.
pub fn random_psi_regular(rng: &mut ChaCha8Rng, max_deg: u32) -> QFunction {
    let basis = psi_regular_basis(max_deg);
    let picks = rng.gen_range(2..=4);
    let mut acc = QFunction::zero();
    for _ in 0..picks {
        let b = &basis[rng.gen_range(0..basis.len())];
        acc = &acc + &b.right_mul(&random_quaternion(rng));
    }
    acc
}
