//! Acceptance suite: one test per criterion, every tolerance pinned here.
//! All exact assertions use zero tolerance; the Monte Carlo oracle is held to
//! four standard errors. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS line per criterion.

mod common;

use num_traits::{Signed, Zero};
use rand::Rng;

use common::*;
use qregular::cpoly::CPoly;
use qregular::energy::{
    classify, energy, invariant_i, invariant_i_p, invariant_k, matrix_a, perturb_fixed_boundary,
    FunctionClass, StructureSet,
};
use qregular::expr::parse_function;
use qregular::integrate::{integrate_monomial, monte_carlo_integral, DomainSpec};
use qregular::linear::{linear_function, sextic_cross_check, sextic_value, LinearCoefficients};
use qregular::quaternion::{ImaginaryDirection, Quaternion};
use qregular::regularity::{check_holomorphic_p, check_psi};
use qregular::scalar::{rat, rat_int, Rat};
use qregular::QFunction;

fn ub() -> DomainSpec {
    DomainSpec::unit_ball()
}

fn rat_rows(rows: [[i64; 3]; 3]) -> [[Rat; 3]; 3] {
    rows.map(|r| r.map(rat_int))
}

#[test]
fn criterion_01_linear_example_energy_and_matrix() {
    let f = parse_function("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j").unwrap();
    let em = matrix_a(&f, &ub());
    assert_eq!(em.energy(), &rat_int(6));
    assert_eq!(em.entries(), &rat_rows([[2, 0, 0], [0, 2, 0], [0, 0, 2]]));
    let cl = classify(&f, &ub());
    assert_eq!(cl.class, FunctionClass::TypeIV);
    assert_eq!(cl.structures, StructureSet::Empty);
    println!("PASS 01: linear example has E=6, A=2I, class IV (exact)");
}

#[test]
fn criterion_02_positive_example_h() {
    let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    let em = matrix_a(&h, &ub());
    assert_eq!(em.energy(), &rat_int(3));
    assert_eq!(em.entries(), &rat_rows([[-1, 0, 2], [0, 2, 0], [2, 0, 2]]));
    let cl = classify(&h, &ub());
    assert_eq!(cl.class, FunctionClass::TypeIII);
    let expected: [num_bigint::BigInt; 3] =
        [1.into(), 0.into(), 2.into()];
    assert_eq!(cl.structures, StructureSet::Pair { direction: expected });
    let w = ImaginaryDirection::from_ints(1, 0, 2).unwrap();
    assert!(check_holomorphic_p(&h, &w));
    println!("PASS 02: h has E=3, the published A, class III with direction (1,0,2) (exact)");
}

#[test]
fn criterion_03_quadratic_example() {
    let f = parse_function("z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j").unwrap();
    let em = matrix_a(&f, &ub());
    assert_eq!(em.energy(), &rat_int(2));
    let expected = [
        [rat(-2, 3), rat_int(0), rat_int(0)],
        [rat_int(0), rat(4, 3), rat_int(0)],
        [rat_int(0), rat_int(0), rat(4, 3)],
    ];
    assert_eq!(em.entries(), &expected);
    assert_eq!(classify(&f, &ub()).class, FunctionClass::TypeIV);
    println!("PASS 03: quadratic example has E=2, A=diag(-2/3,4/3,4/3), class IV (exact)");
}

#[test]
fn criterion_04_odd_rank_example() {
    let g = parse_function("z1 + conj(z1) + conj(z2)*j").unwrap();
    assert!(check_psi(&g).holds);
    assert_eq!(g.jacobian_complex().rank(), 3);
    assert_eq!(classify(&g, &ub()).class, FunctionClass::TypeIV);
    println!("PASS 04: odd-rank example is psi-regular with rank 3 and class IV (exact)");
}

#[test]
fn criterion_05_membership_regressions() {
    let id = QFunction::identity();
    let wi = ImaginaryDirection::from_ints(1, 0, 0).unwrap();
    let wj = ImaginaryDirection::from_ints(0, 1, 0).unwrap();
    let wk = ImaginaryDirection::from_ints(0, 0, 1).unwrap();
    assert!(check_holomorphic_p(&id, &wi));
    assert!(check_holomorphic_p(&id, &wj));
    assert!(!check_holomorphic_p(&id, &wk));

    // membership is invariant under w -> -w
    let mut r = rng(501);
    let samples = [
        id.clone(),
        parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap(),
        QFunction::from_parts(CPoly::var(qregular::Var::Z1Bar), CPoly::zero()),
    ];
    for f in &samples {
        for _ in 0..10 {
            let w = random_direction(&mut r);
            assert_eq!(
                check_holomorphic_p(f, &w),
                check_holomorphic_p(f, &w.negated())
            );
        }
    }

    // the antiholomorphic pair lies in Hol_j and Hol_k and is type II
    let anti = parse_function("conj(z1) + conj(z2)*j").unwrap();
    assert!(check_holomorphic_p(&anti, &wj));
    assert!(check_holomorphic_p(&anti, &wk));
    let cl = classify(&anti, &ub());
    assert_eq!(cl.class, FunctionClass::TypeII);
    assert!(cl.structures.contains(&wj));
    assert!(cl.structures.contains(&wk));

    // conj(z1) alone is not psi-regular
    assert!(!check_psi(&parse_function("conj(z1)").unwrap()).holds);
    println!("PASS 05: membership regressions (identity, sign invariance, pair, conj(z1)) (exact)");
}

#[test]
fn criterion_06_invariant_equivalences_on_random_functions() {
    let mut r = rng(600);
    let quarter = rat(1, 4);
    let mut psi_count = 0usize;
    let mut total = 0usize;
    for sample_idx in 0..220 {
        // alternate between generic functions and constructed psi-regular ones
        let f = if sample_idx % 2 == 0 {
            random_function(&mut r, 3)
        } else {
            random_psi_regular(&mut r, 3)
        };
        total += 1;
        let psi = check_psi(&f).holds;
        if psi {
            psi_count += 1;
            assert!(
                qregular::check_harmonic(&f),
                "psi-regular function must be harmonic: {f}"
            );
        }

        let e = energy(&f, &ub());
        let k = invariant_k(&f, &ub());
        let i = invariant_i(&f, &ub());
        let em = matrix_a(&f, &ub());

        // (a) E + K = I/4 exactly, for every f
        assert_eq!(&e + &k, &i * &quarter, "E+K=I/4 failed on {f}");

        // (b) psi-regularity <=> E = tr A <=> I = 0
        assert_eq!(psi, &e == em.trace(), "E=trA equivalence failed on {f}");
        assert_eq!(psi, i.is_zero(), "I=0 equivalence failed on {f}");

        // (c) for psi-regular f the matrix is symmetric with det(A-trA·I) <= 0
        if psi {
            assert!(em.is_symmetric(), "asymmetric A for psi-regular {f}");
            assert!(
                !em.det_shifted().is_positive(),
                "det(A - trA I) > 0 for psi-regular {f}"
            );
        }

        // (d) X A Xᵀ = E - I_p/4 along random rational directions
        let dirs = if sample_idx < 40 { 20 } else { 3 };
        for _ in 0..dirs {
            let w = random_direction(&mut r);
            let lhs = em.quadratic_form(&w);
            let rhs = &e - &(&invariant_i_p(&f, &w, &ub()) * &quarter);
            assert_eq!(lhs, rhs, "XAXᵀ identity failed on {f} along {w}");
        }
    }
    assert!(total >= 200, "need at least 200 samples");
    assert!(psi_count >= 80, "need a healthy psi-regular population");
    assert!(
        total - psi_count >= 80,
        "need a healthy non-psi-regular population"
    );
    println!(
        "PASS 06: invariant equivalences on {total} random functions ({psi_count} psi-regular), all exact"
    );
}

#[test]
fn criterion_07_sextic_equivalence() {
    // the two vanishing anchors
    let id = LinearCoefficients::new(Quaternion::one(), Quaternion::zero(), Quaternion::zero());
    assert_eq!(sextic_value(&id), rat_int(0));
    assert_eq!(sextic_cross_check(&id).unwrap(), rat_int(0));
    let anti = LinearCoefficients::new(Quaternion::zero(), Quaternion::zero(), Quaternion::one());
    assert_eq!(sextic_value(&anti), rat_int(0));
    assert_eq!(sextic_cross_check(&anti).unwrap(), rat_int(0));

    let mut r = rng(700);
    let mut nonzero = 0usize;
    for _ in 0..100 {
        let coeffs = LinearCoefficients::new(
            random_quaternion(&mut r),
            random_quaternion(&mut r),
            random_quaternion(&mut r),
        );
        let v = sextic_cross_check(&coeffs)
            .expect("explicit expression must equal det(A - trA I)/16 exactly");
        if !v.is_zero() {
            nonzero += 1;
        }
        // the function itself is always psi-regular
        assert!(check_psi(&linear_function(&coeffs)).holds);
    }
    assert!(nonzero >= 90, "random members should be generically non-holomorphic");
    println!("PASS 07: sextic = det(A-trA·I)/16 on 100 random coefficient sets + 2 anchors (exact)");
}

#[test]
fn criterion_08_boundary_fixed_energy_minimization() {
    let mut r = rng(800);
    for _ in 0..20 {
        let f = random_psi_regular(&mut r, 2);
        let g = random_function(&mut r, 1);
        let u = perturb_fixed_boundary(&f, &g);
        assert_eq!(
            invariant_k(&u, &ub()),
            invariant_k(&f, &ub()),
            "K not preserved for f={f}, g={g}"
        );
        assert!(
            energy(&u, &ub()) >= energy(&f, &ub()),
            "energy decreased for f={f}, g={g}"
        );
    }
    println!("PASS 08: K invariant and E non-decreasing over 20 boundary-fixed perturbations (exact)");
}

#[test]
fn criterion_09_monte_carlo_oracle() {
    let start = std::time::Instant::now();
    let mut r = rng(900);
    for case in 0..50 {
        let expo: [u32; 4] = loop {
            let e: [u32; 4] = std::array::from_fn(|_| r.gen_range(0u32..=8));
            if e.iter().sum::<u32>() <= 8 {
                break e;
            }
        };
        let p = CPoly::monomial(expo, qregular::scalar::grat_int(1, 0));
        let exact = integrate_monomial(&expo, &ub());
        let est = monte_carlo_integral(&p, &ub(), 1_000_000, 9000 + case);
        assert!(
            est.agrees_with(&exact, 4.0),
            "monomial {expo:?}: exact {exact} vs estimate {est:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "oracle run took {elapsed:?}, budget is 30s"
    );
    println!(
        "PASS 09: 50 monomials within 4 standard errors at 1e6 samples in {:.1}s (< 30s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_10_classification_coverage() {
    // type I: constants
    let c = QFunction::constant(&Quaternion::from_ints(2, -1, 3, 5));
    let cl = classify(&c, &ub());
    assert_eq!(cl.class, FunctionClass::TypeI);
    assert_eq!(cl.structures, StructureSet::Sphere);

    // type II: identity and right multiples
    let mut r = rng(1000);
    assert_eq!(classify(&QFunction::identity(), &ub()).class, FunctionClass::TypeII);
    for _ in 0..5 {
        let q = random_nonzero_quaternion(&mut r);
        let f = QFunction::identity().right_mul(&q);
        assert_eq!(classify(&f, &ub()).class, FunctionClass::TypeII, "multiple by {q}");
    }

    // type III: h
    let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
    assert_eq!(classify(&h, &ub()).class, FunctionClass::TypeIII);

    // type IV: the linear example
    let f4 = parse_function("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j").unwrap();
    assert_eq!(classify(&f4, &ub()).class, FunctionClass::TypeIV);

    // constructed type II members (a1 z1 - ā2 z2) + (a2 z1 + ā1 z2) j report a
    // circle containing the first two coordinate directions
    let wi = ImaginaryDirection::from_ints(1, 0, 0).unwrap();
    let wj = ImaginaryDirection::from_ints(0, 1, 0).unwrap();
    for _ in 0..5 {
        let q = random_nonzero_quaternion(&mut r);
        let f = QFunction::identity().right_mul(&q);
        let cl = classify(&f, &ub());
        assert_eq!(cl.class, FunctionClass::TypeII);
        assert!(cl.structures.contains(&wi), "circle misses (1,0,0) for {f}");
        assert!(cl.structures.contains(&wj), "circle misses (0,1,0) for {f}");
        // the construction matches the affine normal form
        let (a1, a2) = q.complex_parts();
        let z1 = CPoly::var(qregular::Var::Z1);
        let z2 = CPoly::var(qregular::Var::Z2);
        let expected = QFunction::from_parts(
            &z1.scale(&a1) - &z2.scale(&a2.conj()),
            &z1.scale(&a2) + &z2.scale(&a1.conj()),
        );
        assert_eq!(f, expected);
    }
    println!("PASS 10: classification coverage for all four types and constructed circles (exact)");
}
