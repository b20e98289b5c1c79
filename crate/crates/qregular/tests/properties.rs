//! Property-based invariants of the algebra, the calculus, the parser, and
//! the integration layer.

use proptest::prelude::*;

use qregular::cpoly::{CPoly, Var};
use qregular::expr::parse_function;
use qregular::integrate::{integrate_poly, DomainSpec};
use qregular::quaternion::Quaternion;
use qregular::regularity::{check_fueter, check_psi, check_q_holomorphic, cr_residuals};
use qregular::scalar::{grat, rat, GRat};
use qregular::QFunction;

fn small_rat() -> impl Strategy<Value = qregular::Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_grat() -> impl Strategy<Value = GRat> {
    (small_rat(), small_rat()).prop_map(|(re, im)| grat(re, im))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn expo() -> impl Strategy<Value = [u32; 4]> {
    (0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2)
        .prop_map(|(a, b, c, d)| [a, b, c, d])
        .prop_filter("degree at most 3", |e| e.iter().sum::<u32>() <= 3)
}

fn cpoly() -> impl Strategy<Value = CPoly> {
    prop::collection::vec((expo(), small_grat()), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(CPoly::zero(), |acc, (e, c)| &acc + &CPoly::monomial(e, c))
    })
}

fn qfunction() -> impl Strategy<Value = QFunction> {
    (cpoly(), cpoly()).prop_map(|(f1, f2)| QFunction::from_parts(f1, f2))
}

fn var() -> impl Strategy<Value = Var> {
    prop::sample::select(vec![Var::Z1, Var::Z1Bar, Var::Z2, Var::Z2Bar])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quaternion_mul_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn quaternion_conj_reverses(a in quaternion(), b in quaternion()) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
    }

    #[test]
    fn wirtinger_is_linear(p in cpoly(), q in cpoly(), v in var()) {
        let sum = &p + &q;
        prop_assert_eq!(sum.wirtinger(v), &p.wirtinger(v) + &q.wirtinger(v));
    }

    #[test]
    fn wirtinger_leibniz(p in cpoly(), q in cpoly(), v in var()) {
        let product = &p * &q;
        let expected = &(&p.wirtinger(v) * &q) + &(&p * &q.wirtinger(v));
        prop_assert_eq!(product.wirtinger(v), expected);
    }

    #[test]
    fn conj_intertwines_wirtinger(p in cpoly()) {
        prop_assert_eq!(p.wirtinger(Var::Z1).conj(), p.conj().wirtinger(Var::Z1Bar));
        prop_assert_eq!(p.wirtinger(Var::Z2).conj(), p.conj().wirtinger(Var::Z2Bar));
    }

    #[test]
    fn laplacian_commutes_with_conj(p in cpoly()) {
        prop_assert_eq!(p.laplacian().conj(), p.conj().laplacian());
    }

    #[test]
    fn right_mul_is_module_action(f in qfunction(), a in quaternion(), b in quaternion()) {
        prop_assert_eq!(f.right_mul(&a).right_mul(&b), f.right_mul(&(&a * &b)));
    }

    #[test]
    fn products_evaluate_pointwise(f in qfunction(), g in qfunction(), q in quaternion()) {
        prop_assert_eq!(f.mul(&g).eval(&q), &f.eval(&q) * &g.eval(&q));
    }

    #[test]
    fn display_reparses_to_the_same_function(f in qfunction()) {
        let printed = f.to_string();
        let reparsed = parse_function(&printed)
            .map_err(|e| TestCaseError::fail(format!("printed {printed:?}: {e}")))?;
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn integration_is_linear(p in cpoly(), q in cpoly(), s in small_grat()) {
        let ball = DomainSpec::unit_ball();
        let combined = &p.scale(&s) + &q;
        let lhs = integrate_poly(&combined, &ball);
        let rhs = integrate_poly(&p, &ball) * s + integrate_poly(&q, &ball);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integration_commutes_with_conj(p in cpoly()) {
        let ball = DomainSpec::unit_ball();
        prop_assert_eq!(integrate_poly(&p.conj(), &ball), integrate_poly(&p, &ball).conj());
    }

    #[test]
    fn psi_equals_q_holomorphic(f in qfunction()) {
        prop_assert_eq!(check_psi(&f).holds, check_q_holomorphic(&f));
    }

    #[test]
    fn psi_equals_cr_pair(f in qfunction()) {
        let (r1, r2) = cr_residuals(&f);
        prop_assert_eq!(check_psi(&f).holds, r1.is_zero() && r2.is_zero());
    }

    #[test]
    fn reflection_exchanges_fueter_and_psi(f in qfunction()) {
        prop_assert_eq!(check_fueter(&f).holds, check_psi(&f.reflect_x3()).holds);
        prop_assert_eq!(f.reflect_x3().reflect_x3(), f);
    }

    #[test]
    fn conjugation_is_an_involution(f in qfunction()) {
        prop_assert_eq!(f.conjugate().conjugate(), f);
    }

    #[test]
    fn jacobian_frobenius_identity(f in qfunction()) {
        prop_assert_eq!(
            f.jacobian_real().frobenius_sq(),
            f.jacobian_complex().norm_density()
        );
    }
}
