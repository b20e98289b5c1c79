//! Linear psi-regular functions and the sextic holomorphicity invariant.
//!
//! The linear psi-regular functions form a rank-3 right module generated by
//! z1 + z2 j, z2 + z1 j and z̄1 + z̄2 j. For the member with coefficients
//! (q1, q2, q3), holomorphicity for some structure is equivalent to the
//! vanishing of a single real homogeneous degree-6 polynomial in the complex
//! coefficient splittings: (1/16)·det(A - (tr A)I3) evaluated on the unit
//! ball. [`sextic_value`] evaluates that polynomial from its explicit
//! 66-monomial expansion; [`sextic_cross_check`] recomputes the value through
//! the energy-matrix pipeline and demands exact agreement.

use num_traits::Zero;
use thiserror::Error;

use crate::cpoly::{CPoly, Var};
use crate::energy::matrix_a;
use crate::integrate::DomainSpec;
use crate::qfunction::QFunction;
use crate::quaternion::Quaternion;
use crate::scalar::{g_zero, rat, GRat, Rat};

/// Coefficients (q1, q2, q3) of a linear combination of the three generators,
/// with complex splittings q1 = a1 + a2 j, q2 = b1 + b2 j, q3 = c1 + c2 j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCoefficients {
    pub q1: Quaternion,
    pub q2: Quaternion,
    pub q3: Quaternion,
}

impl LinearCoefficients {
    pub fn new(q1: Quaternion, q2: Quaternion, q3: Quaternion) -> Self {
        LinearCoefficients { q1, q2, q3 }
    }

    /// The six complex splittings (a1, a2, b1, b2, c1, c2).
    pub fn splittings(&self) -> [GRat; 6] {
        let (a1, a2) = self.q1.complex_parts();
        let (b1, b2) = self.q2.complex_parts();
        let (c1, c2) = self.q3.complex_parts();
        [a1, a2, b1, b2, c1, c2]
    }
}

/// The generator z2 + z1 j.
pub fn swapped_generator() -> QFunction {
    QFunction::from_parts(CPoly::var(Var::Z2), CPoly::var(Var::Z1))
}

/// The generator z̄1 + z̄2 j.
pub fn antiholomorphic_generator() -> QFunction {
    QFunction::from_parts(CPoly::var(Var::Z1Bar), CPoly::var(Var::Z2Bar))
}

/// The linear member (z1 + z2 j)q1 + (z2 + z1 j)q2 + (z̄1 + z̄2 j)q3.
/// Always psi-regular, for every choice of coefficients.
pub fn linear_function(coeffs: &LinearCoefficients) -> QFunction {
    let t1 = QFunction::identity().right_mul(&coeffs.q1);
    let t2 = swapped_generator().right_mul(&coeffs.q2);
    let t3 = antiholomorphic_generator().right_mul(&coeffs.q3);
    &(&t1 + &t2) + &t3
}

/// One monomial of the sextic: integer coefficient and the exponents of
/// (a1, a2, b1, b2, c1, c2, ā1, ā2, b̄1, b̄2, c̄1, c̄2).
type SexticTerm = (i8, [u8; 12]);

#[rustfmt::skip]
const SEXTIC_TERMS: [SexticTerm; 66] = [
    ( 1, [1,1,0,1,2,0, 0,0,1,0,0,0]),
    (-1, [1,1,1,0,1,1, 0,0,1,0,0,0]),
    (-1, [2,0,0,1,1,1, 0,0,1,0,0,0]),
    ( 1, [2,0,1,0,0,2, 0,0,1,0,0,0]),
    (-1, [1,0,0,0,2,0, 1,0,2,0,0,0]),
    (-1, [1,0,0,0,1,1, 0,1,2,0,0,0]),
    ( 1, [0,2,0,1,2,0, 0,0,0,1,0,0]),
    (-1, [0,2,1,0,1,1, 0,0,0,1,0,0]),
    (-1, [1,1,0,1,1,1, 0,0,0,1,0,0]),
    ( 1, [1,1,1,0,0,2, 0,0,0,1,0,0]),
    (-1, [0,1,0,0,2,0, 1,0,1,1,0,0]),
    (-1, [1,0,0,0,1,1, 1,0,1,1,0,0]),
    (-1, [0,1,0,0,1,1, 0,1,1,1,0,0]),
    (-1, [1,0,0,0,0,2, 0,1,1,1,0,0]),
    (-1, [0,1,0,0,1,1, 1,0,0,2,0,0]),
    (-1, [0,1,0,0,0,2, 0,1,0,2,0,0]),
    ( 1, [1,1,1,1,1,0, 0,0,0,0,1,0]),
    (-1, [2,0,0,2,1,0, 0,0,0,0,1,0]),
    (-1, [1,1,2,0,0,1, 0,0,0,0,1,0]),
    ( 1, [2,0,1,1,0,1, 0,0,0,0,1,0]),
    (-2, [1,0,1,0,1,0, 1,0,1,0,1,0]),
    (-1, [1,0,0,1,1,0, 0,1,1,0,1,0]),
    (-1, [1,0,1,0,0,1, 0,1,1,0,1,0]),
    (-1, [0,1,1,0,1,0, 1,0,0,1,1,0]),
    (-2, [1,0,0,1,1,0, 1,0,0,1,1,0]),
    ( 1, [1,0,1,0,0,1, 1,0,0,1,1,0]),
    (-2, [0,1,0,1,1,0, 0,1,0,1,1,0]),
    ( 1, [0,1,1,0,0,1, 0,1,0,1,1,0]),
    (-1, [1,0,0,1,0,1, 0,1,0,1,1,0]),
    ( 1, [0,0,0,0,1,0, 1,1,1,1,1,0]),
    ( 1, [0,0,0,0,0,1, 0,2,1,1,1,0]),
    (-1, [0,0,0,0,1,0, 2,0,0,2,1,0]),
    (-1, [0,0,0,0,0,1, 1,1,0,2,1,0]),
    (-1, [1,0,2,0,0,0, 1,0,0,0,2,0]),
    (-1, [1,0,1,1,0,0, 0,1,0,0,2,0]),
    ( 1, [0,0,1,0,0,0, 1,1,0,1,2,0]),
    ( 1, [0,0,0,1,0,0, 0,2,0,1,2,0]),
    ( 1, [0,2,1,1,1,0, 0,0,0,0,0,1]),
    (-1, [1,1,0,2,1,0, 0,0,0,0,0,1]),
    (-1, [0,2,2,0,0,1, 0,0,0,0,0,1]),
    ( 1, [1,1,1,1,0,1, 0,0,0,0,0,1]),
    (-1, [0,1,1,0,1,0, 1,0,1,0,0,1]),
    ( 1, [1,0,0,1,1,0, 1,0,1,0,0,1]),
    (-2, [1,0,1,0,0,1, 1,0,1,0,0,1]),
    ( 1, [0,1,0,1,1,0, 0,1,1,0,0,1]),
    (-2, [0,1,1,0,0,1, 0,1,1,0,0,1]),
    (-1, [1,0,0,1,0,1, 0,1,1,0,0,1]),
    (-1, [0,0,0,0,1,0, 1,1,2,0,0,1]),
    (-1, [0,0,0,0,0,1, 0,2,2,0,0,1]),
    (-1, [0,1,0,1,1,0, 1,0,0,1,0,1]),
    (-1, [0,1,1,0,0,1, 1,0,0,1,0,1]),
    (-2, [0,1,0,1,0,1, 0,1,0,1,0,1]),
    ( 1, [0,0,0,0,1,0, 2,0,1,1,0,1]),
    ( 1, [0,0,0,0,0,1, 1,1,1,1,0,1]),
    (-1, [0,1,2,0,0,0, 1,0,0,0,1,1]),
    (-1, [1,0,1,1,0,0, 1,0,0,0,1,1]),
    (-1, [0,1,1,1,0,0, 0,1,0,0,1,1]),
    (-1, [1,0,0,2,0,0, 0,1,0,0,1,1]),
    (-1, [0,0,1,0,0,0, 1,1,1,0,1,1]),
    (-1, [0,0,0,1,0,0, 0,2,1,0,1,1]),
    (-1, [0,0,1,0,0,0, 2,0,0,1,1,1]),
    (-1, [0,0,0,1,0,0, 1,1,0,1,1,1]),
    (-1, [0,1,1,1,0,0, 1,0,0,0,0,2]),
    (-1, [0,1,0,2,0,0, 0,1,0,0,0,2]),
    ( 1, [0,0,1,0,0,0, 2,0,1,0,0,2]),
    ( 1, [0,0,0,1,0,0, 1,1,1,0,0,2]),
];

/// Evaluates the explicit degree-6 homogeneous expression in the coefficient
/// splittings. Real-valued for every input; panics if an imaginary part
/// survives, which would mean the term table is corrupted.
pub fn sextic_value(coeffs: &LinearCoefficients) -> Rat {
    let s = coeffs.splittings();
    let vals: [GRat; 12] = std::array::from_fn(|k| {
        if k < 6 {
            s[k].clone()
        } else {
            s[k - 6].conj()
        }
    });
    let mut acc = g_zero();
    for (coeff, expos) in SEXTIC_TERMS.iter() {
        let mut term = GRat::new(rat(*coeff as i64, 1), Rat::zero());
        for (slot, &e) in expos.iter().enumerate() {
            for _ in 0..e {
                term *= &vals[slot];
            }
        }
        acc += term;
    }
    assert!(acc.im.is_zero(), "sextic expression must be real-valued");
    acc.re
}

#[derive(Debug, Error)]
#[error("sextic mismatch: expression gives {expression}, pipeline gives {pipeline}")]
pub struct SexticMismatch {
    pub expression: String,
    pub pipeline: String,
}

/// Checks the explicit expression against (1/16)·det(A - (tr A)I3) computed
/// through the energy-matrix pipeline on the unit ball. Returns the common
/// value, or both values on a mismatch.
pub fn sextic_cross_check(coeffs: &LinearCoefficients) -> Result<Rat, SexticMismatch> {
    let direct = sextic_value(coeffs);
    let f = linear_function(coeffs);
    let em = matrix_a(&f, &DomainSpec::unit_ball());
    let via_pipeline = em.det_shifted() * rat(1, 16);
    if direct == via_pipeline {
        Ok(direct)
    } else {
        Err(SexticMismatch {
            expression: crate::scalar::rat_to_string(&direct),
            pipeline: crate::scalar::rat_to_string(&via_pipeline),
        })
    }
}
