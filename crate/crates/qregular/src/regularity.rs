//! Symbolic checkers for the first-order operators: the Cauchy-Riemann-Fueter
//! operator D, its variant D' (psi-regularity), q-holomorphicity, membership
//! in Hol_p, and harmonicity. Everything is decided exactly on polynomials.

use crate::cpoly::{CPoly, Var};
use crate::qfunction::{dirac_type_operator, PolyMat4, QFunction};
use crate::quaternion::{ImaginaryDirection, Quaternion};
use crate::structures::{left_mult_matrix, structure_j, structure_jp, RealMatrix4};

/// Outcome of a single operator check: the verdict and the operator output,
/// which is the zero function exactly when the check holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub holds: bool,
    pub residual: QFunction,
}

impl CheckResult {
    fn from_residual(residual: QFunction) -> Self {
        CheckResult {
            holds: residual.is_zero(),
            residual,
        }
    }
}

/// Combined regularity verdicts for a function; the residual is the D' output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub fueter_regular: bool,
    pub psi_regular: bool,
    pub residual: QFunction,
}

/// D f = df/dx0 + i df/dx1 + j df/dx2 + k df/dx3.
pub fn fueter_residual(f: &QFunction) -> QFunction {
    let id = RealMatrix4::identity();
    let li = left_mult_matrix(&Quaternion::i());
    let lj = left_mult_matrix(&Quaternion::j());
    let lk = left_mult_matrix(&Quaternion::k());
    dirac_type_operator(f, [&id, &li, &lj, &lk])
}

/// D' f = df/dx0 + i df/dx1 + j df/dx2 - k df/dx3.
pub fn dprime_residual(f: &QFunction) -> QFunction {
    let id = RealMatrix4::identity();
    let li = left_mult_matrix(&Quaternion::i());
    let lj = left_mult_matrix(&Quaternion::j());
    let mk = -&left_mult_matrix(&Quaternion::k());
    dirac_type_operator(f, [&id, &li, &lj, &mk])
}

/// The two Cauchy-Riemann-type residuals of psi-regularity:
/// df1/dz̄1 - d(conj f2)/dz2 and df1/dz̄2 + d(conj f2)/dz1.
pub fn cr_residuals(f: &QFunction) -> (CPoly, CPoly) {
    let f2_bar = f.f2().conj();
    (
        &f.f1().wirtinger(Var::Z1Bar) - &f2_bar.wirtinger(Var::Z2),
        &f.f1().wirtinger(Var::Z2Bar) + &f2_bar.wirtinger(Var::Z1),
    )
}

/// psi-regularity: D' f = 0, equivalently the CR-type pair of equations.
pub fn check_psi(f: &QFunction) -> CheckResult {
    let residual = dprime_residual(f);
    // The CR form is an independent route; the two must always agree.
    debug_assert_eq!(
        residual.is_zero(),
        {
            let (r1, r2) = cr_residuals(f);
            r1.is_zero() && r2.is_zero()
        },
        "D' and CR disagree on {f}"
    );
    CheckResult::from_residual(residual)
}

/// Fueter regularity, checked as psi-regularity of the pullback under the
/// reflection x3 -> -x3. The returned residual is the direct D output.
pub fn check_fueter(f: &QFunction) -> CheckResult {
    let via_reflection = check_psi(&f.reflect_x3()).holds;
    let residual = fueter_residual(f);
    debug_assert_eq!(via_reflection, residual.is_zero(), "D vs reflected D' on {f}");
    CheckResult {
        holds: via_reflection,
        residual,
    }
}

/// Both regularity verdicts at once; the residual reported is the D' output.
pub fn check_regularity(f: &QFunction) -> RegularityVerdict {
    let psi = check_psi(f);
    RegularityVerdict {
        fueter_regular: check_fueter(f).holds,
        psi_regular: psi.holds,
        residual: psi.residual,
    }
}

/// Matrix of the operator df + sum_alpha L_alpha ∘ df ∘ J_alpha, whose
/// vanishing is q-holomorphicity (and equals psi-regularity).
pub fn q_holomorphic_residual(f: &QFunction) -> PolyMat4 {
    let d = f.jacobian_real().0;
    let mut acc = d.clone();
    let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    for (alpha, unit) in units.iter().enumerate() {
        let l = left_mult_matrix(unit);
        let j = structure_j(alpha + 1);
        acc = acc.add(&d.lmul_real(&l).rmul_real(&j));
    }
    acc
}

/// q-holomorphicity: df + i J1*(df) + j J2*(df) + k J3*(df) = 0.
pub fn check_q_holomorphic(f: &QFunction) -> bool {
    q_holomorphic_residual(f).is_zero()
}

/// Matrix of the cleared Hol_p equation |w|²·df + L_w ∘ df ∘ J_w, where the
/// direction is carried unnormalized so no square roots appear.
pub fn holomorphic_p_residual(f: &QFunction, w: &ImaginaryDirection) -> PolyMat4 {
    let d = f.jacobian_real().0;
    let lw = left_mult_matrix(&w.as_quaternion());
    let jw = structure_jp(w);
    d.scale_rat(&w.norm_sq()).add(&d.lmul_real(&lw).rmul_real(&jw))
}

/// Membership in Hol_p for p = w/|w|: df + p J_p*(df) = 0.
pub fn check_holomorphic_p(f: &QFunction, w: &ImaginaryDirection) -> bool {
    holomorphic_p_residual(f, w).is_zero()
}

/// Harmonicity: the Laplacian annihilates both complex components.
pub fn check_harmonic(f: &QFunction) -> bool {
    f.f1().laplacian().is_zero() && f.f2().laplacian().is_zero()
}
