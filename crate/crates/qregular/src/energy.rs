//! Dirichlet energy, the 3x3 energy matrix A, the associated invariants, and
//! the classification of psi-regular functions by their sets of compatible
//! complex structures.
//!
//! All quantities are volume-normalized integrals over the chosen domain and
//! are computed exactly. The entries of A are evaluated two independent ways:
//! the complex-coordinate route used here and a real-coordinate pairing
//! ([`matrix_a_real_coords`]) kept as a cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cpoly::{CPoly, Var};
use crate::integrate::{integrate_real_poly, DomainSpec};
use crate::qfunction::{PolyMat4, QFunction};
use crate::quaternion::{ImaginaryDirection, Quaternion};
use crate::regularity::{check_holomorphic_p, check_psi};
use crate::scalar::{rat, rat_to_string, Rat};
use crate::structures::{left_mult_matrix, structure_j, structure_jp, structure_m, value_structure};

/// tr(A·B) without forming the product matrix.
fn trace_product(a: &PolyMat4, b: &PolyMat4) -> CPoly {
    let mut acc = CPoly::zero();
    for r in 0..4 {
        for m in 0..4 {
            if a.e[r][m].is_zero() || b.e[m][r].is_zero() {
                continue;
            }
            acc = &acc + &(&a.e[r][m] * &b.e[m][r]);
        }
    }
    acc
}

/// Dirichlet energy (1/2)∫ tr(J_C conj(J_C)^T) dV under the normalized measure.
/// Nonnegative, zero exactly for constants.
pub fn energy(f: &QFunction, domain: &DomainSpec) -> Rat {
    let density = f.jacobian_complex().norm_density();
    integrate_real_poly(&density, domain) * rat(1, 2)
}

/// The energy matrix A together with the derived spectral data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyMatrix {
    a: [[Rat; 3]; 3],
    energy: Rat,
    trace: Rat,
    char_shifted: [Rat; 4],
}

impl EnergyMatrix {
    fn new(a: [[Rat; 3]; 3], energy: Rat) -> Self {
        let trace = &a[0][0] + &a[1][1] + &a[2][2];
        let char_shifted = shifted_char_poly(&a, &trace);
        EnergyMatrix {
            a,
            energy,
            trace,
            char_shifted,
        }
    }

    pub fn entries(&self) -> &[[Rat; 3]; 3] {
        &self.a
    }

    pub fn entry(&self, alpha: usize, beta: usize) -> &Rat {
        &self.a[alpha - 1][beta - 1]
    }

    pub fn energy(&self) -> &Rat {
        &self.energy
    }

    pub fn trace(&self) -> &Rat {
        &self.trace
    }

    pub fn is_symmetric(&self) -> bool {
        self.a[0][1] == self.a[1][0] && self.a[0][2] == self.a[2][0] && self.a[1][2] == self.a[2][1]
    }

    /// det(A - (tr A)·I3).
    pub fn det_shifted(&self) -> &Rat {
        &self.char_shifted[0]
    }

    /// Coefficients (c0, c1, c2, c3) of det(A - (tr A)·I3 - t·I3) in t.
    pub fn char_poly_shifted(&self) -> &[Rat; 4] {
        &self.char_shifted
    }

    /// The quadratic form X A X^T for an unnormalized direction, divided by |w|².
    pub fn quadratic_form(&self, w: &ImaginaryDirection) -> Rat {
        let c = w.components();
        let mut acc = Rat::zero();
        for r in 0..3 {
            for s in 0..3 {
                acc += &c[r] * &self.a[r][s] * &c[s];
            }
        }
        acc / w.norm_sq()
    }
}

impl fmt::Display for EnergyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.a {
            writeln!(
                f,
                "[{}]",
                row.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

fn shifted_char_poly(a: &[[Rat; 3]; 3], trace: &Rat) -> [Rat; 4] {
    // B = A - (tr A) I; det(B - tI) = -t³ + tr(B) t² - m2(B) t + det(B).
    let mut b: [[Rat; 3]; 3] = a.clone();
    for d in 0..3 {
        b[d][d] = &b[d][d] - trace;
    }
    let tr_b = &b[0][0] + &b[1][1] + &b[2][2];
    let minor = |r1: usize, r2: usize| -> Rat {
        &b[r1][r1] * &b[r2][r2] - &b[r1][r2] * &b[r2][r1]
    };
    let m2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = &b[0][0] * (&b[1][1] * &b[2][2] - &b[1][2] * &b[2][1])
        - &b[0][1] * (&b[1][0] * &b[2][2] - &b[1][2] * &b[2][0])
        + &b[0][2] * (&b[1][0] * &b[2][1] - &b[1][1] * &b[2][0]);
    [det, -m2, tr_b, -Rat::one()]
}

/// The energy matrix computed in complex coordinates:
/// a_ab = -(1/2) ∫ tr(J_C^T · conj(L_b · J_C · M_a^T)) dV,
/// with M_a the covector structures and L_b the value-side structures.
/// Symmetry is asserted (not assumed) when f is psi-regular.
pub fn matrix_a(f: &QFunction, domain: &DomainSpec) -> EnergyMatrix {
    let jc = f.jacobian_complex().0;
    let jct = jc.transpose();
    let mut a: [[Rat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    for alpha in 1..=3 {
        let m_t = structure_m(alpha).transpose();
        for beta in 1..=3 {
            let l = value_structure(beta);
            let inner = jc.lmul_complex(&l).rmul_complex(&m_t).conj();
            let integrand = trace_product(&jct, &inner);
            debug_assert!(integrand.is_real(), "pairing density must be real-valued");
            let value = integrate_real_poly(&integrand, domain) * rat(-1, 2);
            a[alpha - 1][beta - 1] = value;
        }
    }
    let em = EnergyMatrix::new(a, energy(f, domain));
    if check_psi(f).holds {
        assert!(
            em.is_symmetric(),
            "energy matrix of a psi-regular function must be symmetric"
        );
    }
    em
}

/// The same matrix from the real-coordinate pairing
/// a_ab = -(1/2) ∫ tr(D^T · L_b · D · J_a) dV with D the real Jacobian.
/// Kept as an independent oracle for [`matrix_a`].
pub fn matrix_a_real_coords(f: &QFunction, domain: &DomainSpec) -> EnergyMatrix {
    let d = f.jacobian_real().0;
    let dt = d.transpose();
    let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut a: [[Rat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    for alpha in 1..=3 {
        let j = structure_j(alpha);
        for beta in 1..=3 {
            let l = left_mult_matrix(&units[beta - 1]);
            let inner = d.lmul_real(&l).rmul_real(&j);
            let integrand = trace_product(&dt, &inner);
            a[alpha - 1][beta - 1] = integrate_real_poly(&integrand, domain) * rat(-1, 2);
        }
    }
    EnergyMatrix::new(a, energy(f, domain))
}

/// K(f) = ∫ sum_a <J_a, f*L_a> dV, a homotopy invariant rel boundary;
/// equals -tr(matrix_a(f)).
pub fn invariant_k(f: &QFunction, domain: &DomainSpec) -> Rat {
    let d = f.jacobian_real().0;
    let dt = d.transpose();
    let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut acc = CPoly::zero();
    for alpha in 1..=3 {
        let l = left_mult_matrix(&units[alpha - 1]);
        let j = structure_j(alpha);
        acc = &acc + &trace_product(&dt, &d.lmul_real(&l).rmul_real(&j));
    }
    integrate_real_poly(&acc, domain) * rat(1, 2)
}

/// I(f) = (1/2) ∫ ||df + sum_a L_a ∘ df ∘ J_a||² dV; nonnegative and zero
/// exactly on psi-regular functions. Satisfies E + K = I/4.
pub fn invariant_i(f: &QFunction, domain: &DomainSpec) -> Rat {
    let op = crate::regularity::q_holomorphic_residual(f);
    integrate_real_poly(&op.frobenius_sq_real(), domain) * rat(1, 2)
}

/// I_p(f) for p = w/|w|, evaluated through the cleared residual
/// |w|²·df + L_w ∘ df ∘ J_w so the direction never needs normalizing:
/// I_p = ∫ ||residual||² dV / |w|⁴. Normalized so that X A X^T = E - I_p/4
/// holds exactly; zero exactly on Hol_p members.
pub fn invariant_i_p(f: &QFunction, w: &ImaginaryDirection, domain: &DomainSpec) -> Rat {
    let d = f.jacobian_real().0;
    let lw = left_mult_matrix(&w.as_quaternion());
    let jw = structure_jp(w);
    let res = d.scale_rat(&w.norm_sq()).add(&d.lmul_real(&lw).rmul_real(&jw));
    let n2 = w.norm_sq();
    integrate_real_poly(&res.frobenius_sq_real(), domain) / (&n2 * &n2)
}

/// The four classes of psi-regular functions, by the dimension of the set of
/// compatible complex structures, plus the outcome for inputs that are not
/// psi-regular at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionClass {
    /// Holomorphic for every structure; constant, J(f) is the whole sphere.
    TypeI,
    /// Holomorphic for a circle of structures; invertible affine map.
    TypeII,
    /// Holomorphic for exactly one antipodal pair of structures.
    TypeIII,
    /// psi-regular but holomorphic for no structure.
    TypeIV,
    /// Not psi-regular; no structure is compatible.
    NotPsiRegular,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FunctionClass::TypeI => "I",
            FunctionClass::TypeII => "II",
            FunctionClass::TypeIII => "III",
            FunctionClass::TypeIV => "IV",
            FunctionClass::NotPsiRegular => "not-psi-regular",
        };
        write!(f, "{s}")
    }
}

/// Description of J(f), the set of unit imaginary directions p with
/// f in Hol_p. Directions are reported as primitive integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureSet {
    /// No compatible structure.
    Empty,
    /// Exactly the antipodal pair ±w/|w|.
    Pair { direction: [BigInt; 3] },
    /// The great circle of directions orthogonal to `normal`, spanned by the
    /// two basis directions.
    Circle {
        basis: [[BigInt; 3]; 2],
        normal: [BigInt; 3],
    },
    /// Every unit imaginary direction.
    Sphere,
}

impl StructureSet {
    /// True when the (unnormalized) direction w belongs to the set.
    pub fn contains(&self, w: &ImaginaryDirection) -> bool {
        let c = w.components();
        match self {
            StructureSet::Empty => false,
            StructureSet::Sphere => true,
            StructureSet::Pair { direction } => {
                // proportionality: w x direction = 0
                let d: [Rat; 3] =
                    std::array::from_fn(|k| Rat::new(direction[k].clone(), BigInt::one()));
                (&c[1] * &d[2] - &c[2] * &d[1]).is_zero()
                    && (&c[2] * &d[0] - &c[0] * &d[2]).is_zero()
                    && (&c[0] * &d[1] - &c[1] * &d[0]).is_zero()
            }
            StructureSet::Circle { normal, .. } => {
                let n: [Rat; 3] =
                    std::array::from_fn(|k| Rat::new(normal[k].clone(), BigInt::one()));
                (&c[0] * &n[0] + &c[1] * &n[1] + &c[2] * &n[2]).is_zero()
            }
        }
    }
}

impl fmt::Display for StructureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &[BigInt; 3]| format!("({},{},{})", v[0], v[1], v[2]);
        match self {
            StructureSet::Empty => write!(f, "empty"),
            StructureSet::Sphere => write!(f, "the whole sphere"),
            StructureSet::Pair { direction } => {
                write!(f, "the antipodal pair ±{}", fmt_vec(direction))
            }
            StructureSet::Circle { basis, normal } => write!(
                f,
                "the circle normal to {} through {} and {}",
                fmt_vec(normal),
                fmt_vec(&basis[0]),
                fmt_vec(&basis[1])
            ),
        }
    }
}

/// Result of the holomorphicity criterion for one function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: FunctionClass,
    pub structures: StructureSet,
    pub energy_matrix: EnergyMatrix,
}

/// Applies the criterion: f is psi-regular iff E = tr A; among psi-regular
/// functions, compatible structures exist iff det(A - (tr A)I3) = 0, and the
/// eigenspace of the top eigenvalue tr A determines J(f). Every reported
/// direction is re-verified symbolically against the Hol_p equation.
pub fn classify(f: &QFunction, domain: &DomainSpec) -> Classification {
    let em = matrix_a(f, domain);
    if !check_psi(f).holds {
        return Classification {
            class: FunctionClass::NotPsiRegular,
            structures: StructureSet::Empty,
            energy_matrix: em,
        };
    }
    assert_eq!(
        em.energy(),
        em.trace(),
        "psi-regular function must have energy equal to tr A"
    );
    if !em.det_shifted().is_zero() {
        return Classification {
            class: FunctionClass::TypeIV,
            structures: StructureSet::Empty,
            energy_matrix: em,
        };
    }

    let mut b: [[Rat; 3]; 3] = em.entries().clone();
    for d in 0..3 {
        b[d][d] = &b[d][d] - em.trace();
    }
    let kernel = kernel_basis_3(&b);
    let verify = |v: &[BigInt; 3]| {
        let w = ImaginaryDirection::new(
            Rat::new(v[0].clone(), BigInt::one()),
            Rat::new(v[1].clone(), BigInt::one()),
            Rat::new(v[2].clone(), BigInt::one()),
        )
        .expect("kernel vector is nonzero");
        assert!(
            check_holomorphic_p(f, &w),
            "direction {w} from the eigenspace failed the Hol_p re-verification"
        );
    };

    match kernel.len() {
        1 => {
            let direction = primitive_integer(&kernel[0]);
            verify(&direction);
            Classification {
                class: FunctionClass::TypeIII,
                structures: StructureSet::Pair { direction },
                energy_matrix: em,
            }
        }
        2 => {
            let b0 = primitive_integer(&kernel[0]);
            let b1 = primitive_integer(&kernel[1]);
            verify(&b0);
            verify(&b1);
            let normal = primitive_integer(&cross(&kernel[0], &kernel[1]));
            Classification {
                class: FunctionClass::TypeII,
                structures: StructureSet::Circle {
                    basis: [b0, b1],
                    normal,
                },
                energy_matrix: em,
            }
        }
        3 => {
            for v in [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]] {
                verify(&[BigInt::from(v[0]), BigInt::from(v[1]), BigInt::from(v[2])]);
            }
            Classification {
                class: FunctionClass::TypeI,
                structures: StructureSet::Sphere,
                energy_matrix: em,
            }
        }
        n => unreachable!("det(A - trA I) = 0 forces a nontrivial kernel, got dimension {n}"),
    }
}

/// u = f + (1 - |z1|² - |z2|²)·g, which agrees with f on the boundary of the
/// unit ball.
pub fn perturb_fixed_boundary(f: &QFunction, g: &QFunction) -> QFunction {
    let mod1 = &CPoly::var(Var::Z1) * &CPoly::var(Var::Z1Bar);
    let mod2 = &CPoly::var(Var::Z2) * &CPoly::var(Var::Z2Bar);
    let bump = &(&CPoly::one() - &mod1) - &mod2;
    f + &g.scale_real_poly(&bump)
}

/// Basis of the rational kernel of a 3x3 matrix, by Gaussian elimination.
fn kernel_basis_3(m: &[[Rat; 3]; 3]) -> Vec<[Rat; 3]> {
    let mut a: Vec<[Rat; 3]> = m.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..3 {
        // find pivot
        let Some(p) = (row..3).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for c in 0..3 {
            a[row][c] = &a[row][c] / &inv;
        }
        for r in 0..3 {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..3 {
                    a[r][c] = &a[r][c] - &(&factor * &a[row][c]);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == 3 {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..3 {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
        v[free] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn cross(u: &[Rat; 3], v: &[Rat; 3]) -> [Rat; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Scales a rational vector to a primitive integer vector with a positive
/// leading nonzero entry.
fn primitive_integer(v: &[Rat; 3]) -> [BigInt; 3] {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: [BigInt; 3] =
        std::array::from_fn(|k| (&v[k] * Rat::new(lcm.clone(), BigInt::one())).to_integer());
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if !gcd.is_zero() && !gcd.is_one() {
        for n in ints.iter_mut() {
            *n = &*n / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in ints.iter_mut() {
                *n = -n.clone();
            }
        }
    }
    ints
}
