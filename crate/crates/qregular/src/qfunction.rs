//! Quaternionic polynomial functions f = f1 + f2·j and their Jacobians.
//!
//! The decomposition stores the complex component to the left of j, so the
//! normal form of a product applies j·P = conj(P)·j at construction time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::cpoly::{CPoly, Var};
use crate::quaternion::Quaternion;
use crate::scalar::Rat;
use crate::structures::{ComplexMatrix4, RealMatrix4};

/// Column/row order of the complex covector basis: z̄1, z1, z̄2, z2.
pub const BASIS_VARS: [Var; 4] = [Var::Z1Bar, Var::Z1, Var::Z2Bar, Var::Z2];

/// A quaternionic function f = f1 + f2·j with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QFunction {
    f1: CPoly,
    f2: CPoly,
}

impl QFunction {
    pub fn zero() -> Self {
        QFunction::default()
    }

    pub fn from_parts(f1: CPoly, f2: CPoly) -> Self {
        QFunction { f1, f2 }
    }

    pub fn constant(q: &Quaternion) -> Self {
        let (z1, z2) = q.complex_parts();
        QFunction {
            f1: CPoly::constant(z1),
            f2: CPoly::constant(z2),
        }
    }

    /// The identity map q = z1 + z2·j.
    pub fn identity() -> Self {
        QFunction {
            f1: CPoly::var(Var::Z1),
            f2: CPoly::var(Var::Z2),
        }
    }

    pub fn f1(&self) -> &CPoly {
        &self.f1
    }

    pub fn f2(&self) -> &CPoly {
        &self.f2
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    pub fn total_degree(&self) -> u32 {
        self.f1.total_degree().max(self.f2.total_degree())
    }

    /// Pointwise quaternionic product:
    /// (f1 + f2 j)(g1 + g2 j) = (f1 g1 - f2 conj(g2)) + (f1 g2 + f2 conj(g1)) j.
    pub fn mul(&self, rhs: &QFunction) -> QFunction {
        QFunction {
            f1: &(&self.f1 * &rhs.f1) - &(&self.f2 * &rhs.f2.conj()),
            f2: &(&self.f1 * &rhs.f2) + &(&self.f2 * &rhs.f1.conj()),
        }
    }

    /// Right multiplication by a constant quaternion; preserves psi-regularity.
    pub fn right_mul(&self, q: &Quaternion) -> QFunction {
        self.mul(&QFunction::constant(q))
    }

    /// Multiplies both components by a real-valued (self-conjugate) polynomial.
    pub fn scale_real_poly(&self, s: &CPoly) -> QFunction {
        debug_assert!(s.is_real());
        QFunction {
            f1: &self.f1 * s,
            f2: &self.f2 * s,
        }
    }

    /// Pointwise quaternionic conjugation: conj(f1 + f2 j) = conj(f1) - f2 j.
    pub fn conjugate(&self) -> QFunction {
        QFunction {
            f1: self.f1.conj(),
            f2: -&self.f2,
        }
    }

    /// Pullback under the coordinate reflection x3 -> -x3 (z2 <-> z̄2).
    pub fn reflect_x3(&self) -> QFunction {
        QFunction {
            f1: self.f1.swap_z2_bar(),
            f2: self.f2.swap_z2_bar(),
        }
    }

    /// Real components (c0, c1, c2, c3) with f = c0 + i c1 + j c2 + k c3.
    pub fn components(&self) -> [CPoly; 4] {
        [
            self.f1.real_part(),
            self.f1.imag_part(),
            self.f2.real_part(),
            self.f2.imag_part(),
        ]
    }

    pub fn from_components(c: &[CPoly; 4]) -> QFunction {
        let i = CPoly::constant(crate::scalar::g_i());
        QFunction {
            f1: &c[0] + &(&i * &c[1]),
            f2: &c[2] + &(&i * &c[3]),
        }
    }

    /// Evaluates at a quaternion point through the identification q = z1 + z2 j.
    pub fn eval(&self, q: &Quaternion) -> Quaternion {
        let (z1, z2) = q.complex_parts();
        Quaternion::from_complex_pair(self.f1.eval(&z1, &z2), self.f2.eval(&z1, &z2))
    }

    /// Jacobian with respect to z̄1, z1, z̄2, z2, rows ordered f̄1, f1, f̄2, f2.
    pub fn jacobian_complex(&self) -> JacobianC {
        let rows = [
            self.f1.conj(),
            self.f1.clone(),
            self.f2.conj(),
            self.f2.clone(),
        ];
        let mut m = PolyMat4::zero();
        for (r, poly) in rows.iter().enumerate() {
            for (c, v) in BASIS_VARS.iter().enumerate() {
                m.e[r][c] = poly.wirtinger(*v);
            }
        }
        JacobianC(m)
    }

    /// Jacobian of the real components with respect to x0..x3.
    pub fn jacobian_real(&self) -> JacobianR {
        let comps = self.components();
        let mut m = PolyMat4::zero();
        for (a, poly) in comps.iter().enumerate() {
            for b in 0..4 {
                m.e[a][b] = poly.x_derivative(b);
            }
        }
        JacobianR(m)
    }
}

impl Add for &QFunction {
    type Output = QFunction;
    fn add(self, rhs: &QFunction) -> QFunction {
        QFunction {
            f1: &self.f1 + &rhs.f1,
            f2: &self.f2 + &rhs.f2,
        }
    }
}

impl Sub for &QFunction {
    type Output = QFunction;
    fn sub(self, rhs: &QFunction) -> QFunction {
        QFunction {
            f1: &self.f1 - &rhs.f1,
            f2: &self.f2 - &rhs.f2,
        }
    }
}

impl Neg for &QFunction {
    type Output = QFunction;
    fn neg(self) -> QFunction {
        QFunction {
            f1: -&self.f1,
            f2: -&self.f2,
        }
    }
}

impl Mul for &QFunction {
    type Output = QFunction;
    fn mul(self, rhs: &QFunction) -> QFunction {
        QFunction::mul(self, rhs)
    }
}

impl fmt::Display for QFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.f1.is_zero(), self.f2.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.f1),
            (true, false) => write!(f, "({})*j", self.f2),
            (false, false) => write!(f, "{} + ({})*j", self.f1, self.f2),
        }
    }
}

/// A 4x4 matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat4 {
    pub e: [[CPoly; 4]; 4],
}

impl PolyMat4 {
    pub fn zero() -> Self {
        PolyMat4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| CPoly::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = PolyMat4::zero();
        for d in 0..4 {
            m.e[d][d] = CPoly::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut m = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[c][r].clone();
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for p in row.iter_mut() {
                *p = p.conj();
            }
        }
        m
    }

    pub fn add(&self, rhs: &PolyMat4) -> Self {
        let mut m = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = &self.e[r][c] + &rhs.e[r][c];
            }
        }
        m
    }

    pub fn scale_rat(&self, s: &Rat) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for p in row.iter_mut() {
                *p = p.scale_rat(s);
            }
        }
        m
    }

    pub fn matmul(&self, rhs: &PolyMat4) -> Self {
        let mut m = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = CPoly::zero();
                for t in 0..4 {
                    acc = &acc + &(&self.e[r][t] * &rhs.e[t][c]);
                }
                m.e[r][c] = acc;
            }
        }
        m
    }

    /// Left multiplication by a constant rational matrix.
    pub fn lmul_real(&self, m: &RealMatrix4) -> Self {
        let mut out = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = CPoly::zero();
                for t in 0..4 {
                    if m.e[r][t].is_zero() {
                        continue;
                    }
                    acc = &acc + &self.e[t][c].scale_rat(&m.e[r][t]);
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    /// Right multiplication by a constant rational matrix.
    pub fn rmul_real(&self, m: &RealMatrix4) -> Self {
        let mut out = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = CPoly::zero();
                for t in 0..4 {
                    if m.e[t][c].is_zero() {
                        continue;
                    }
                    acc = &acc + &self.e[r][t].scale_rat(&m.e[t][c]);
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    /// Left multiplication by a constant Gaussian-rational matrix.
    pub fn lmul_complex(&self, m: &ComplexMatrix4) -> Self {
        let mut out = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = CPoly::zero();
                for t in 0..4 {
                    if m.e[r][t].is_zero() {
                        continue;
                    }
                    acc = &acc + &self.e[t][c].scale(&m.e[r][t]);
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    /// Right multiplication by a constant Gaussian-rational matrix.
    pub fn rmul_complex(&self, m: &ComplexMatrix4) -> Self {
        let mut out = PolyMat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = CPoly::zero();
                for t in 0..4 {
                    if m.e[t][c].is_zero() {
                        continue;
                    }
                    acc = &acc + &self.e[r][t].scale(&m.e[t][c]);
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    pub fn trace(&self) -> CPoly {
        let mut acc = CPoly::zero();
        for d in 0..4 {
            acc = &acc + &self.e[d][d];
        }
        acc
    }

    /// Sum of squares of the entries (the Frobenius pairing of a real matrix
    /// with itself).
    pub fn frobenius_sq_real(&self) -> CPoly {
        let mut acc = CPoly::zero();
        for row in &self.e {
            for p in row {
                acc = &acc + &(p * p);
            }
        }
        acc
    }

    /// Entrywise Hermitian pairing tr(conj(X)^T Y) = sum conj(x_rc)·y_rc.
    pub fn hermitian_pairing(&self, rhs: &PolyMat4) -> CPoly {
        let mut acc = CPoly::zero();
        for r in 0..4 {
            for c in 0..4 {
                acc = &acc + &(&self.e[r][c].conj() * &rhs.e[r][c]);
            }
        }
        acc
    }

    /// Rank over the field of rational functions: the size of the largest
    /// minor that is not the zero polynomial.
    pub fn symbolic_rank(&self) -> usize {
        for size in (1..=4).rev() {
            if self.has_nonzero_minor(size) {
                return size;
            }
        }
        0
    }

    fn has_nonzero_minor(&self, size: usize) -> bool {
        let idx: Vec<usize> = (0..4).collect();
        for rows in combinations(&idx, size) {
            for cols in combinations(&idx, size) {
                if !self.minor(&rows, &cols).is_zero() {
                    return true;
                }
            }
        }
        false
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> CPoly {
        if rows.len() == 1 {
            return self.e[rows[0]][cols[0]].clone();
        }
        let mut det = CPoly::zero();
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != k)
                .map(|(_, &v)| v)
                .collect();
            let cof = self.minor(sub_rows, &rest);
            let term = &self.e[rows[0]][c] * &cof;
            if k % 2 == 0 {
                det = &det + &term;
            } else {
                det = &det - &term;
            }
        }
        det
    }
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[k + 1..], size - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Jacobian in complex coordinates, rows (f̄1, f1, f̄2, f2), columns
/// (z̄1, z1, z̄2, z2). Row 0 is the conjugate of row 1 with barred and
/// unbarred columns exchanged, and likewise rows 2, 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianC(pub PolyMat4);

impl JacobianC {
    pub fn mat(&self) -> &PolyMat4 {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.symbolic_rank()
    }

    /// tr(J conj(J)^T): the squared norm density used by the energy.
    pub fn norm_density(&self) -> CPoly {
        let mut acc = CPoly::zero();
        for r in 0..4 {
            for c in 0..4 {
                acc = &acc + &(&self.0.e[r][c] * &self.0.e[r][c].conj());
            }
        }
        acc
    }
}

/// Jacobian of the real components with respect to x0..x3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianR(pub PolyMat4);

impl JacobianR {
    pub fn mat(&self) -> &PolyMat4 {
        &self.0
    }

    /// Sum of squared entries; equals tr(J_C conj(J_C)^T) pointwise.
    pub fn frobenius_sq(&self) -> CPoly {
        self.0.frobenius_sq_real()
    }
}

/// The evaluation of a first-order operator with quaternion coefficients:
/// c0·df/dx0 + c1·(i·df/dx1) + ... given per-coordinate value-side actions.
/// Returns the four real components of the resulting function.
pub(crate) fn dirac_type_operator(
    f: &QFunction,
    coeff_matrices: [&RealMatrix4; 4],
) -> QFunction {
    let d = f.jacobian_real();
    let mut comps = [
        CPoly::zero(),
        CPoly::zero(),
        CPoly::zero(),
        CPoly::zero(),
    ];
    for (b, lm) in coeff_matrices.iter().enumerate() {
        // column b of the Jacobian, acted on by the quaternion coefficient
        for a in 0..4 {
            let mut acc = CPoly::zero();
            for t in 0..4 {
                if lm.e[a][t].is_zero() {
                    continue;
                }
                acc = &acc + &d.0.e[t][b].scale_rat(&lm.e[a][t]);
            }
            comps[a] = &comps[a] + &acc;
        }
    }
    QFunction::from_components(&comps)
}
