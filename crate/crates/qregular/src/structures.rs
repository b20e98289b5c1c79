//! Exact matrix representations of the complex structures on H.
//!
//! Three families appear:
//! - real 4x4 matrices acting on tangent coordinates (x0, x1, x2, x3):
//!   left multiplications L_q and the hypercomplex triple J1, J2, J3 = -J1·J2;
//! - complex 4x4 matrices acting on covector coordinates in the fixed basis
//!   {dz̄1, dz1, dz̄2, dz2}: the duals J*_alpha, with M3 = M1·M2;
//! - complex 4x4 matrices acting on component vectors (f̄1, f1, f̄2, f2):
//!   left multiplication by i, j, k on values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::quaternion::{ImaginaryDirection, Quaternion};
use crate::scalar::{g_zero, grat_to_string, rat_int, rat_to_string, GRat, Rat};

/// A 4x4 matrix with rational entries, acting on coordinate column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealMatrix4 {
    pub e: [[Rat; 4]; 4],
}

impl RealMatrix4 {
    pub fn zero() -> Self {
        RealMatrix4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = RealMatrix4::zero();
        for d in 0..4 {
            m.e[d][d] = rat_int(1);
        }
        m
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        RealMatrix4 {
            e: rows.map(|r| r.map(rat_int)),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = RealMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[c][r].clone();
            }
        }
        m
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply(&self, v: &[Rat; 4]) -> [Rat; 4] {
        std::array::from_fn(|r| {
            (0..4).fold(Rat::zero(), |acc, c| acc + &self.e[r][c] * &v[c])
        })
    }
}

impl Add for &RealMatrix4 {
    type Output = RealMatrix4;
    fn add(self, rhs: &RealMatrix4) -> RealMatrix4 {
        let mut m = RealMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = &self.e[r][c] + &rhs.e[r][c];
            }
        }
        m
    }
}

impl Sub for &RealMatrix4 {
    type Output = RealMatrix4;
    fn sub(self, rhs: &RealMatrix4) -> RealMatrix4 {
        let mut m = RealMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = &self.e[r][c] - &rhs.e[r][c];
            }
        }
        m
    }
}

impl Neg for &RealMatrix4 {
    type Output = RealMatrix4;
    fn neg(self) -> RealMatrix4 {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        m
    }
}

impl Mul for &RealMatrix4 {
    type Output = RealMatrix4;
    fn mul(self, rhs: &RealMatrix4) -> RealMatrix4 {
        let mut m = RealMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = Rat::zero();
                for t in 0..4 {
                    acc += &self.e[r][t] * &rhs.e[t][c];
                }
                m.e[r][c] = acc;
            }
        }
        m
    }
}

impl fmt::Display for RealMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.e {
            writeln!(
                f,
                "[{}]",
                row.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

/// A 4x4 matrix with Gaussian-rational entries, acting on coordinate vectors
/// in the basis {dz̄1, dz1, dz̄2, dz2} (or on component vectors (f̄1, f1, f̄2, f2)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix4 {
    pub e: [[GRat; 4]; 4],
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        ComplexMatrix4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| g_zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = ComplexMatrix4::zero();
        for d in 0..4 {
            m.e[d][d] = crate::scalar::g_one();
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = ComplexMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[c][r].clone();
            }
        }
        m
    }

    pub fn conjugate(&self) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for v in row.iter_mut() {
                *v = v.conj();
            }
        }
        m
    }

    pub fn apply(&self, v: &[GRat; 4]) -> [GRat; 4] {
        std::array::from_fn(|r| {
            (0..4).fold(g_zero(), |acc, c| acc + &self.e[r][c] * &v[c])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }
}

impl Neg for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn neg(self) -> ComplexMatrix4 {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        m
    }
}

impl Mul for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn mul(self, rhs: &ComplexMatrix4) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = g_zero();
                for t in 0..4 {
                    acc += &self.e[r][t] * &rhs.e[t][c];
                }
                m.e[r][c] = acc;
            }
        }
        m
    }
}

impl fmt::Display for ComplexMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.e {
            writeln!(
                f,
                "[{}]",
                row.iter().map(grat_to_string).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

/// Matrix of left multiplication by q on H, in coordinates (x0, x1, x2, x3):
/// column b holds the coordinates of q·e_b.
pub fn left_mult_matrix(q: &Quaternion) -> RealMatrix4 {
    let units = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ];
    let mut m = RealMatrix4::zero();
    for (b, u) in units.iter().enumerate() {
        let col = (q * u).coords();
        for r in 0..4 {
            m.e[r][b] = col[r].clone();
        }
    }
    m
}

/// The complex structure J_alpha on the tangent space, alpha in 1..=3.
/// J1 and J2 are left multiplication by i and j; J3 = -J1·J2.
pub fn structure_j(alpha: usize) -> RealMatrix4 {
    match alpha {
        1 => left_mult_matrix(&Quaternion::i()),
        2 => left_mult_matrix(&Quaternion::j()),
        3 => {
            let j1 = structure_j(1);
            let j2 = structure_j(2);
            -&(&j1 * &j2)
        }
        _ => panic!("structure index must be 1, 2 or 3"),
    }
}

/// Matrix of the dual structure J*_alpha on covectors, in the basis
/// {dz̄1, dz1, dz̄2, dz2}: column l holds the coordinates of J*(basis_l).
/// The action on dz1, dz2 is
///   J1* dz1 = i dz1,   J1* dz2 = i dz2,
///   J2* dz1 = -dz̄2,    J2* dz2 = dz̄1,
///   J3* dz1 = i dz̄2,   J3* dz2 = -i dz̄1,
/// extended to dz̄1, dz̄2 by J*(conj w) = conj(J* w); M3 = M1·M2.
pub fn structure_m(alpha: usize) -> ComplexMatrix4 {
    use crate::scalar::{g_i, g_one};
    let i = g_i();
    let mut m = ComplexMatrix4::zero();
    match alpha {
        1 => {
            m.e[0][0] = -i.clone();
            m.e[1][1] = i.clone();
            m.e[2][2] = -i.clone();
            m.e[3][3] = i;
        }
        2 => {
            // columns: dz̄1 -> -dz2, dz1 -> -dz̄2, dz̄2 -> dz1, dz2 -> dz̄1
            m.e[3][0] = -g_one();
            m.e[2][1] = -g_one();
            m.e[1][2] = g_one();
            m.e[0][3] = g_one();
        }
        3 => {
            // columns: dz̄1 -> -i dz2, dz1 -> i dz̄2, dz̄2 -> i dz1, dz2 -> -i dz̄1
            m.e[3][0] = -i.clone();
            m.e[2][1] = i.clone();
            m.e[1][2] = i.clone();
            m.e[0][3] = -i;
        }
        _ => panic!("structure index must be 1, 2 or 3"),
    }
    m
}

/// Matrix of left multiplication by i_beta (i, j, k) on component vectors
/// (f̄1, f1, f̄2, f2). These value-side structures equal M1, -M2, -M3.
pub fn value_structure(beta: usize) -> ComplexMatrix4 {
    match beta {
        1 => structure_m(1),
        2 => -&structure_m(2),
        3 => -&structure_m(3),
        _ => panic!("structure index must be 1, 2 or 3"),
    }
}

/// The unnormalized combination w1·J1 + w2·J2 + w3·J3; callers account for |w|.
pub fn structure_jp(w: &ImaginaryDirection) -> RealMatrix4 {
    let c = w.components();
    let mut acc = structure_j(1).scale(&c[0]);
    acc = &acc + &structure_j(2).scale(&c[1]);
    &acc + &structure_j(3).scale(&c[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{g_i, g_one, rat};

    fn minus_identity() -> RealMatrix4 {
        -&RealMatrix4::identity()
    }

    #[test]
    fn left_mult_by_one_is_identity() {
        assert_eq!(left_mult_matrix(&Quaternion::one()), RealMatrix4::identity());
    }

    #[test]
    fn left_mult_by_i() {
        // i·(x0 + i x1 + j x2 + k x3) has coordinates (-x1, x0, -x3, x2)
        let expected = RealMatrix4::from_ints([
            [0, -1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, -1],
            [0, 0, 1, 0],
        ]);
        let li = left_mult_matrix(&Quaternion::i());
        assert_eq!(li, expected);
        assert_eq!(&li * &li, minus_identity());
    }

    #[test]
    fn left_mult_is_homomorphism() {
        let a = Quaternion::from_ints(1, 2, 3, -1);
        let b = Quaternion::from_ints(0, -1, 2, 5);
        assert_eq!(
            &left_mult_matrix(&a) * &left_mult_matrix(&b),
            left_mult_matrix(&(&a * &b))
        );
    }

    #[test]
    fn left_mult_by_unit_is_orthogonal() {
        for q in [Quaternion::i(), Quaternion::j(), Quaternion::k()] {
            let m = left_mult_matrix(&q);
            assert_eq!(&m.transpose() * &m, RealMatrix4::identity());
            assert_eq!(&m * &m, minus_identity());
        }
    }

    #[test]
    fn j3_sign_choice() {
        let lhs = structure_j(3);
        assert_eq!(lhs, -&(&structure_j(1) * &structure_j(2)));
        // J3 is not left multiplication by k (it is its negative).
        assert_ne!(lhs, left_mult_matrix(&Quaternion::k()));
    }

    #[test]
    fn j_triple_relations() {
        for alpha in 1..=3 {
            let j = structure_j(alpha);
            assert_eq!(&j * &j, minus_identity());
        }
        for alpha in 1..=3 {
            for beta in 1..=3 {
                if alpha == beta {
                    continue;
                }
                let ja = structure_j(alpha);
                let jb = structure_j(beta);
                assert_eq!(&ja * &jb, -&(&jb * &ja));
            }
        }
    }

    #[test]
    fn m_table_entries() {
        let i = g_i();
        // M1·coords(dz1) = i·coords(dz1)
        let m1 = structure_m(1);
        assert_eq!(m1.e[1][1], i);
        // M2·coords(dz2) = coords(dz̄1)
        let m2 = structure_m(2);
        assert_eq!(m2.e[0][3], g_one());
        // M3·coords(dz̄2) = i·coords(dz1)
        let m3 = structure_m(3);
        assert_eq!(m3.e[1][2], i);
    }

    #[test]
    fn m3_is_m1_m2_and_squares() {
        assert_eq!(structure_m(3), &structure_m(1) * &structure_m(2));
        let minus_id = -&ComplexMatrix4::identity();
        for alpha in 1..=3 {
            let m = structure_m(alpha);
            assert_eq!(&m * &m, minus_id);
        }
    }

    #[test]
    fn m_conjugation_symmetry() {
        // Swapping barred/unbarred slots on both sides conjugates the entries.
        let swap = [1usize, 0, 3, 2];
        for alpha in 1..=3 {
            let m = structure_m(alpha);
            for r in 0..4 {
                for c in 0..4 {
                    assert_eq!(m.e[swap[r]][swap[c]], m.e[r][c].conj());
                }
            }
        }
    }

    #[test]
    fn value_structures_represent_left_multiplication() {
        // On values q = z1 + z2 j the component vector is (z̄1, z1, z̄2, z2);
        // left multiplication by i, j, k must act accordingly.
        let samples = [
            Quaternion::from_ints(1, 2, 3, 4),
            Quaternion::from_ints(0, -1, 5, 2),
        ];
        for (beta, unit) in [(1, Quaternion::i()), (2, Quaternion::j()), (3, Quaternion::k())] {
            let l = value_structure(beta);
            for q in &samples {
                let (z1, z2) = q.complex_parts();
                let v = [z1.conj(), z1, z2.conj(), z2.clone()];
                let lv = l.apply(&v);
                let (w1, w2) = (&unit * q).complex_parts();
                assert_eq!(lv[0], w1.conj());
                assert_eq!(lv[1], w1);
                assert_eq!(lv[2], w2.conj());
                assert_eq!(lv[3], w2);
            }
        }
    }

    #[test]
    fn jp_combination() {
        let w = ImaginaryDirection::from_ints(1, 0, 0).unwrap();
        assert_eq!(structure_jp(&w), structure_j(1));

        let w = ImaginaryDirection::from_ints(1, 0, 2).unwrap();
        let expected = &structure_j(1) + &structure_j(3).scale(&rat(2, 1));
        assert_eq!(structure_jp(&w), expected);
    }

    #[test]
    fn jp_squares_to_minus_norm() {
        let w = ImaginaryDirection::from_ints(2, -3, 5).unwrap();
        let jw = structure_jp(&w);
        let expected = minus_identity().scale(&w.norm_sq());
        assert_eq!(&jw * &jw, expected);
    }
}
