//! Quaternions over the rationals and unnormalized imaginary directions.
//!
//! A quaternion q = x0 + i·x1 + j·x2 + k·x3 is identified with the pair
//! (z1, z2) = (x0 + i·x1, x2 + i·x3) through q = z1 + z2·j.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{grat, rat_int, rat_to_string, GRat, Rat};

/// A quaternion with rational coordinates in the basis 1, i, j, k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion {
    pub x0: Rat,
    pub x1: Rat,
    pub x2: Rat,
    pub x3: Rat,
}

impl Quaternion {
    pub fn new(x0: Rat, x1: Rat, x2: Rat, x3: Rat) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Quaternion::new(rat_int(x0), rat_int(x1), rat_int(x2), rat_int(x3))
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    /// Builds q = z1 + z2·j from its complex components.
    pub fn from_complex_pair(z1: GRat, z2: GRat) -> Self {
        Quaternion::new(z1.re, z1.im, z2.re, z2.im)
    }

    /// Splits q = z1 + z2·j into (z1, z2).
    pub fn complex_parts(&self) -> (GRat, GRat) {
        (
            grat(self.x0.clone(), self.x1.clone()),
            grat(self.x2.clone(), self.x3.clone()),
        )
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(
            self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }

    pub fn norm_sq(&self) -> Rat {
        &self.x0 * &self.x0 + &self.x1 * &self.x1 + &self.x2 * &self.x2 + &self.x3 * &self.x3
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Quaternion::new(&self.x0 * c, &self.x1 * c, &self.x2 * c, &self.x3 * c)
    }

    pub fn coords(&self) -> [Rat; 4] {
        [
            self.x0.clone(),
            self.x1.clone(),
            self.x2.clone(),
            self.x3.clone(),
        ]
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.x0 + &rhs.x0,
            &self.x1 + &rhs.x1,
            &self.x2 + &rhs.x2,
            &self.x3 + &rhs.x3,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.x0 - &rhs.x0,
            &self.x1 - &rhs.x1,
            &self.x2 - &rhs.x2,
            &self.x3 - &rhs.x3,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(
            -self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }
}

/// Hamilton product, bilinear over the rationals.
impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (&self.x0, &self.x1, &self.x2, &self.x3);
        let (b0, b1, b2, b3) = (&rhs.x0, &rhs.x1, &rhs.x2, &rhs.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, unit) in [
            (&self.x0, ""),
            (&self.x1, "i"),
            (&self.x2, "j"),
            (&self.x3, "k"),
        ] {
            if c.is_zero() {
                continue;
            }
            let mag = rat_to_string(&c.abs());
            let body = if unit.is_empty() {
                mag
            } else if c.abs().is_one() {
                unit.to_string()
            } else {
                format!("{}{}", mag, unit)
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", body)
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DirectionError {
    #[error("imaginary direction must be nonzero")]
    Zero,
}

/// An unnormalized direction w in R^3 standing for the unit imaginary
/// quaternion p = (w1·i + w2·j + w3·k)/|w|. Carried unnormalized so square
/// roots never enter the arithmetic; w and -w denote the same structure pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImaginaryDirection {
    w: [Rat; 3],
}

impl ImaginaryDirection {
    pub fn new(w1: Rat, w2: Rat, w3: Rat) -> Result<Self, DirectionError> {
        if w1.is_zero() && w2.is_zero() && w3.is_zero() {
            return Err(DirectionError::Zero);
        }
        Ok(ImaginaryDirection { w: [w1, w2, w3] })
    }

    pub fn from_ints(w1: i64, w2: i64, w3: i64) -> Result<Self, DirectionError> {
        ImaginaryDirection::new(rat_int(w1), rat_int(w2), rat_int(w3))
    }

    pub fn components(&self) -> &[Rat; 3] {
        &self.w
    }

    /// |w|^2 = w1^2 + w2^2 + w3^2, always positive.
    pub fn norm_sq(&self) -> Rat {
        &self.w[0] * &self.w[0] + &self.w[1] * &self.w[1] + &self.w[2] * &self.w[2]
    }

    /// The quaternion w1·i + w2·j + w3·k (not normalized).
    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::new(
            rat_int(0),
            self.w[0].clone(),
            self.w[1].clone(),
            self.w[2].clone(),
        )
    }

    pub fn negated(&self) -> Self {
        ImaginaryDirection {
            w: [
                -self.w[0].clone(),
                -self.w[1].clone(),
                -self.w[2].clone(),
            ],
        }
    }
}

impl fmt::Display for ImaginaryDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            rat_to_string(&self.w[0]),
            rat_to_string(&self.w[1]),
            rat_to_string(&self.w[2])
        )
    }
}
