//! Polynomials in z1, z̄1, z2, z̄2 with Gaussian-rational coefficients.
//!
//! The four symbols are treated as independent variables; conjugation swaps
//! the exponent slots of z and z̄ and conjugates coefficients. All arithmetic
//! canonicalizes: zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{g_i, g_one, g_zero, grat_to_string, rat, rat_to_string, GRat, Rat};

/// One of the four formal variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Z1,
    Z1Bar,
    Z2,
    Z2Bar,
}

impl Var {
    /// Slot in the exponent tuple (z1, z̄1, z2, z̄2).
    pub fn slot(self) -> usize {
        match self {
            Var::Z1 => 0,
            Var::Z1Bar => 1,
            Var::Z2 => 2,
            Var::Z2Bar => 3,
        }
    }

    pub fn all() -> [Var; 4] {
        [Var::Z1, Var::Z1Bar, Var::Z2, Var::Z2Bar]
    }
}

/// Exponent tuple (a, b, c, d) for z1^a z̄1^b z2^c z̄2^d.
pub type Expo = [u32; 4];

/// A polynomial with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CPoly {
    terms: BTreeMap<Expo, GRat>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        CPoly::constant(g_one())
    }

    pub fn constant(c: GRat) -> Self {
        let mut p = CPoly::zero();
        if !c.is_zero() {
            p.terms.insert([0; 4], c);
        }
        p
    }

    pub fn constant_int(n: i64) -> Self {
        CPoly::constant(crate::scalar::grat_int(n, 0))
    }

    pub fn var(v: Var) -> Self {
        let mut expo = [0u32; 4];
        expo[v.slot()] = 1;
        CPoly::monomial(expo, g_one())
    }

    pub fn monomial(expo: Expo, coeff: GRat) -> Self {
        let mut p = CPoly::zero();
        if !coeff.is_zero() {
            p.terms.insert(expo, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &GRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, expo: &Expo) -> GRat {
        self.terms.get(expo).cloned().unwrap_or_else(g_zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, expo: Expo, coeff: GRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&expo) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&expo);
                }
            }
            None => {
                self.terms.insert(expo, coeff);
            }
        }
    }

    pub fn scale(&self, s: &GRat) -> CPoly {
        if s.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * s))
                .collect(),
        }
    }

    pub fn scale_rat(&self, s: &Rat) -> CPoly {
        self.scale(&GRat::new(s.clone(), Rat::zero()))
    }

    /// The ring involution: conjugates coefficients and swaps z with z̄.
    pub fn conj(&self) -> CPoly {
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[1], e[0], e[3], e[2]], c.conj()))
                .collect(),
        }
    }

    /// Pullback under the reflection x3 -> -x3, which exchanges z2 and z̄2.
    pub fn swap_z2_bar(&self) -> CPoly {
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0], e[1], e[3], e[2]], c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative, the four variables treated as independent.
    pub fn wirtinger(&self, v: Var) -> CPoly {
        let s = v.slot();
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if e[s] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[s] -= 1;
            let factor = GRat::new(rat(e[s] as i64, 1), Rat::zero());
            out.insert_term(e2, c * factor);
        }
        out
    }

    /// Derivative along the real coordinate x_b, b in 0..=3.
    pub fn x_derivative(&self, b: usize) -> CPoly {
        let i = CPoly::constant(g_i());
        match b {
            0 => &self.wirtinger(Var::Z1) + &self.wirtinger(Var::Z1Bar),
            1 => &i * &(&self.wirtinger(Var::Z1) - &self.wirtinger(Var::Z1Bar)),
            2 => &self.wirtinger(Var::Z2) + &self.wirtinger(Var::Z2Bar),
            3 => &i * &(&self.wirtinger(Var::Z2) - &self.wirtinger(Var::Z2Bar)),
            _ => panic!("coordinate index must be 0..=3"),
        }
    }

    /// The Euclidean Laplacian 4(d²/dz1 dz̄1 + d²/dz2 dz̄2).
    pub fn laplacian(&self) -> CPoly {
        let a = self.wirtinger(Var::Z1).wirtinger(Var::Z1Bar);
        let b = self.wirtinger(Var::Z2).wirtinger(Var::Z2Bar);
        (&a + &b).scale(&crate::scalar::grat_int(4, 0))
    }

    /// Real part as a polynomial: (P + conj P)/2.
    pub fn real_part(&self) -> CPoly {
        (self + &self.conj()).scale(&GRat::new(rat(1, 2), Rat::zero()))
    }

    /// Imaginary part as a polynomial: (P - conj P)/(2i).
    pub fn imag_part(&self) -> CPoly {
        (self - &self.conj()).scale(&GRat::new(Rat::zero(), rat(-1, 2)))
    }

    /// True when conj(P) = P, i.e. the polynomial is real-valued.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Evaluates at a point, with z̄1, z̄2 bound to the conjugates of z1, z2.
    pub fn eval(&self, z1: &GRat, z2: &GRat) -> GRat {
        let vals = [z1.clone(), z1.conj(), z2.clone(), z2.conj()];
        let mut acc = g_zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (s, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term *= &vals[s];
                }
            }
            acc += term;
        }
        acc
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let expo = [
                    ea[0] + eb[0],
                    ea[1] + eb[1],
                    ea[2] + eb[2],
                    ea[3] + eb[3],
                ];
                out.insert_term(expo, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for CPoly {
    /// Canonical form, re-parseable by the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Ascending total degree; within a degree, unbarred variables first.
        let mut ordered: Vec<(&Expo, &GRat)> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| {
            let deg: u32 = e.iter().sum();
            (deg, std::cmp::Reverse((e[0], e[2], e[1], e[3])))
        });
        let mut first = true;
        for (e, c) in ordered {
            let mon = monomial_string(e);
            let (sign_is_minus, body) = coeff_and_monomial(c, mon.as_deref());
            if first {
                if sign_is_minus {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
                first = false;
            } else if sign_is_minus {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

fn monomial_string(e: &Expo) -> Option<String> {
    let names = ["z1", "conj(z1)", "z2", "conj(z2)"];
    let mut parts = Vec::new();
    for (s, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => parts.push(names[s].to_string()),
            _ => parts.push(format!("{}^{}", names[s], p)),
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

/// Renders one term, reporting whether a leading minus was extracted.
fn coeff_and_monomial(c: &GRat, mon: Option<&str>) -> (bool, String) {
    if c.im.is_zero() {
        let minus = c.re.is_negative();
        let mag = c.re.abs();
        let body = match mon {
            Some(m) if mag.is_one() => m.to_string(),
            Some(m) => format!("{}*{}", rat_to_string(&mag), m),
            None => rat_to_string(&mag),
        };
        (minus, body)
    } else if c.re.is_zero() {
        let minus = c.im.is_negative();
        let mag = c.im.abs();
        let coeff = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{}i", rat_to_string(&mag))
        };
        let body = match mon {
            Some(m) => format!("{}*{}", coeff, m),
            None => coeff,
        };
        (minus, body)
    } else {
        let inner = grat_to_string(c);
        let body = match mon {
            Some(m) => format!("({})*{}", inner, m),
            None => format!("({})", inner),
        };
        (false, body)
    }
}
