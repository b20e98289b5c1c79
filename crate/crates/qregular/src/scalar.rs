//! Scalar types: arbitrary-precision rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Gaussian rational: a complex number with rational real and imaginary parts.
pub type GRat = Complex<Rat>;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Gaussian rational re + im·i from integers.
pub fn grat_int(re: i64, im: i64) -> GRat {
    Complex::new(rat_int(re), rat_int(im))
}

/// Gaussian rational with rational parts.
pub fn grat(re: Rat, im: Rat) -> GRat {
    Complex::new(re, im)
}

/// The imaginary unit.
pub fn g_i() -> GRat {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn g_one() -> GRat {
    Complex::new(Rat::one(), Rat::zero())
}

pub fn g_zero() -> GRat {
    Complex::new(Rat::zero(), Rat::zero())
}

/// n!/ as a rational (used by the ball integration formula).
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Canonical text form of a rational: "3", "-5/7".
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form of a Gaussian rational: "0", "3/2", "i", "-2i", "1+i", "1/2-3i".
pub fn grat_to_string(c: &GRat) -> String {
    let re = &c.re;
    let im = &c.im;
    if im.is_zero() {
        return rat_to_string(re);
    }
    let im_part = if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", rat_to_string(im))
    };
    if re.is_zero() {
        return im_part;
    }
    if im.is_positive() {
        format!("{}+{}", rat_to_string(re), im_part)
    } else {
        format!("{}{}", rat_to_string(re), im_part)
    }
}

/// Approximate a rational as f64 (for optional decimal output and the Monte Carlo oracle).
pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact for all values arising here; falls back to string parsing on overflow.
    match (i128::try_from(num.clone()), i128::try_from(den.clone())) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let s = format!("{}", num);
            let t = format!("{}", den);
            s.parse::<f64>().unwrap_or(f64::NAN) / t.parse::<f64>().unwrap_or(f64::NAN)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display() {
        assert_eq!(rat_to_string(&rat(6, 2)), "3");
        assert_eq!(rat_to_string(&rat(-5, 7)), "-5/7");
        assert_eq!(rat_to_string(&rat(5, -7)), "-5/7");
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(grat_to_string(&grat_int(0, 0)), "0");
        assert_eq!(grat_to_string(&grat_int(1, 1)), "1+i");
        assert_eq!(grat_to_string(&grat_int(0, -2)), "-2i");
        assert_eq!(grat_to_string(&grat(rat(1, 2), rat(-3, 1))), "1/2-3i");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
