//! Volume-normalized exact integration of polynomials over balls centered at
//! the origin and axis-aligned boxes, plus a seeded Monte Carlo oracle.
//!
//! Every integral here is divided by the volume of the domain. On the unit
//! ball the normalized monomial integral vanishes unless the monomial pairs
//! each variable with its conjugate, and then
//!   ∫ |z1|^(2a) |z2|^(2c) = 2·a!·c!/(a+c+2)!.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cpoly::{CPoly, Expo};
use crate::scalar::{factorial, g_zero, rat_to_f64, GRat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("ball radius must be positive")]
    NonPositiveRadius,
    #[error("box interval {0} is empty")]
    EmptyInterval(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum DomainKind {
    UnitBall,
    Ball { radius: Rat },
    Box { intervals: Box<[(Rat, Rat); 4]> },
}

/// An integration domain: a ball centered at the origin or an axis-aligned
/// box in the real coordinates x0..x3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainSpec {
    kind: DomainKind,
}

impl DomainSpec {
    pub fn unit_ball() -> Self {
        DomainSpec {
            kind: DomainKind::UnitBall,
        }
    }

    pub fn ball(radius: Rat) -> Result<Self, DomainError> {
        if !radius.is_positive() {
            return Err(DomainError::NonPositiveRadius);
        }
        Ok(DomainSpec {
            kind: DomainKind::Ball { radius },
        })
    }

    pub fn cuboid(intervals: [(Rat, Rat); 4]) -> Result<Self, DomainError> {
        for (k, (lo, hi)) in intervals.iter().enumerate() {
            if lo >= hi {
                return Err(DomainError::EmptyInterval(k));
            }
        }
        Ok(DomainSpec {
            kind: DomainKind::Box {
                intervals: Box::new(intervals),
            },
        })
    }

    pub fn is_unit_ball(&self) -> bool {
        matches!(self.kind, DomainKind::UnitBall)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            DomainKind::UnitBall => "unit-ball".to_string(),
            DomainKind::Ball { radius } => format!("ball:{}", crate::scalar::rat_to_string(radius)),
            DomainKind::Box { intervals } => {
                let parts: Vec<String> = intervals
                    .iter()
                    .map(|(lo, hi)| {
                        format!(
                            "{},{}",
                            crate::scalar::rat_to_string(lo),
                            crate::scalar::rat_to_string(hi)
                        )
                    })
                    .collect();
                format!("box:{}", parts.join("x"))
            }
        }
    }
}

/// Normalized monomial integral over the unit ball: zero unless a = b and
/// c = d, and 2·a!·c!/(a+c+2)! otherwise.
pub fn unit_ball_monomial(expo: &Expo) -> Rat {
    let (a, b, c, d) = (expo[0], expo[1], expo[2], expo[3]);
    if a != b || c != d {
        return Rat::zero();
    }
    let num = BigInt::from(2) * factorial(a) * factorial(c);
    let den = factorial(a + c + 2);
    Rat::new(num, den)
}

/// Normalized integral of a monomial z1^a z̄1^b z2^c z̄2^d over the domain.
pub fn integrate_monomial(expo: &Expo, domain: &DomainSpec) -> GRat {
    match &domain.kind {
        DomainKind::UnitBall => GRat::new(unit_ball_monomial(expo), Rat::zero()),
        DomainKind::Ball { radius } => {
            let total: u32 = expo.iter().sum();
            let mut scale = Rat::one();
            for _ in 0..total {
                scale *= radius;
            }
            GRat::new(unit_ball_monomial(expo) * scale, Rat::zero())
        }
        DomainKind::Box { intervals } => box_monomial(expo, intervals),
    }
}

/// Normalized integral of a polynomial: the linear extension over its terms.
pub fn integrate_poly(p: &CPoly, domain: &DomainSpec) -> GRat {
    let mut acc = g_zero();
    for (expo, coeff) in p.terms() {
        acc += coeff * integrate_monomial(expo, domain);
    }
    acc
}

/// Normalized integral of a polynomial known to be real-valued.
/// Panics if an imaginary part survives, which would indicate a bug upstream.
pub fn integrate_real_poly(p: &CPoly, domain: &DomainSpec) -> Rat {
    let v = integrate_poly(p, domain);
    assert!(v.im.is_zero(), "integral of a real polynomial came out complex");
    v.re
}

/// Expands (x + iy)^m (x - iy)^n over one complex slot into monomials in
/// (x, y) and feeds them to a 1-D moment function.
fn pair_box_integral(m: u32, n: u32, ix: &(Rat, Rat), iy: &(Rat, Rat)) -> GRat {
    // (x+iy)^m = sum_s C(m,s) x^s (iy)^(m-s); similarly with -i for the bar.
    let mut acc = g_zero();
    for s in 0..=m {
        for t in 0..=n {
            let pow_i = (m - s) as i64 - (n - t) as i64; // power of i
            let coeff_mag = Rat::new(binomial(m, s) * binomial(n, t), BigInt::one());
            let xmom = moment_1d(ix, s + t);
            let ymom = moment_1d(iy, (m - s) + (n - t));
            let mag = coeff_mag * xmom * ymom;
            acc += i_power(pow_i, mag);
        }
    }
    acc
}

fn binomial(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// i^p times a rational magnitude, for signed p.
fn i_power(p: i64, mag: Rat) -> GRat {
    match p.rem_euclid(4) {
        0 => GRat::new(mag, Rat::zero()),
        1 => GRat::new(Rat::zero(), mag),
        2 => GRat::new(-mag, Rat::zero()),
        _ => GRat::new(Rat::zero(), -mag),
    }
}

/// Normalized 1-D moment over [lo, hi]: (hi^(n+1) - lo^(n+1))/((n+1)(hi - lo)).
fn moment_1d(interval: &(Rat, Rat), n: u32) -> Rat {
    let (lo, hi) = interval;
    let p = (n + 1) as i64;
    let hi_pow = pow_rat(hi, n + 1);
    let lo_pow = pow_rat(lo, n + 1);
    (hi_pow - lo_pow) / ((hi - lo) * Rat::new(BigInt::from(p), BigInt::one()))
}

fn pow_rat(r: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= r;
    }
    acc
}

fn box_monomial(expo: &Expo, intervals: &[(Rat, Rat); 4]) -> GRat {
    // The integral factorizes through the two complex slots.
    let z1_part = pair_box_integral(expo[0], expo[1], &intervals[0], &intervals[1]);
    let z2_part = pair_box_integral(expo[2], expo[3], &intervals[2], &intervals[3]);
    z1_part * z2_part
}

/// A Monte Carlo estimate of a normalized integral with per-component
/// standard errors of the mean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub re: f64,
    pub im: f64,
    pub re_stderr: f64,
    pub im_stderr: f64,
}

impl McEstimate {
    /// True when both components of the exact value lie within k standard
    /// errors of the estimate.
    pub fn agrees_with(&self, exact: &GRat, k: f64) -> bool {
        let (ex_re, ex_im) = (rat_to_f64(&exact.re), rat_to_f64(&exact.im));
        (self.re - ex_re).abs() <= k * self.re_stderr
            && (self.im - ex_im).abs() <= k * self.im_stderr
    }
}

/// Uniform-sampling Monte Carlo estimate of the normalized integral.
/// Deterministic for a fixed seed; single-threaded accumulation. Ball
/// sampling rejects from the bounding 4-cube (acceptance ratio ~0.308).
pub fn monte_carlo_integral(
    p: &CPoly,
    domain: &DomainSpec,
    samples: u64,
    seed: u64,
) -> McEstimate {
    assert!(samples > 0, "sample count must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Constant-fold the term list once.
    let terms: Vec<([u32; 4], (f64, f64))> = p
        .terms()
        .map(|(e, c)| (*e, (rat_to_f64(&c.re), rat_to_f64(&c.im))))
        .collect();
    let max_pow = terms
        .iter()
        .map(|(e, _)| e.iter().copied().max().unwrap_or(0))
        .max()
        .unwrap_or(0) as usize;

    let (radius, bounds): (f64, Option<[(f64, f64); 4]>) = match &domain.kind {
        DomainKind::UnitBall => (1.0, None),
        DomainKind::Ball { radius } => (rat_to_f64(radius), None),
        DomainKind::Box { intervals } => {
            let b = std::array::from_fn(|k| {
                (rat_to_f64(&intervals[k].0), rat_to_f64(&intervals[k].1))
            });
            (0.0, Some(b))
        }
    };

    let mut sum_re = 0.0f64;
    let mut sum_im = 0.0f64;
    let mut sum_re_sq = 0.0f64;
    let mut sum_im_sq = 0.0f64;

    // Power tables for the four slot values z1, z̄1, z2, z̄2.
    let mut pows = vec![[(0.0f64, 0.0f64); 4]; max_pow + 1];

    for _ in 0..samples {
        let x = match bounds {
            None => loop {
                let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                if c.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
                    break c.map(|v| v * radius);
                }
            },
            Some(b) => std::array::from_fn(|k| rng.gen_range(b[k].0..b[k].1)),
        };
        let vals = [
            (x[0], x[1]),
            (x[0], -x[1]),
            (x[2], x[3]),
            (x[2], -x[3]),
        ];
        pows[0] = [(1.0, 0.0); 4];
        for p in 1..=max_pow {
            for s in 0..4 {
                let (ar, ai) = pows[p - 1][s];
                let (br, bi) = vals[s];
                pows[p][s] = (ar * br - ai * bi, ar * bi + ai * br);
            }
        }
        let mut vre = 0.0f64;
        let mut vim = 0.0f64;
        for (e, (cr, ci)) in &terms {
            let mut tr = *cr;
            let mut ti = *ci;
            for s in 0..4 {
                let (pr, pi) = pows[e[s] as usize][s];
                let nr = tr * pr - ti * pi;
                ti = tr * pi + ti * pr;
                tr = nr;
            }
            vre += tr;
            vim += ti;
        }
        sum_re += vre;
        sum_im += vim;
        sum_re_sq += vre * vre;
        sum_im_sq += vim * vim;
    }

    let n = samples as f64;
    let mean_re = sum_re / n;
    let mean_im = sum_im / n;
    let var_re = (sum_re_sq / n - mean_re * mean_re).max(0.0);
    let var_im = (sum_im_sq / n - mean_im * mean_im).max(0.0);
    McEstimate {
        re: mean_re,
        im: mean_im,
        re_stderr: (var_re / n).sqrt(),
        im_stderr: (var_im / n).sqrt(),
    }
}

/// Convenience: sampling volume check used by oracle self-tests.
pub fn acceptance_ratio_hint() -> f64 {
    std::f64::consts::PI * std::f64::consts::PI / 32.0
}
