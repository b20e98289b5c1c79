//! Exact analysis of psi-regular quaternionic functions on the unit ball of
//! H ≅ C².
//!
//! The crate decides, entirely in rational arithmetic, whether a quaternionic
//! polynomial function f = f1 + f2·j is Fueter-regular, psi-regular or
//! holomorphic with respect to one of the complex structures J_p compatible
//! with the standard hypercomplex structure; computes its Dirichlet energy
//! and the 3x3 energy matrix A; and classifies the set J(f) of compatible
//! structures as empty, an antipodal pair, a great circle or the whole
//! sphere, through the criterion E(f) = tr A = max eigenvalue.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── quaternion_basics.rs      # Hamilton product, conjugation, left-multiplication matrices
//! ├── complex_structures.rs     # the J, J*, and value-side structure matrices
//! ├── wirtinger_jacobians.rs    # Wirtinger derivatives and both Jacobians
//! ├── regularity_checks.rs      # Fueter / psi / harmonic / Hol_p verdicts
//! ├── ball_integration.rs       # exact normalized integrals and the Monte Carlo oracle
//! ├── energy_matrix.rs          # energy and the matrix A for the published examples
//! ├── classification.rs         # the four classes and their structure sets
//! ├── boundary_perturbation.rs  # energy minimization under fixed boundary data
//! ├── sextic_invariant.rs       # the degree-6 invariant of linear members
//! └── parse_and_report.rs       # expression parser and JSON reports
//! ```
//!
//! Run one with `cargo run --example energy_matrix`.
//!
//! ## Library sketch
//!
//! ```
//! use qregular::expr::parse_function;
//! use qregular::integrate::DomainSpec;
//! use qregular::energy::{classify, FunctionClass};
//!
//! let h = parse_function("conj(z1) + (z1 + conj(z2))*j").unwrap();
//! let class = classify(&h, &DomainSpec::unit_ball());
//! assert_eq!(class.class, FunctionClass::TypeIII);
//! ```
//!
//! A thin command-line front end exposes the same pipeline; see the
//! `analyze`, `check`, `paper-examples` and `appendix` subcommands.

// Index loops over fixed 4x4 and 3x3 matrices read better than iterator
// chains here.
#![allow(clippy::needless_range_loop)]

pub mod cpoly;
pub mod energy;
pub mod expr;
pub mod integrate;
pub mod linear;
pub mod qfunction;
pub mod quaternion;
pub mod regularity;
pub mod regression;
pub mod report;
pub mod scalar;
pub mod structures;

pub use cpoly::{CPoly, Var};
pub use energy::{
    classify, energy, invariant_i, invariant_i_p, invariant_k, matrix_a, perturb_fixed_boundary,
    Classification, EnergyMatrix, FunctionClass, StructureSet,
};
pub use expr::{parse_function, ParseError};
pub use integrate::{integrate_monomial, integrate_poly, monte_carlo_integral, DomainSpec};
pub use linear::{linear_function, sextic_cross_check, sextic_value, LinearCoefficients};
pub use qfunction::{JacobianC, JacobianR, QFunction};
pub use quaternion::{ImaginaryDirection, Quaternion};
pub use regularity::{
    check_fueter, check_harmonic, check_holomorphic_p, check_psi, check_q_holomorphic,
    RegularityVerdict,
};
pub use report::{analyze, analyze_source, AnalysisReport, AnalyzeOptions};
pub use scalar::{GRat, Rat};
