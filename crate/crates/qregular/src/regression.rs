//! The built-in regression table of published example functions and the
//! runner behind the `paper-examples` command. Each case pins exact expected
//! values; a mismatch reports both the expected and the computed value.

use std::fmt;

use num_bigint::BigInt;

use crate::energy::{classify, matrix_a, FunctionClass, StructureSet};
use crate::expr::parse_function;
use crate::integrate::DomainSpec;
use crate::quaternion::ImaginaryDirection;
use crate::regularity::{check_holomorphic_p, check_psi};
use crate::scalar::{rat, rat_to_string, Rat};

/// Expected outcome of one regression case.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)] // a handful of table entries, built once
pub enum Expectation {
    /// Full pipeline: exact energy, exact matrix A and classification.
    Analysis {
        energy: Rat,
        matrix: [[Rat; 3]; 3],
        class: FunctionClass,
        /// For pair classes, the primitive direction; for circles, directions
        /// that must belong to the set.
        directions: Vec<[i64; 3]>,
        jacobian_rank: Option<usize>,
    },
    /// Membership of the function in Hol_p for w and -w.
    Membership { direction: [i64; 3], member: bool },
    /// psi-regularity verdict alone.
    Psi { regular: bool },
}

#[derive(Clone, Debug)]
pub struct ReferenceCase {
    pub name: &'static str,
    pub source: &'static str,
    pub expectation: Expectation,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

fn rows(m: [[i64; 3]; 3]) -> [[Rat; 3]; 3] {
    m.map(|r| r.map(|v| rat(v, 1)))
}

/// The built-in table: the four published example functions and the
/// membership facts from the surrounding remarks.
pub fn reference_cases() -> Vec<ReferenceCase> {
    vec![
        ReferenceCase {
            name: "linear-energy-6",
            source: "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j",
            expectation: Expectation::Analysis {
                energy: rat(6, 1),
                matrix: rows([[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
                class: FunctionClass::TypeIV,
                directions: vec![],
                jacobian_rank: None,
            },
        },
        ReferenceCase {
            name: "positive-example-h",
            source: "conj(z1) + (z1 + conj(z2))*j",
            expectation: Expectation::Analysis {
                energy: rat(3, 1),
                matrix: rows([[-1, 0, 2], [0, 2, 0], [2, 0, 2]]),
                class: FunctionClass::TypeIII,
                directions: vec![[1, 0, 2]],
                jacobian_rank: None,
            },
        },
        ReferenceCase {
            name: "quadratic-energy-2",
            source: "z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j",
            expectation: Expectation::Analysis {
                energy: rat(2, 1),
                matrix: [
                    [rat(-2, 3), rat(0, 1), rat(0, 1)],
                    [rat(0, 1), rat(4, 3), rat(0, 1)],
                    [rat(0, 1), rat(0, 1), rat(4, 3)],
                ],
                class: FunctionClass::TypeIV,
                directions: vec![],
                jacobian_rank: None,
            },
        },
        ReferenceCase {
            name: "odd-jacobian-rank",
            source: "z1 + conj(z1) + conj(z2)*j",
            expectation: Expectation::Analysis {
                energy: rat(3, 1),
                matrix: rows([[-1, 0, 0], [0, 2, 0], [0, 0, 2]]),
                class: FunctionClass::TypeIV,
                directions: vec![],
                jacobian_rank: Some(3),
            },
        },
        ReferenceCase {
            name: "identity-in-hol-i",
            source: "z1 + z2*j",
            expectation: Expectation::Membership {
                direction: [1, 0, 0],
                member: true,
            },
        },
        ReferenceCase {
            name: "identity-in-hol-j",
            source: "z1 + z2*j",
            expectation: Expectation::Membership {
                direction: [0, 1, 0],
                member: true,
            },
        },
        ReferenceCase {
            name: "identity-not-in-hol-k",
            source: "z1 + z2*j",
            expectation: Expectation::Membership {
                direction: [0, 0, 1],
                member: false,
            },
        },
        ReferenceCase {
            name: "antiholomorphic-pair-in-hol-j",
            source: "conj(z1) + conj(z2)*j",
            expectation: Expectation::Membership {
                direction: [0, 1, 0],
                member: true,
            },
        },
        ReferenceCase {
            name: "antiholomorphic-pair-in-hol-k",
            source: "conj(z1) + conj(z2)*j",
            expectation: Expectation::Membership {
                direction: [0, 0, 1],
                member: true,
            },
        },
        ReferenceCase {
            name: "antiholomorphic-pair-is-type-ii",
            source: "conj(z1) + conj(z2)*j",
            expectation: Expectation::Analysis {
                energy: rat(2, 1),
                matrix: rows([[-2, 0, 0], [0, 2, 0], [0, 0, 2]]),
                class: FunctionClass::TypeII,
                directions: vec![[0, 1, 0], [0, 0, 1]],
                jacobian_rank: None,
            },
        },
        ReferenceCase {
            name: "conj-z1-alone-fails-psi",
            source: "conj(z1)",
            expectation: Expectation::Psi { regular: false },
        },
        ReferenceCase {
            name: "h-along-1-0-2",
            source: "conj(z1) + (z1 + conj(z2))*j",
            expectation: Expectation::Membership {
                direction: [1, 0, 2],
                member: true,
            },
        },
    ]
}

/// Runs one case against the unit ball.
pub fn run_case(case: &ReferenceCase) -> CaseOutcome {
    let domain = DomainSpec::unit_ball();
    let f = match parse_function(case.source) {
        Ok(f) => f,
        Err(e) => {
            return CaseOutcome {
                name: case.name,
                passed: false,
                detail: format!("parse failure: {e}"),
            }
        }
    };
    match &case.expectation {
        Expectation::Psi { regular } => {
            let got = check_psi(&f).holds;
            CaseOutcome {
                name: case.name,
                passed: got == *regular,
                detail: format!("psi-regular expected {regular}, got {got}"),
            }
        }
        Expectation::Membership { direction, member } => {
            let w = ImaginaryDirection::from_ints(direction[0], direction[1], direction[2])
                .expect("table directions are nonzero");
            let got = check_holomorphic_p(&f, &w);
            let got_neg = check_holomorphic_p(&f, &w.negated());
            let passed = got == *member && got_neg == *member;
            CaseOutcome {
                name: case.name,
                passed,
                detail: format!(
                    "membership along ±({},{},{}) expected {member}, got {got}/{got_neg}",
                    direction[0], direction[1], direction[2]
                ),
            }
        }
        Expectation::Analysis {
            energy: expect_e,
            matrix: expect_a,
            class: expect_class,
            directions,
            jacobian_rank,
        } => {
            let em = matrix_a(&f, &domain);
            if em.energy() != expect_e {
                return CaseOutcome {
                    name: case.name,
                    passed: false,
                    detail: format!(
                        "energy expected {}, got {}",
                        rat_to_string(expect_e),
                        rat_to_string(em.energy())
                    ),
                };
            }
            if em.entries() != expect_a {
                return CaseOutcome {
                    name: case.name,
                    passed: false,
                    detail: format!("matrix mismatch: expected {expect_a:?}, got {:?}", em.entries()),
                };
            }
            if let Some(rank) = jacobian_rank {
                let got = f.jacobian_complex().rank();
                if got != *rank {
                    return CaseOutcome {
                        name: case.name,
                        passed: false,
                        detail: format!("jacobian rank expected {rank}, got {got}"),
                    };
                }
            }
            let cl = classify(&f, &domain);
            if cl.class != *expect_class {
                return CaseOutcome {
                    name: case.name,
                    passed: false,
                    detail: format!("class expected {expect_class}, got {}", cl.class),
                };
            }
            for d in directions {
                let w = ImaginaryDirection::from_ints(d[0], d[1], d[2]).expect("nonzero");
                let in_set = cl.structures.contains(&w);
                let verified = check_holomorphic_p(&f, &w);
                if !in_set || !verified {
                    return CaseOutcome {
                        name: case.name,
                        passed: false,
                        detail: format!(
                            "direction ({},{},{}) expected in J(f); set={in_set} check={verified}",
                            d[0], d[1], d[2]
                        ),
                    };
                }
                if let StructureSet::Pair { direction } = &cl.structures {
                    let expected: [BigInt; 3] = std::array::from_fn(|k| BigInt::from(d[k]));
                    if direction != &expected {
                        return CaseOutcome {
                            name: case.name,
                            passed: false,
                            detail: format!(
                                "primitive direction expected ({},{},{}), got ({},{},{})",
                                d[0], d[1], d[2], direction[0], direction[1], direction[2]
                            ),
                        };
                    }
                }
            }
            CaseOutcome {
                name: case.name,
                passed: true,
                detail: format!(
                    "energy {}, class {}",
                    rat_to_string(em.energy()),
                    cl.class
                ),
            }
        }
    }
}

/// Runs a list of cases, returning one outcome per case.
pub fn run_cases(cases: &[ReferenceCase]) -> Vec<CaseOutcome> {
    cases.iter().map(run_case).collect()
}

/// Runs the built-in table.
pub fn run_reference_cases() -> Vec<CaseOutcome> {
    run_cases(&reference_cases())
}
