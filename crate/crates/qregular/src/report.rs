//! Analysis driver: runs every checker on a function and assembles a report,
//! renderable as text or as versioned, machine-readable JSON. Exact values
//! are serialized as rational strings, never as floats; decimal approximations
//! are added only on request and are marked as such.

use serde::{Deserialize, Serialize};

use crate::energy::{classify, invariant_i, invariant_k, Classification, StructureSet};
use crate::integrate::DomainSpec;
use crate::qfunction::QFunction;
use crate::regularity::{check_harmonic, check_regularity};
use crate::scalar::{rat, rat_to_f64, rat_to_string};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    /// The expression as supplied.
    pub source: String,
    /// The parsed normal form f1 + f2·j.
    pub normal_form: String,
    pub domain: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub fueter_regular: bool,
    pub psi_regular: bool,
    pub harmonic: bool,
    /// D' f in normal form; "0" exactly when psi_regular.
    pub dprime_residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureSetReport {
    Empty,
    Pair {
        direction: [String; 3],
    },
    Circle {
        basis: [[String; 3]; 2],
        normal: [String; 3],
    },
    Sphere,
}

impl StructureSetReport {
    fn from_set(set: &StructureSet) -> Self {
        let fmt = |v: &[num_bigint::BigInt; 3]| -> [String; 3] {
            std::array::from_fn(|k| v[k].to_string())
        };
        match set {
            StructureSet::Empty => StructureSetReport::Empty,
            StructureSet::Sphere => StructureSetReport::Sphere,
            StructureSet::Pair { direction } => StructureSetReport::Pair {
                direction: fmt(direction),
            },
            StructureSet::Circle { basis, normal } => StructureSetReport::Circle {
                basis: [fmt(&basis[0]), fmt(&basis[1])],
                normal: fmt(normal),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// "I", "II", "III", "IV" or "not-psi-regular".
    pub class: String,
    pub structure_set: StructureSetReport,
}

/// Decimal approximations, provided only when requested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxReport {
    pub note: String,
    pub energy: f64,
    pub trace_a: f64,
    pub matrix_a: [[f64; 3]; 3],
    pub det_shifted: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: InputEcho,
    pub regularity: RegularityReport,
    /// Dirichlet energy as an exact rational string.
    pub energy: String,
    pub matrix_a: [[String; 3]; 3],
    pub trace_a: String,
    /// det(A - (tr A)·I3).
    pub det_shifted: String,
    /// Coefficients (c0..c3) of det(A - (tr A)I3 - t·I3).
    pub char_poly_shifted: [String; 4],
    pub classification: ClassificationReport,
    /// E + K - I/4; identically zero, reported as computed evidence.
    pub identity_residual: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub approx: Option<ApproxReport>,
}

/// Options for [`analyze`].
#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub include_approx: bool,
}

/// Runs the full pipeline on a parsed function. Deterministic: identical
/// inputs produce byte-identical serialized reports.
pub fn analyze(
    f: &QFunction,
    source: &str,
    domain: &DomainSpec,
    options: AnalyzeOptions,
) -> AnalysisReport {
    let verdict = check_regularity(f);
    let Classification {
        class,
        structures,
        energy_matrix,
    } = classify(f, domain);

    let e = energy_matrix.energy().clone();
    let k = invariant_k(f, domain);
    let i = invariant_i(f, domain);
    let residual = &(&e + &k) - &(i * rat(1, 4));

    let entries = energy_matrix.entries();
    let matrix_a: [[String; 3]; 3] =
        std::array::from_fn(|r| std::array::from_fn(|c| rat_to_string(&entries[r][c])));
    let char_poly: [String; 4] =
        std::array::from_fn(|k| rat_to_string(&energy_matrix.char_poly_shifted()[k]));

    let approx = options.include_approx.then(|| ApproxReport {
        note: "decimal approximations of the exact values above".to_string(),
        energy: rat_to_f64(&e),
        trace_a: rat_to_f64(energy_matrix.trace()),
        matrix_a: std::array::from_fn(|r| std::array::from_fn(|c| rat_to_f64(&entries[r][c]))),
        det_shifted: rat_to_f64(energy_matrix.det_shifted()),
    });

    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: InputEcho {
            source: source.to_string(),
            normal_form: f.to_string(),
            domain: domain.describe(),
        },
        regularity: RegularityReport {
            fueter_regular: verdict.fueter_regular,
            psi_regular: verdict.psi_regular,
            harmonic: check_harmonic(f),
            dprime_residual: verdict.residual.to_string(),
        },
        energy: rat_to_string(&e),
        trace_a: rat_to_string(energy_matrix.trace()),
        det_shifted: rat_to_string(energy_matrix.det_shifted()),
        char_poly_shifted: char_poly,
        matrix_a,
        classification: ClassificationReport {
            class: class.to_string(),
            structure_set: StructureSetReport::from_set(&structures),
        },
        identity_residual: rat_to_string(&residual),
        approx,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("function:     {}", self.input.source));
        line(format!("normal form:  {}", self.input.normal_form));
        line(format!("domain:       {}", self.input.domain));
        line(format!(
            "regularity:   fueter={} psi={} harmonic={}",
            self.regularity.fueter_regular, self.regularity.psi_regular, self.regularity.harmonic
        ));
        if !self.regularity.psi_regular {
            line(format!("D' residual:  {}", self.regularity.dprime_residual));
        }
        line(format!("energy:       {}", self.energy));
        line("matrix A:".to_string());
        for row in &self.matrix_a {
            line(format!("  [{}]", row.join(", ")));
        }
        line(format!("tr A:         {}", self.trace_a));
        line(format!("det(A-trA·I): {}", self.det_shifted));
        line(format!("class:        {}", self.classification.class));
        let set = match &self.classification.structure_set {
            StructureSetReport::Empty => "empty".to_string(),
            StructureSetReport::Sphere => "the whole sphere".to_string(),
            StructureSetReport::Pair { direction } => {
                format!("±({})", direction.join(","))
            }
            StructureSetReport::Circle { basis, normal } => format!(
                "circle normal to ({}) through ({}) and ({})",
                normal.join(","),
                basis[0].join(","),
                basis[1].join(",")
            ),
        };
        line(format!("structures:   {}", set));
        line(format!("E+K-I/4:      {}", self.identity_residual));
        if let Some(a) = &self.approx {
            line(format!("~energy:      {:.6}  ({})", a.energy, a.note));
            line(format!("~tr A:        {:.6}", a.trace_a));
            line(format!("~det shifted: {:.6}", a.det_shifted));
        }
        out
    }
}

/// Convenience wrapper: parse, then analyze on the given domain.
pub fn analyze_source(
    source: &str,
    domain: &DomainSpec,
    options: AnalyzeOptions,
) -> Result<AnalysisReport, crate::expr::ParseError> {
    let f = crate::expr::parse_function(source)?;
    Ok(analyze(&f, source, domain, options))
}
