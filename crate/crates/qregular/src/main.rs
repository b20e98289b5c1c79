//! Thin command-line front end over the library pipeline.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qregular::expr::{parse_complex, parse_function, parse_rational, ParseError};
use qregular::integrate::DomainSpec;
use qregular::linear::{sextic_cross_check, LinearCoefficients};
use qregular::quaternion::{ImaginaryDirection, Quaternion};
use qregular::regression::run_reference_cases;
use qregular::report::{analyze, AnalyzeOptions};
use qregular::scalar::rat_to_string;

#[derive(Parser)]
#[command(name = "qregular", version, about = "Exact analysis of psi-regular quaternionic functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: regularity, energy, matrix A, classification.
    Analyze {
        /// Function expression, e.g. "conj(z1) + (z1 + conj(z2))*j"
        #[arg(long)]
        function: String,
        /// unit-ball | ball:<r> | box:<a,b>x<c,d>x<e,f>x<g,h>
        #[arg(long, default_value = "unit-ball")]
        domain: String,
        /// Emit the machine-readable JSON report.
        #[arg(long)]
        json: bool,
        /// Add decimal approximations, marked as such.
        #[arg(long)]
        approx: bool,
    },
    /// Check membership in Hol_p for the structure given by a direction.
    Check {
        #[arg(long)]
        function: String,
        /// Unnormalized direction, e.g. "1,0,2"
        #[arg(long)]
        direction: String,
    },
    /// Run the built-in regression table of published example functions.
    PaperExamples,
    /// Evaluate the degree-6 invariant of a linear member and cross-check it
    /// against the energy-matrix pipeline.
    Appendix {
        /// Complex splittings of q1, e.g. "1,0" or "1/2+3i,-i"
        #[arg(long)]
        q1: String,
        #[arg(long)]
        q2: String,
        #[arg(long)]
        q3: String,
    },
}

enum CliError {
    Parse(String),
    Analysis(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn parse_domain(text: &str) -> Result<DomainSpec, CliError> {
    if text == "unit-ball" {
        return Ok(DomainSpec::unit_ball());
    }
    if let Some(r) = text.strip_prefix("ball:") {
        let radius = parse_rational(r)?;
        return DomainSpec::ball(radius).map_err(|e| CliError::Analysis(e.to_string()));
    }
    if let Some(rest) = text.strip_prefix("box:") {
        let pieces: Vec<&str> = rest.split('x').collect();
        if pieces.len() != 4 {
            return Err(CliError::Analysis(format!(
                "box domain needs 4 intervals separated by 'x', got {}",
                pieces.len()
            )));
        }
        let mut intervals = Vec::new();
        for p in pieces {
            let (lo, hi) = p.split_once(',').ok_or_else(|| {
                CliError::Analysis(format!("interval '{p}' must be '<lo>,<hi>'"))
            })?;
            intervals.push((parse_rational(lo)?, parse_rational(hi)?));
        }
        let arr: [(qregular::Rat, qregular::Rat); 4] =
            intervals.try_into().expect("length checked above");
        return DomainSpec::cuboid(arr).map_err(|e| CliError::Analysis(e.to_string()));
    }
    Err(CliError::Analysis(format!(
        "unknown domain '{text}'; expected unit-ball, ball:<r> or box:<..>x<..>x<..>x<..>"
    )))
}

fn parse_direction(text: &str) -> Result<ImaginaryDirection, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Analysis(format!(
            "direction needs 3 components, got {}",
            parts.len()
        )));
    }
    let w1 = parse_rational(parts[0])?;
    let w2 = parse_rational(parts[1])?;
    let w3 = parse_rational(parts[2])?;
    ImaginaryDirection::new(w1, w2, w3).map_err(|e| CliError::Analysis(e.to_string()))
}

fn parse_quaternion_pair(text: &str) -> Result<Quaternion, CliError> {
    let (first, second) = text.split_once(',').ok_or_else(|| {
        CliError::Analysis(format!("'{text}' must be two complex values '<c1>,<c2>'"))
    })?;
    let c1 = parse_complex(first.trim())?;
    let c2 = parse_complex(second.trim())?;
    Ok(Quaternion::from_complex_pair(c1, c2))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            function,
            domain,
            json,
            approx,
        } => {
            let f = parse_function(&function)?;
            let domain = parse_domain(&domain)?;
            let report = analyze(
                &f,
                &function,
                &domain,
                AnalyzeOptions {
                    include_approx: approx,
                },
            );
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
        Command::Check {
            function,
            direction,
        } => {
            let f = parse_function(&function)?;
            let w = parse_direction(&direction)?;
            let member = qregular::check_holomorphic_p(&f, &w);
            println!(
                "{} is{} holomorphic for the structure pair ±{}",
                f,
                if member { "" } else { " not" },
                w
            );
            Ok(())
        }
        Command::PaperExamples => {
            let outcomes = run_reference_cases();
            let mut failed = 0usize;
            for o in &outcomes {
                println!("{o}");
                if !o.passed {
                    failed += 1;
                }
            }
            println!("{} of {} cases passed", outcomes.len() - failed, outcomes.len());
            if failed > 0 {
                return Err(CliError::Analysis(format!("{failed} case(s) failed")));
            }
            Ok(())
        }
        Command::Appendix { q1, q2, q3 } => {
            let coeffs = LinearCoefficients::new(
                parse_quaternion_pair(&q1)?,
                parse_quaternion_pair(&q2)?,
                parse_quaternion_pair(&q3)?,
            );
            match sextic_cross_check(&coeffs) {
                Ok(v) => {
                    println!("sextic invariant, both routes: {}", rat_to_string(&v));
                    if v == qregular::scalar::rat_int(0) {
                        println!("the linear member is holomorphic for some structure");
                    } else {
                        println!("the linear member is holomorphic for no structure");
                    }
                    Ok(())
                }
                Err(e) => Err(CliError::Analysis(e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Analysis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
