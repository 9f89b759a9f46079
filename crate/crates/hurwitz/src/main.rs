//! Command-line front end for the algebra tower.
//!
//! Subcommands expose the library's verification surface: `table` prints a
//! multiplication table, `verify` proves or refutes the composition law,
//! `classify` reports which classical laws survive at a dimension, `suite`
//! re-verifies the geometric propositions on seeded random inputs,
//! `witness` exhibits the dimension-16 zero divisors, `heart` checks the
//! unit-free ♥ product, and `rotate` applies a quaternion rotation to a
//! 3-vector.
//!
//! Every subcommand takes `--format text|machine`. Machine output is
//! schema-stable JSON rendered from the same report values as the text
//! output, and identical invocations produce byte-identical bytes.
//!
//! Exit codes: 0 on success, 1 on malformed arguments, 2 when a
//! verification detects a mathematical failure — so scripts can assert that
//! `verify --dim 16` *must* exit 2 while `verify --dim 8` exits 0.

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz::ops::{rotate, Vector3};
use hurwitz::table::build_table;
use hurwitz::verify::{
    classify_laws, find_zero_divisors, heart_suite, run_proposition_suite, verify_composition,
    Counterexample, LawClassification, ReportMeta, VerificationReport,
};
use hurwitz::{Element, Rational};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    about = "Exact multiplication tables and law verification for the normed algebra tower \
             (dimensions 1, 2, 4, 8, 16) and the unit-free ♥ product"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: human-readable text or schema-stable JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplication table for one dimension (1, 2, 4, 8, 16).
    Table {
        #[arg(long)]
        dim: usize,
    },
    /// Verify the composition law ‖xy‖² = ‖x‖²·‖y‖² by an exhaustive
    /// coefficient-condition sweep. Exits 2 when the law fails (dimension 16).
    Verify {
        #[arg(long)]
        dim: usize,
    },
    /// Report which laws hold (commutative, associative, unit, composition),
    /// with a witness for every failure.
    Classify {
        #[arg(long)]
        dim: usize,
    },
    /// Re-verify the geometric propositions P1–P7 on seeded random
    /// exact-rational inputs for dimensions 2..dim.
    Suite {
        /// Largest dimension to check: 2, 4, or 8.
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search the dimension-16 table for two-term zero divisors and print
    /// the canonical witness step by step.
    Witness,
    /// Check the ♥ product: no unit exists (inconsistent linear system),
    /// yet commutativity and the composition law hold.
    Heart {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rotate a 3-vector by a (possibly unnormalized) quaternion via
    /// q·v·q⁻¹; all coordinates are exact rationals like 1, -2, or 3/5.
    Rotate {
        /// Quaternion as four comma-separated rationals: w,x,y,z.
        #[arg(long)]
        q: String,
        /// Vector as three comma-separated rationals: x,y,z.
        #[arg(long)]
        v: String,
    },
}

fn main() -> ExitCode {
    // die quietly when stdout closes early (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are not usage errors
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Table { dim } => {
            let t = build_table(dim).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => print!("{}", t.render_text()),
                Format::Machine => println!("{}", to_json(&t.machine_document())?),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { dim } => {
            let t = build_table(dim).map_err(|e| e.to_string())?;
            let report = verify_composition(&t);
            match cli.format {
                Format::Text => print_report(&report),
                Format::Machine => println!("{}", to_json(&report)?),
            }
            Ok(verdict_exit(std::slice::from_ref(&report)))
        }

        Command::Classify { dim } => {
            let t = build_table(dim).map_err(|e| e.to_string())?;
            let classification = classify_laws(&t);
            match cli.format {
                Format::Text => print_classification(&classification),
                Format::Machine => println!("{}", to_json(&classification)?),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Suite { dim, trials, seed } => {
            let reports = run_proposition_suite(dim, trials, seed).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    for report in &reports {
                        print_report(report);
                    }
                    let failed = reports.iter().filter(|r| !r.passed).count();
                    if failed == 0 {
                        println!("suite dim={dim}: all {} reports passed", reports.len());
                    } else {
                        println!(
                            "suite dim={dim}: {failed} of {} reports failed",
                            reports.len()
                        );
                    }
                }
                Format::Machine => {
                    let doc = aggregate(
                        format!("suite dim={dim}"),
                        dim,
                        Some(seed),
                        Some(trials),
                        reports.clone(),
                    );
                    println!("{}", to_json(&doc)?);
                }
            }
            Ok(verdict_exit(&reports))
        }

        Command::Witness => {
            let t = build_table(16).map_err(|e| e.to_string())?;
            let report = find_zero_divisors(&t);
            match cli.format {
                Format::Text => print_witness(&report, &t),
                Format::Machine => println!("{}", to_json(&report)?),
            }
            // here *finding* zero divisors is the verified claim
            if report.counterexamples.is_empty() {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::Heart { trials, seed } => {
            let reports = heart_suite(trials, seed);
            match cli.format {
                Format::Text => {
                    for report in &reports {
                        print_report(report);
                    }
                }
                Format::Machine => {
                    let doc = aggregate(
                        "heart".to_string(),
                        2,
                        Some(seed),
                        Some(trials),
                        reports.clone(),
                    );
                    println!("{}", to_json(&doc)?);
                }
            }
            Ok(verdict_exit(&reports))
        }

        Command::Rotate { q, v } => {
            let q = parse_element(&q, 4, "--q")?;
            let v = parse_rationals(&v, 3, "--v")?;
            let v = Vector3::new(v[0].clone(), v[1].clone(), v[2].clone());
            let image = rotate(&q, &v).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{}, {}, {}", image.x, image.y, image.z),
                Format::Machine => {
                    let doc = serde_json::json!({
                        "x": image.x.to_string(),
                        "y": image.y.to_string(),
                        "z": image.z.to_string(),
                    });
                    println!("{doc}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Machine documents for the multi-report subcommands: a summary object in
/// the ordinary report schema plus the full per-check reports.
#[derive(Serialize)]
struct SuiteDocument {
    #[serde(flatten)]
    summary: VerificationReport,
    reports: Vec<VerificationReport>,
}

fn aggregate(
    subject: String,
    dim: usize,
    seed: Option<u64>,
    trials: Option<u64>,
    reports: Vec<VerificationReport>,
) -> SuiteDocument {
    let checked = reports.iter().map(|r| r.checked_count).sum();
    let counterexamples: Vec<Counterexample> = reports
        .iter()
        .flat_map(|r| r.counterexamples.iter().cloned())
        .collect();
    let summary = VerificationReport::new(
        subject,
        checked,
        counterexamples,
        ReportMeta { dim, seed, trials },
        "",
    );
    SuiteDocument { summary, reports }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Exit 0 when every report passed, 2 otherwise.
fn verdict_exit(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn print_report(report: &VerificationReport) {
    let verdict = if report.is_skipped() {
        "skipped"
    } else if report.passed {
        "passed"
    } else {
        "failed"
    };
    println!(
        "{}: {verdict}, {} conditions checked",
        report.subject, report.checked_count
    );
    if !report.runtime_note.is_empty() {
        println!("  {}", report.runtime_note);
    }
    for counterexample in report.counterexamples.iter().take(3) {
        println!(
            "  {} at {:?}: expected {}, got {}",
            counterexample.kind,
            counterexample.indices,
            counterexample.expected,
            counterexample.actual
        );
    }
    let extra = report.counterexamples.len().saturating_sub(3);
    if extra > 0 {
        println!("  … and {extra} more counterexamples");
    }
}

fn print_classification(c: &LawClassification) {
    let mark = |ok: bool| if ok { "✓" } else { "✗" };
    println!(
        "dim={}: commutative {}, associative {}, unit {}, composition {}",
        c.dim,
        mark(c.commutative),
        mark(c.associative),
        mark(c.has_unit),
        mark(c.composition)
    );
    for (law, witness) in &c.witness_per_failed_law {
        println!(
            "  {law} fails at indices {:?}: got {}, needed {}",
            witness.indices, witness.actual, witness.expected
        );
    }
}

/// Step-by-step text for the zero-divisor witness: factors, norms, product.
fn print_witness(report: &VerificationReport, t: &hurwitz::StructureTable) {
    println!(
        "zero-divisor search dim=16: {} two-term products checked, {} vanish",
        report.checked_count,
        report.counterexamples.len()
    );
    // prefer the canonical (e3+e12)(e5+e10) pair when present
    let canonical = report
        .counterexamples
        .iter()
        .find(|c| c.indices == [3, 12, 5, 10])
        .or_else(|| report.counterexamples.first());
    let Some(witness) = canonical else {
        println!("no zero divisors found");
        return;
    };
    let [a, b, c, d] = witness.indices[..] else {
        return;
    };
    let left = &witness.elements[0];
    let right = &witness.elements[1];
    let describe = |first: usize, second: usize, element: &Element| {
        let sign = if element.coeff(second).is_negative() {
            "-"
        } else {
            "+"
        };
        format!(
            "e{first} {sign} e{second}  ({} {sign} {})",
            t.label(first),
            t.label(second)
        )
    };
    println!(
        "  x = {}   norm_sq(x) = {}",
        describe(a, b, left),
        left.norm_sq()
    );
    println!(
        "  y = {}   norm_sq(y) = {}",
        describe(c, d, right),
        right.norm_sq()
    );
    println!("  x·y = {}", witness.actual);
    println!(
        "  composition would need norm_sq(x·y) = {}, so the law fails",
        left.norm_sq() * right.norm_sq()
    );
}

/// Parses `count` comma-separated exact rationals.
fn parse_rationals(input: &str, count: usize, flag: &str) -> Result<Vec<Rational>, String> {
    let parts: Vec<&str> = input.split(',').collect();
    if parts.len() != count {
        return Err(format!(
            "{flag} needs {count} comma-separated rationals, got {}",
            parts.len()
        ));
    }
    parts
        .iter()
        .map(|p| p.parse::<Rational>().map_err(|e| format!("{flag}: {e}")))
        .collect()
}

fn parse_element(input: &str, dim: usize, flag: &str) -> Result<Element, String> {
    Ok(Element::new(parse_rationals(input, dim, flag)?))
}
