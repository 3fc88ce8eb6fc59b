//! `kstates`: census polynomials of two-bridge knot shadows, by brute
//! force or closed form, plus table rendering and self-verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3
//! enumeration cap exceeded. `KSTATES_MAX_CROSSINGS` overrides the
//! default enumeration cap.

use std::env;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kstates::format::{
    format_coeffs, format_histogram, format_human, format_sequence, format_table, TableFormat,
};
use kstates::verify::{self, Fault, VerifyConfig, DEFAULT_SEED};
use kstates_core::closed_forms::{b_ninf, b_nr_classes, b_nr_closed, b_nr_recurrence, coeff_formula};
use kstates_core::tables::{emit_sequence, render_table, ReadOrder, TableName, TableSpec};
use kstates_core::{
    build_two_bridge, DiagramError, ExtendedCount, IntPolynomial, DEFAULT_ENUMERATION_CAP,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kstates",
    version,
    about = "Census polynomials of two-bridge knot shadows: every crossing split two ways, circles counted"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the census polynomial of the (n, r) twist shadow.
    Poly {
        /// East twist count, or "inf".
        n: ExtendedCount,
        /// Bottom twist count, or "inf".
        r: ExtendedCount,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum, default_value_t)]
        format: PolyFormat,
    },
    /// Print one coefficient b(n, r; k) from the binomial formula.
    Coeff { n: u32, r: u32, k: usize },
    /// Brute-force the census over all 2^(n+r) states.
    Enumerate {
        n: ExtendedCount,
        r: ExtendedCount,
        /// Print "k count" lines instead of the coefficient list.
        #[arg(long)]
        histogram: bool,
    },
    /// Render one of the published tables.
    Table {
        /// bn0k, bn1k, bn2k, bnnk, bnr1, bnr2, leading, or degree.
        name: TableName,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
    },
    /// Flatten a table into "index value" lines.
    Seq {
        name: TableName,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// by-rows or by-antidiagonals.
        #[arg(long, default_value = "by-rows")]
        order: ReadOrder,
    },
    /// Run every cross-validation suite; exit 0 iff all pass.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: u32,
        #[arg(long, default_value_t = 7)]
        max_r: u32,
        /// Seed for the randomized structural-law suite.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Corrupt one closed-form coefficient, as "n,r,k" (test hook).
        #[arg(long, hide = true, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Method {
    #[default]
    Closed,
    Recurrence,
    Classes,
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum PolyFormat {
    #[default]
    Coeffs,
    Human,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [n, r, k] = parts.as_slice() else {
        return Err("expected n,r,k".into());
    };
    Ok(Fault {
        n: n.trim().parse().map_err(|e| format!("bad n: {e}"))?,
        r: r.trim().parse().map_err(|e| format!("bad r: {e}"))?,
        k: k.trim().parse().map_err(|e| format!("bad k: {e}"))?,
    })
}

fn enumeration_cap() -> Result<usize, Failure> {
    match env::var("KSTATES_MAX_CROSSINGS") {
        Ok(value) => value.trim().parse().map_err(|_| {
            usage(format!(
                "invalid KSTATES_MAX_CROSSINGS value {value:?}: expected a nonnegative integer"
            ))
        }),
        Err(env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_CAP),
        Err(env::VarError::NotUnicode(_)) => {
            Err(usage("KSTATES_MAX_CROSSINGS is not valid unicode"))
        }
    }
}

fn census(n: u32, r: u32, cap: usize) -> Result<IntPolynomial, Failure> {
    let diagram = build_two_bridge(n.into(), r.into()).expect("finite counts");
    diagram.state_polynomial_with_cap(cap).map_err(|e| match e {
        DiagramError::TooManyCrossings { .. } => Failure {
            code: EXIT_CAP,
            message: format!("{e}; raise KSTATES_MAX_CROSSINGS to allow larger enumerations"),
        },
        other => usage(other.to_string()),
    })
}

/// Finite pair, or a usage error naming the offending subcommand.
fn finite(n: ExtendedCount, r: ExtendedCount, what: &str) -> Result<(u32, u32), Failure> {
    match (n, r) {
        (ExtendedCount::Finite(n), ExtendedCount::Finite(r)) => Ok((n, r)),
        _ => Err(usage(format!("{what} requires finite twist counts"))),
    }
}

fn poly_value(
    n: ExtendedCount,
    r: ExtendedCount,
    method: Method,
    cap: usize,
) -> Result<IntPolynomial, Failure> {
    use ExtendedCount::{Finite, Infinity};
    if let (Infinity, Infinity) = (n, r) {
        return Err(usage(
            "the twist counts cannot both be \"inf\": that pair names no knot shadow",
        ));
    }
    match method {
        Method::Closed => Ok(match (n, r) {
            (Finite(n), Finite(r)) => b_nr_closed(n, r),
            (Finite(k), Infinity) | (Infinity, Finite(k)) => b_ninf(k),
            (Infinity, Infinity) => unreachable!(),
        }),
        Method::Recurrence => Ok(match (n, r) {
            (Finite(n), r) => b_nr_recurrence(n, r),
            (Infinity, Finite(r)) => b_nr_recurrence(r, Infinity),
            (Infinity, Infinity) => unreachable!(),
        }),
        Method::Classes => {
            let (n, r) = finite(n, r, "--method classes")?;
            Ok(b_nr_classes(n, r).sum())
        }
        Method::Enumerate => {
            let (n, r) = finite(n, r, "--method enumerate")?;
            census(n, r, cap)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cap = enumeration_cap()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Poly { n, r, method, format } => {
            let poly = poly_value(n, r, method, cap)?;
            let text = match format {
                PolyFormat::Coeffs => format_coeffs(&poly),
                PolyFormat::Human => format_human(&poly),
            };
            writeln!(out, "{text}").map_err(broken_pipe)?;
        }
        Command::Coeff { n, r, k } => {
            writeln!(out, "{}", coeff_formula(n, r, k)).map_err(broken_pipe)?;
        }
        Command::Enumerate { n, r, histogram } => {
            let (n, r) = finite(n, r, "enumerate")?;
            let poly = census(n, r, cap)?;
            let text = if histogram {
                format_histogram(&poly)
            } else {
                format_coeffs(&poly)
            };
            writeln!(out, "{text}").map_err(broken_pipe)?;
        }
        Command::Table { name, rows, format } => {
            let matrix = render_table(&TableSpec { name, rows });
            writeln!(out, "{}", format_table(&matrix, name.kind(), format)).map_err(broken_pipe)?;
        }
        Command::Seq { name, terms, order } => {
            let values = emit_sequence(name, terms as usize, order);
            writeln!(out, "{}", format_sequence(&values)).map_err(broken_pipe)?;
        }
        Command::Verify { max_n, max_r, seed, inject_fault } => {
            if (max_n + max_r) as usize > cap {
                return Err(usage(format!(
                    "verification enumerates up to {} crossings, beyond the cap of {cap}",
                    max_n + max_r
                )));
            }
            let cfg = VerifyConfig { max_n, max_r, seed, cap, fault: inject_fault };
            let all_passed = verify::run(&cfg, &mut out).map_err(broken_pipe)?;
            if !all_passed {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn broken_pipe(e: io::Error) -> Failure {
    Failure { code: EXIT_USAGE, message: format!("cannot write output: {e}") }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
